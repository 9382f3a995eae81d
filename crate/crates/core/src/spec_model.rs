//! The finite declared spectrum: labeled homogeneous primes with
//! containment decided by ideal membership.

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GbOptions, GroebnerBasis};
use crate::ideal::Ideal;
use crate::poset::Poset;
use crate::ring::Ring;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimalityStatus {
    /// Monomial ideal generated by a subset of the variables in a free
    /// presentation: prime by inspection.
    VerifiedMonomial,
    /// Primality asserted by the declaration.
    Asserted,
}

#[derive(Clone)]
pub struct PrimeDecl {
    pub label: String,
    pub ideal: Ideal,
    pub status: PrimalityStatus,
    gb: GroebnerBasis,
}

impl PrimeDecl {
    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }
}

/// A finite user-declared poset of homogeneous primes. Containment is
/// computed by Groebner membership of generators and validated as a partial
/// order at construction.
#[derive(Clone)]
pub struct SpecModel {
    ring: Ring,
    primes: Vec<PrimeDecl>,
    poset: Poset,
}

impl SpecModel {
    pub fn new(
        ring: &Ring,
        decls: Vec<(String, Ideal, bool)>,
        opts: &GbOptions,
    ) -> Result<SpecModel> {
        let mut primes = Vec::new();
        for (label, ideal, assert_prime) in decls {
            if !ideal.ring().same(ring) {
                return Err(Error::RingMismatch);
            }
            let status = if !ring.has_relations() && ideal.is_variable_generated() {
                PrimalityStatus::VerifiedMonomial
            } else if assert_prime {
                PrimalityStatus::Asserted
            } else {
                return Err(Error::PrimalityUnverified(label));
            };
            let gb = groebner_basis(&ideal, opts)?;
            primes.push(PrimeDecl { label, ideal, status, gb });
        }
        let n = primes.len();
        let mut labels: Vec<&str> = primes.iter().map(|p| p.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != n {
            return Err(Error::BadSpec("duplicate prime labels".into()));
        }
        // p <= q iff every generator of p lies in q
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut all_in = true;
                for g in primes[i].ideal.generators() {
                    if !primes[j].gb.contains(g)? {
                        all_in = false;
                        break;
                    }
                }
                leq[i * n + j] = all_in;
            }
        }
        // antisymmetry on distinct declared ideals is part of Poset::new
        let poset = Poset::new(n, leq)?;
        Ok(SpecModel { ring: ring.clone(), primes, poset })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn primes(&self) -> &[PrimeDecl] {
        &self.primes
    }

    pub fn prime(&self, i: usize) -> &PrimeDecl {
        &self.primes[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.primes[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.primes.iter().position(|p| p.label == label)
    }

    /// Labels of the primes whose status is only asserted.
    pub fn asserted_labels(&self) -> Vec<&str> {
        self.primes
            .iter()
            .filter(|p| p.status == PrimalityStatus::Asserted)
            .map(|p| p.label.as_str())
            .collect()
    }
}

impl fmt::Debug for SpecModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.primes.iter().map(|p| p.label.as_str()).collect();
        write!(f, "SpecModel{{{}}}", labels.join(", "))
    }
}

/// The standard four-point spectrum of `F_p[x, y]`:
/// `(0) < (x), (y) < (x, y)`.
pub fn four_prime_spec(ring: &Ring, opts: &GbOptions) -> Result<SpecModel> {
    SpecModel::new(
        ring,
        vec![
            ("(0)".to_string(), Ideal::zero(ring), true),
            ("(x)".to_string(), Ideal::parse(ring, &["x"])?, true),
            ("(y)".to_string(), Ideal::parse(ring, &["y"])?, true),
            ("(x,y)".to_string(), Ideal::parse(ring, &["x", "y"])?, true),
        ],
        opts,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;

    fn ring() -> Ring {
        Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap()
    }

    #[test]
    fn four_primes_form_a_diamond() {
        let r = ring();
        let s = four_prime_spec(&r, &GbOptions::default()).unwrap();
        assert_eq!(s.len(), 4);
        let p = s.poset();
        let zero = s.index_of("(0)").unwrap();
        let x = s.index_of("(x)").unwrap();
        let y = s.index_of("(y)").unwrap();
        let xy = s.index_of("(x,y)").unwrap();
        assert!(p.le(zero, x) && p.le(zero, y) && p.le(x, xy) && p.le(y, xy));
        assert!(!p.le(x, y) && !p.le(y, x));
        assert_eq!(p.dim_subset(p.full_mask()), Some(2));
        // verified monomial status in the free presentation
        assert_eq!(s.prime(x).status, PrimalityStatus::VerifiedMonomial);
        assert_eq!(s.prime(zero).status, PrimalityStatus::VerifiedMonomial);
    }

    #[test]
    fn quotient_ring_requires_assertion() {
        let r = ring().with_relations(&["x*y"]).unwrap();
        let err = SpecModel::new(
            &r,
            vec![("(x)".to_string(), Ideal::parse(&r, &["x"]).unwrap(), false)],
            &GbOptions::default(),
        );
        assert!(matches!(err, Err(Error::PrimalityUnverified(_))));
        let ok = SpecModel::new(
            &r,
            vec![
                ("(x)".to_string(), Ideal::parse(&r, &["x"]).unwrap(), true),
                ("(y)".to_string(), Ideal::parse(&r, &["y"]).unwrap(), true),
                ("(x,y)".to_string(), Ideal::parse(&r, &["x", "y"]).unwrap(), true),
            ],
            &GbOptions::default(),
        )
        .unwrap();
        assert_eq!(ok.asserted_labels().len(), 3);
    }

    #[test]
    fn duplicate_ideals_rejected() {
        // (x) and (x, x^2) are the same ideal: antisymmetry must fail
        let r = ring();
        let err = SpecModel::new(
            &r,
            vec![
                ("a".to_string(), Ideal::parse(&r, &["x"]).unwrap(), true),
                ("b".to_string(), Ideal::parse(&r, &["x", "x^2"]).unwrap(), true),
            ],
            &GbOptions::default(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn containment_uses_membership_not_syntax() {
        let r = ring();
        let s = SpecModel::new(
            &r,
            vec![
                ("p".to_string(), Ideal::parse(&r, &["x + y"]).unwrap(), true),
                ("m".to_string(), Ideal::parse(&r, &["x", "y"]).unwrap(), true),
            ],
            &GbOptions::default(),
        )
        .unwrap();
        assert!(s.poset().le(0, 1));
        assert!(!s.poset().le(1, 0));
    }
}

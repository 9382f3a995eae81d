//! Graded ring presentations `A = k[x_1..x_n]/I` with a fixed monomial order.

use crate::arith::{tl_to_mpoly, TermList};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::gbcore::{self, GbConfig, Track};
use crate::monomial::{mono_is_one, mono_wdeg, Monomial, TermOrder};
use crate::poly::Poly;
use sha2::{Digest, Sha256};
use std::fmt;
use std::sync::{Arc, OnceLock};

pub struct RingData {
    field: PrimeField,
    vars: Vec<(String, i64)>,
    order: TermOrder,
    /// Defining relations, stored as canonical raw term lists.
    relations: Vec<TermList>,
    relations_gb: OnceLock<std::result::Result<Vec<TermList>, Error>>,
    fingerprint: u64,
}

/// Shared handle to a ring presentation. Cheap to clone; all values are
/// immutable after construction.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring(F{}[{}]", self.field().p(), self.0.vars.iter().map(|(n, d)| format!("{n}:{d}")).collect::<Vec<_>>().join(","))?;
        if !self.0.relations.is_empty() {
            write!(f, "/({} relations)", self.0.relations.len())?;
        }
        write!(f, ", {})", self.0.order.name())
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.0.fingerprint == other.0.fingerprint
    }
}
impl Eq for Ring {}

fn valid_var_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars().next().unwrap().is_ascii_alphabetic()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// A free polynomial ring. Degrees must be nonnegative, and even unless
    /// `p = 2` (graded-commutative = commutative is needed for plain
    /// Buchberger).
    pub fn new(p: u64, vars: &[(&str, i64)], order: TermOrder) -> Result<Ring> {
        let field = PrimeField::new(p)?;
        for (name, deg) in vars {
            if !valid_var_name(name) {
                return Err(Error::BadRing(format!("invalid variable name `{name}`")));
            }
            if *deg < 0 {
                return Err(Error::BadRing(format!("variable `{name}` has negative degree {deg}")));
            }
            if p != 2 && deg % 2 != 0 {
                return Err(Error::BadRing(format!(
                    "variable `{name}` has odd degree {deg}; odd degrees require characteristic 2"
                )));
            }
        }
        let mut names: Vec<&str> = vars.iter().map(|(n, _)| *n).collect();
        names.sort_unstable();
        names.dedup();
        if names.len() != vars.len() {
            return Err(Error::BadRing("duplicate variable names".into()));
        }
        Ok(Self::assemble(
            field,
            vars.iter().map(|(n, d)| (n.to_string(), *d)).collect(),
            order,
            Vec::new(),
        ))
    }

    /// The quotient of this ring by homogeneous relations, parsed in `self`.
    pub fn with_relations(&self, relations: &[&str]) -> Result<Ring> {
        let mut rels: Vec<TermList> = Vec::new();
        for s in relations {
            let p = self.parse(s)?;
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("relation `{s}`")));
            }
            if !p.is_zero() {
                rels.push(p.terms().to_vec());
            }
        }
        let mut canon: Vec<String> = Vec::new();
        for r in &rels {
            canon.push(self.format_terms(r));
        }
        canon.sort();
        canon.dedup();
        // re-parse in canonical sorted order so the fingerprint is stable
        let mut sorted: Vec<TermList> = Vec::new();
        for s in &canon {
            sorted.push(self.parse(s)?.terms().to_vec());
        }
        Ok(Self::assemble(self.field(), self.0.vars.clone(), self.0.order, sorted))
    }

    /// Internal constructor bypassing degree checks; used for auxiliary
    /// variables of zero or negative degree.
    pub(crate) fn assemble(
        field: PrimeField,
        vars: Vec<(String, i64)>,
        order: TermOrder,
        relations: Vec<TermList>,
    ) -> Ring {
        let mut hasher = Sha256::new();
        hasher.update(field.p().to_le_bytes());
        hasher.update(order.name().as_bytes());
        for (n, d) in &vars {
            hasher.update(n.as_bytes());
            hasher.update(b":");
            hasher.update(d.to_le_bytes());
            hasher.update(b";");
        }
        let tmp = RingData {
            field,
            vars: vars.clone(),
            order,
            relations: relations.clone(),
            relations_gb: OnceLock::new(),
            fingerprint: 0,
        };
        let tmp_ring = Ring(Arc::new(tmp));
        let mut rel_strs: Vec<String> =
            relations.iter().map(|r| tmp_ring.format_terms(r)).collect();
        rel_strs.sort();
        for s in &rel_strs {
            hasher.update(s.as_bytes());
            hasher.update(b"|");
        }
        let digest = hasher.finalize();
        let fingerprint = u64::from_le_bytes(digest[..8].try_into().unwrap());
        Ring(Arc::new(RingData {
            field,
            vars,
            order,
            relations,
            relations_gb: OnceLock::new(),
            fingerprint,
        }))
    }

    /// Ring with one extra variable appended (no degree restrictions); the
    /// relations are lifted. Optionally the order eliminates the new
    /// variable.
    pub(crate) fn extend_variable(&self, name: &str, degree: i64, elim: bool) -> Ring {
        let mut vars = self.0.vars.clone();
        let mut name = name.to_string();
        while vars.iter().any(|(n, _)| *n == name) {
            name.push('_');
        }
        vars.push((name, degree));
        let relations: Vec<TermList> = self
            .0
            .relations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(m, c)| {
                        let mut m2 = m.clone();
                        m2.push(0);
                        (m2, *c)
                    })
                    .collect()
            })
            .collect();
        let order = TermOrder { kind: self.0.order.kind, elim_last: elim };
        Self::assemble(self.field(), vars, order, relations)
    }

    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    pub fn order(&self) -> TermOrder {
        self.0.order
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.0.vars.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn var_degrees(&self) -> Vec<i64> {
        self.0.vars.iter().map(|(_, d)| *d).collect()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|(n, _)| n == name)
    }

    pub fn fingerprint(&self) -> u64 {
        self.0.fingerprint
    }

    pub fn same(&self, other: &Ring) -> bool {
        self.0.fingerprint == other.0.fingerprint
    }

    pub fn has_relations(&self) -> bool {
        !self.0.relations.is_empty()
    }

    pub(crate) fn relations_raw(&self) -> &[TermList] {
        &self.0.relations
    }

    pub fn relations(&self) -> Vec<Poly> {
        self.0
            .relations
            .iter()
            .map(|r| Poly::from_raw(self.clone(), r.clone()))
            .collect()
    }

    /// Reduced Groebner basis of the defining relations, computed once.
    pub(crate) fn relations_gb_raw(&self) -> Result<&[TermList]> {
        let res = self.0.relations_gb.get_or_init(|| {
            if self.0.relations.is_empty() {
                return Ok(Vec::new());
            }
            let inputs: Vec<_> = self.0.relations.iter().map(|r| tl_to_mpoly(r, 0)).collect();
            let out = gbcore::buchberger(
                self.field(),
                self.order(),
                &inputs,
                GbConfig { degree_ceiling: 64, track: Track::None },
            )?;
            Ok(out.basis.iter().map(crate::arith::mpoly_to_tl).collect())
        });
        match res {
            Ok(v) => Ok(v.as_slice()),
            Err(e) => Err(e.clone()),
        }
    }

    /// Normal form of a raw term list modulo the defining relations: the
    /// canonical representative of the class in `A`.
    pub(crate) fn nf_raw(&self, f: &TermList) -> Result<TermList> {
        if self.0.relations.is_empty() {
            return Ok(f.clone());
        }
        let gb = self.relations_gb_raw()?;
        Ok(gbcore::normal_form_tl(self.field(), self.order(), gb, f))
    }

    pub fn weighted_degree(&self, m: &Monomial) -> i64 {
        mono_wdeg(m, &self.var_degrees())
    }

    // ---- element constructors ----

    pub fn zero(&self) -> Poly {
        Poly::from_raw(self.clone(), Vec::new())
    }

    pub fn one(&self) -> Poly {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Poly {
        let c = self.field().reduce_i64(c);
        if c == 0 {
            return self.zero();
        }
        Poly::from_raw(self.clone(), vec![(vec![0; self.nvars()], c)])
    }

    pub fn var(&self, i: usize) -> Poly {
        let mut m = vec![0u32; self.nvars()];
        m[i] = 1;
        Poly::from_raw(self.clone(), vec![(m, 1)])
    }

    pub fn monomial(&self, exps: &[u32], c: i64) -> Poly {
        assert_eq!(exps.len(), self.nvars());
        let c = self.field().reduce_i64(c);
        if c == 0 {
            return self.zero();
        }
        Poly::from_raw(self.clone(), vec![(exps.to_vec(), c)])
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        crate::parse::parse_poly(self, s)
    }

    /// Canonical display of a raw term list with this ring's variable names.
    pub(crate) fn format_terms(&self, f: &TermList) -> String {
        if f.is_empty() {
            return "0".to_string();
        }
        let names = self.var_names();
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in f {
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || mono_is_one(m) {
                factors.push(c.to_string());
            }
            for (i, &e) in m.iter().enumerate() {
                if e == 1 {
                    factors.push(names[i].to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_odd_degrees_unless_char_two() {
        assert!(Ring::new(101, &[("x", 3)], TermOrder::grevlex()).is_err());
        assert!(Ring::new(2, &[("x", 3)], TermOrder::grevlex()).is_ok());
        assert!(Ring::new(101, &[("x", 0)], TermOrder::grevlex()).is_ok());
        assert!(Ring::new(101, &[("x", -2)], TermOrder::grevlex()).is_err());
    }

    #[test]
    fn fingerprints_distinguish_presentations() {
        let a = Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap();
        let b = Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::lex()).unwrap();
        let c = a.with_relations(&["x*y"]).unwrap();
        assert_ne!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), c.fingerprint());
        let c2 = a.with_relations(&["x*y"]).unwrap();
        assert_eq!(c.fingerprint(), c2.fingerprint());
    }

    #[test]
    fn rejects_inhomogeneous_relations() {
        let a = Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap();
        assert!(a.with_relations(&["x + x*y"]).is_err());
        assert!(a.with_relations(&["x^2 - y^2"]).is_ok());
    }
}

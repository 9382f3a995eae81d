//! Multivariate graded polynomials over a prime field.
//!
//! Arithmetic stays in the free polynomial ring; passing to the quotient by
//! the ring's relations is explicit (`reduce_in_ring`, `is_zero_in_ring`).
//! Term lists are kept sorted descending in the ring's order, with no zero
//! coefficients, so equal polynomials have equal representations.

use crate::arith::{mpoly_to_tl, mpoly_normalize, tl_mul, tl_neg, tl_to_mpoly, TermList};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::Ring;
use std::fmt;

#[derive(Clone)]
pub struct Poly {
    ring: Ring,
    terms: TermList,
    /// Common internal degree of all terms, when homogeneous and nonzero.
    degree: Option<i64>,
    homogeneous: bool,
}

impl Poly {
    /// Wrap a raw term list, canonicalizing and caching homogeneity data.
    pub(crate) fn from_raw(ring: Ring, terms: TermList) -> Poly {
        let terms = mpoly_to_tl(&mpoly_normalize(
            ring.field(),
            ring.order(),
            tl_to_mpoly(&terms, 0),
        ));
        let weights = ring.var_degrees();
        let mut degree: Option<i64> = None;
        let mut homogeneous = true;
        for (m, _) in &terms {
            let d = crate::monomial::mono_wdeg(m, &weights);
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => {
                    homogeneous = false;
                    degree = None;
                    break;
                }
                _ => {}
            }
        }
        if terms.is_empty() {
            degree = None;
            homogeneous = true;
        }
        Poly { ring, terms, degree, homogeneous }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &TermList {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Homogeneous including zero; inhomogeneous polynomials return false.
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// The common internal degree of all terms; absent for zero and for
    /// inhomogeneous polynomials.
    pub fn degree(&self) -> Option<i64> {
        self.degree
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Monomial, u64)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    /// Nonzero constant (degree-0, single-term, exponent-free) test.
    pub fn as_nonzero_scalar(&self) -> Option<u64> {
        if self.terms.len() == 1 && crate::monomial::mono_is_one(&self.terms[0].0) {
            Some(self.terms[0].1)
        } else {
            None
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(Poly::from_raw(
            self.ring.clone(),
            crate::arith::tl_add(self.ring.field(), self.ring.order(), &self.terms, &other.terms),
        ))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly::from_raw(self.ring.clone(), tl_neg(self.ring.field(), &self.terms))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(Poly::from_raw(
            self.ring.clone(),
            tl_mul(self.ring.field(), self.ring.order(), &self.terms, &other.terms),
        ))
    }

    pub fn mul_scalar(&self, c: i64) -> Poly {
        let c = self.ring.field().reduce_i64(c);
        Poly::from_raw(
            self.ring.clone(),
            self.terms.iter().map(|(m, a)| (m.clone(), self.ring.field().mul(*a, c))).collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self).unwrap();
        }
        acc
    }

    /// Canonical representative modulo the defining relations.
    pub fn reduce_in_ring(&self) -> Result<Poly> {
        if !self.ring.has_relations() {
            return Ok(self.clone());
        }
        Ok(Poly::from_raw(self.ring.clone(), self.ring.nf_raw(&self.terms)?))
    }

    /// Zero test in the quotient ring `A`.
    pub fn is_zero_in_ring(&self) -> Result<bool> {
        Ok(self.reduce_in_ring()?.is_zero())
    }

    pub fn eq_in_ring(&self, other: &Poly) -> Result<bool> {
        self.check_ring(other)?;
        self.sub(other)?.is_zero_in_ring()
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Poly {}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.format_terms(&self.terms))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// The spec-level operation names, delegating to the methods.
pub fn poly_add(f: &Poly, g: &Poly) -> Result<Poly> {
    f.add(g)
}

pub fn poly_mul(f: &Poly, g: &Poly) -> Result<Poly> {
    f.mul(g)
}

pub fn homogeneous_degree(f: &Poly) -> Option<i64> {
    f.degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring() -> Ring {
        Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let r = ring();
        let x = r.parse("x").unwrap();
        let nx = r.parse("100*x").unwrap();
        let s = x.add(&nx).unwrap();
        assert!(s.is_zero());
        assert!(s.terms().is_empty());
    }

    #[test]
    fn add_keeps_distinct_terms() {
        let r = ring();
        let s = r.parse("x").unwrap().add(&r.parse("y").unwrap()).unwrap();
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.to_string(), "x + y");
    }

    #[test]
    fn derived_sum_example() {
        // (x^2 + y^2) + x^2 = 2x^2 + y^2 over F_101, by direct coefficient
        // arithmetic on each monomial
        let r = ring();
        let s = r.parse("x^2+y^2").unwrap().add(&r.parse("x^2").unwrap()).unwrap();
        assert_eq!(s.to_string(), "2*x^2 + y^2");
    }

    #[test]
    fn unit_and_simple_products() {
        let r = ring();
        let f = r.parse("3*x^2 - y*x").unwrap();
        assert_eq!(f.mul(&r.one()).unwrap(), f);
        assert_eq!(r.parse("x").unwrap().mul(&r.parse("y").unwrap()).unwrap().to_string(), "x*y");
    }

    #[test]
    fn square_matches_schoolbook_expansion() {
        // (x+y)^2 expanded by the independent schoolbook convolution
        let r = ring();
        let f = r.parse("x+y").unwrap();
        let sq = f.mul(&f).unwrap();
        // convolution oracle: coefficient of x^a y^b is sum over splittings
        let mut coeff_x2 = 0u64;
        let mut coeff_xy = 0u64;
        let mut coeff_y2 = 0u64;
        for (m1, c1) in f.terms() {
            for (m2, c2) in f.terms() {
                let prod = [m1[0] + m2[0], m1[1] + m2[1]];
                let c = r.field().mul(*c1, *c2);
                match prod {
                    [2, 0] => coeff_x2 = r.field().add(coeff_x2, c),
                    [1, 1] => coeff_xy = r.field().add(coeff_xy, c),
                    [0, 2] => coeff_y2 = r.field().add(coeff_y2, c),
                    _ => unreachable!(),
                }
            }
        }
        assert_eq!(sq, r.parse("x^2 + 2*x*y + y^2").unwrap());
        assert_eq!((coeff_x2, coeff_xy, coeff_y2), (1, 2, 1));
    }

    #[test]
    fn homogeneous_degree_cases() {
        let r = ring();
        assert_eq!(r.parse("x").unwrap().degree(), Some(2));
        assert_eq!(r.parse("x+y").unwrap().degree(), Some(2));
        assert_eq!(r.parse("x + x^2").unwrap().degree(), None);
        assert!(!r.parse("x + x^2").unwrap().is_homogeneous());
        assert_eq!(r.zero().degree(), None);
        assert!(r.zero().is_homogeneous());
        assert_eq!(r.parse("5").unwrap().degree(), Some(0));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring();
        let s = Ring::new(7, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap();
        assert!(matches!(
            r.parse("x").unwrap().add(&s.parse("x").unwrap()),
            Err(Error::RingMismatch)
        ));
    }

    fn random_poly(r: &Ring, rng: &mut ChaCha8Rng) -> Poly {
        let mut acc = r.zero();
        for _ in 0..rng.gen_range(0..6) {
            let m = vec![rng.gen_range(0..4u32), rng.gen_range(0..4u32)];
            let c = rng.gen_range(0..101i64);
            acc = acc.add(&r.monomial(&m, c)).unwrap();
        }
        acc
    }

    #[test]
    fn ring_axioms_randomized() {
        // associativity, commutativity, distributivity on 1000 random triples
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(0xA1);
        for _ in 0..1000 {
            let (f, g, h) =
                (random_poly(&r, &mut rng), random_poly(&r, &mut rng), random_poly(&r, &mut rng));
            assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            assert_eq!(
                f.add(&g).unwrap().add(&h).unwrap(),
                f.add(&g.add(&h).unwrap()).unwrap()
            );
            assert_eq!(
                f.mul(&g).unwrap().mul(&h).unwrap(),
                f.mul(&g.mul(&h).unwrap()).unwrap()
            );
            assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
            assert!(f.sub(&f).unwrap().is_zero());
        }
    }

    #[test]
    fn product_degree_adds() {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(0xA2);
        let mut seen = 0;
        while seen < 200 {
            let f = random_poly(&r, &mut rng);
            let g = random_poly(&r, &mut rng);
            if let (Some(df), Some(dg)) = (f.degree(), g.degree()) {
                let p = f.mul(&g).unwrap();
                // over a domain presentation the product of nonzero
                // homogeneous elements is nonzero of the summed degree
                assert_eq!(p.degree(), Some(df + dg));
                seen += 1;
            }
        }
    }
}

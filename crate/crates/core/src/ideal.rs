//! Homogeneous ideals in a graded ring presentation.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;
use std::fmt;

/// An ideal of `A`, given by homogeneous generators. Zero generators are
/// dropped on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Result<Ideal> {
        let mut kept = Vec::new();
        for g in gens {
            if !g.ring().same(ring) {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("ideal generator `{g}`")));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: kept })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators are single variables (up to scalar). Used by the spectrum
    /// model to certify primality of monomial ideals in free presentations.
    pub fn is_variable_generated(&self) -> bool {
        self.gens.iter().all(|g| {
            g.num_terms() == 1 && {
                let (m, _) = g.leading().unwrap();
                m.iter().filter(|&&e| e != 0).count() == 1
                    && m.iter().all(|&e| e <= 1)
            }
        })
    }

    /// Canonical sorted display strings of the generators.
    pub fn sorted_gen_strings(&self) -> Vec<String> {
        let mut v: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        v.sort();
        v
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.sorted_gen_strings().join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

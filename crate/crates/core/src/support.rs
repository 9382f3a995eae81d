//! Support sets over the declared spectrum.
//!
//! For a finitely generated module the support inside the model is
//! `V(Ann M)`; for a perfect complex it is the union over the homology
//! modules. The big support is the specialization closure.

use crate::complex::FreeComplex;
use crate::error::{Error, Result};
use crate::groebner::GbOptions;
use crate::homology;
use crate::ideal::Ideal;
use crate::module::GradedModule;
use crate::spec_model::SpecModel;
use std::fmt;

/// A subset of the declared primes, as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportSet {
    bits: u64,
    len: usize,
}

impl SupportSet {
    pub fn empty(model: &SpecModel) -> SupportSet {
        SupportSet { bits: 0, len: model.len() }
    }

    pub fn full(model: &SpecModel) -> SupportSet {
        SupportSet { bits: if model.len() == 0 { 0 } else { (1 << model.len()) - 1 }, len: model.len() }
    }

    pub fn from_bits(model: &SpecModel, bits: u64) -> SupportSet {
        SupportSet { bits, len: model.len() }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.bits |= 1 << i;
    }

    pub fn union(&self, other: &SupportSet) -> SupportSet {
        debug_assert_eq!(self.len, other.len);
        SupportSet { bits: self.bits | other.bits, len: self.len }
    }

    pub fn intersect(&self, other: &SupportSet) -> SupportSet {
        debug_assert_eq!(self.len, other.len);
        SupportSet { bits: self.bits & other.bits, len: self.len }
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(&self, other: &SupportSet) -> bool {
        self.bits & other.bits == self.bits
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.len).filter(|i| self.contains(*i)).collect()
    }

    /// Sorted prime labels, the canonical report serialization.
    pub fn labels(&self, model: &SpecModel) -> Vec<String> {
        let mut v: Vec<String> =
            self.indices().iter().map(|&i| model.label(i).to_string()).collect();
        v.sort();
        v
    }

    pub fn render(&self, model: &SpecModel) -> String {
        self.labels(model).join(", ")
    }
}

impl fmt::Debug for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SupportSet({:b})", self.bits)
    }
}

/// `V(I)` inside the model: declared primes containing the ideal.
pub fn v_set(model: &SpecModel, ideal: &Ideal) -> Result<SupportSet> {
    if !ideal.ring().same(model.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut out = SupportSet::empty(model);
    'primes: for (i, p) in model.primes().iter().enumerate() {
        for g in ideal.generators() {
            if !p.basis().contains(g)? {
                continue 'primes;
            }
        }
        out.insert(i);
    }
    Ok(out)
}

/// `Z(p)`: declared primes not contained in `p`.
pub fn z_set(model: &SpecModel, prime: usize) -> SupportSet {
    SupportSet::from_bits(model, model.poset().not_below(prime))
}

/// Support of a finitely generated module: `V(Ann M)` in the model.
pub fn supp_module(model: &SpecModel, m: &GradedModule, opts: &GbOptions) -> Result<SupportSet> {
    if !m.ring().same(model.ring()) {
        return Err(Error::RingMismatch);
    }
    let ann = m.annihilator(opts)?;
    // unit annihilator: the zero module is supported nowhere
    if ann.generators().iter().any(|g| g.as_nonzero_scalar().is_some()) {
        return Ok(SupportSet::empty(model));
    }
    v_set(model, &ann)
}

/// Support of a perfect complex: union of the homology supports.
pub fn supp_complex(model: &SpecModel, x: &FreeComplex, opts: &GbOptions) -> Result<SupportSet> {
    let mut out = SupportSet::empty(model);
    if x.is_zero() {
        return Ok(out);
    }
    for i in x.lo()..=x.hi() {
        let h = homology::homology(x, i, opts)?;
        out = out.union(&supp_module(model, &h, opts)?);
        if out == SupportSet::full(model) {
            break;
        }
    }
    Ok(out)
}

/// Big support: specialization closure of the support within the model.
pub fn big_supp(model: &SpecModel, x: &FreeComplex, opts: &GbOptions) -> Result<SupportSet> {
    let s = supp_complex(model, x, opts)?;
    Ok(SupportSet::from_bits(model, model.poset().closure_up(s.bits())))
}

pub fn closure(model: &SpecModel, s: &SupportSet) -> SupportSet {
    SupportSet::from_bits(model, model.poset().closure_up(s.bits()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{koszul_ideal, koszul_object};
    use crate::monomial::TermOrder;
    use crate::ring::Ring;
    use crate::spec_model::four_prime_spec;

    fn setup() -> (Ring, SpecModel) {
        let r = Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap();
        let s = four_prime_spec(&r, &GbOptions::default()).unwrap();
        (r, s)
    }

    #[test]
    fn v_and_z_sets() {
        let (r, s) = setup();
        let all = v_set(&s, &Ideal::zero(&r)).unwrap();
        assert_eq!(all, SupportSet::full(&s));
        let vx = v_set(&s, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert_eq!(vx.labels(&s), vec!["(x)", "(x,y)"]);
        let zx = z_set(&s, s.index_of("(x)").unwrap());
        assert_eq!(zx.labels(&s), vec!["(x,y)", "(y)"]);
        // V(p) \ Z(p) = {p}
        for i in 0..s.len() {
            let v = v_set(&s, &s.prime(i).ideal).unwrap();
            let z = z_set(&s, i);
            let diff = v.bits() & !z.bits();
            assert_eq!(diff, 1 << i);
        }
    }

    #[test]
    fn module_supports() {
        let (r, s) = setup();
        let o = GbOptions::default();
        let zero = GradedModule::free(&r, vec![]);
        assert!(supp_module(&s, &zero, &o).unwrap().is_empty());
        let free = GradedModule::free(&r, vec![0]);
        assert_eq!(supp_module(&s, &free, &o).unwrap(), SupportSet::full(&s));
        let ax = GradedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert_eq!(supp_module(&s, &ax, &o).unwrap().labels(&s), vec!["(x)", "(x,y)"]);
    }

    #[test]
    fn complex_supports() {
        let (r, s) = setup();
        let o = GbOptions::default();
        let a = FreeComplex::unit(&r);
        let kx = koszul_object(&a, &r.parse("x").unwrap()).unwrap();
        assert_eq!(supp_complex(&s, &kx, &o).unwrap().labels(&s), vec!["(x)", "(x,y)"]);
        // shift invariance
        assert_eq!(
            supp_complex(&s, &kx.shift(3), &o).unwrap(),
            supp_complex(&s, &kx, &o).unwrap()
        );
        // acyclic: empty
        let c = crate::complex::cone(&crate::complex::ChainMap::identity(&kx)).unwrap();
        assert!(supp_complex(&s, &c, &o).unwrap().is_empty());
        // two-element Koszul object: supported at the maximal ideal only
        let kxy =
            koszul_ideal(&a, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        assert_eq!(supp_complex(&s, &kxy, &o).unwrap().labels(&s), vec!["(x,y)"]);
    }

    #[test]
    fn big_supp_contains_supp() {
        let (r, s) = setup();
        let o = GbOptions::default();
        let kx = koszul_object(&FreeComplex::unit(&r), &r.parse("x").unwrap()).unwrap();
        let small = supp_complex(&s, &kx, &o).unwrap();
        let big = big_supp(&s, &kx, &o).unwrap();
        assert!(small.is_subset_of(&big));
        // supports of compacts are already specialization closed here
        assert_eq!(small, big);
        assert!(big_supp(&s, &FreeComplex::zero(&r), &o).unwrap().is_empty());
    }
}

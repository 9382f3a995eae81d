//! Ideal arithmetic over `A = k[x..]/I`: Groebner bases, normal forms,
//! membership, radical membership, colon ideals and intersections.
//!
//! Every computation adjoins the ring's defining relations to the generator
//! list and runs in the free polynomial ring, so membership statements are
//! statements about the quotient. Reduced monic bases are unique per order,
//! which keeps all downstream output deterministic.

use crate::arith::{mpoly_to_tl, tl_to_mpoly, MPoly, MTerm, TermList};
use crate::cache::GbCache;
use crate::error::{Error, Result};
use crate::gbcore::{self, GbConfig, Track};
use crate::ideal::Ideal;
use crate::monomial::{mono_one, TermOrder};
use crate::poly::Poly;
use crate::ring::Ring;
use std::fmt;

#[derive(Clone, Default)]
pub struct GbOptions {
    pub degree_ceiling: Option<u32>,
    pub cache: Option<std::sync::Arc<GbCache>>,
}

impl GbOptions {
    pub fn ceiling(&self) -> u32 {
        self.degree_ceiling.unwrap_or(64)
    }
}

/// Reduced monic Groebner basis of an ideal of `A` (relations included).
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: TermOrder,
    basis: Vec<Poly>,
    source: Ideal,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    /// Remainder of full multivariate division; zero iff `f` lies in the
    /// ideal (of `A`) generated by the source.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if !f.ring().same(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let raw: Vec<TermList> = self.basis.iter().map(|p| p.terms().clone()).collect();
        let nf = gbcore::normal_form_tl(self.ring.field(), self.order, &raw, f.terms());
        Ok(Poly::from_raw(self.ring.clone(), nf))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn basis_strings(&self) -> Vec<String> {
        self.basis.iter().map(|p| p.to_string()).collect()
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroebnerBasis{{{}}}", self.basis_strings().join(", "))
    }
}

/// Reduced Groebner basis of `I` (as an ideal of `A`): Buchberger on the
/// generators together with the ring relations.
pub fn groebner_basis(ideal: &Ideal, opts: &GbOptions) -> Result<GroebnerBasis> {
    let ring = ideal.ring().clone();
    if let Some(cache) = &opts.cache {
        if let Some(basis) = cache.lookup(&ring, ideal)? {
            return Ok(GroebnerBasis { order: ring.order(), ring, basis, source: ideal.clone() });
        }
    }
    let basis = groebner_raw_in(
        &ring,
        ideal.generators().iter().map(|p| p.terms().clone()).collect(),
        opts.ceiling(),
    )?;
    let basis: Vec<Poly> =
        basis.into_iter().map(|tl| Poly::from_raw(ring.clone(), tl)).collect();
    if let Some(cache) = &opts.cache {
        cache.store(&ring, ideal, &basis)?;
    }
    Ok(GroebnerBasis { order: ring.order(), ring, basis, source: ideal.clone() })
}

/// Raw scalar Groebner basis in `ring`, relations adjoined.
fn groebner_raw_in(ring: &Ring, mut gens: Vec<TermList>, ceiling: u32) -> Result<Vec<TermList>> {
    gens.extend(ring.relations_raw().iter().cloned());
    let inputs: Vec<MPoly> = gens.iter().map(|g| tl_to_mpoly(g, 0)).collect();
    let out = gbcore::buchberger(
        ring.field(),
        ring.order(),
        &inputs,
        GbConfig { degree_ceiling: ceiling, track: Track::None },
    )?;
    Ok(out.basis.iter().map(mpoly_to_tl).collect())
}

pub fn ideal_membership(f: &Poly, ideal: &Ideal, opts: &GbOptions) -> Result<bool> {
    if !f.ring().same(ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    groebner_basis(ideal, opts)?.contains(f)
}

/// `f` lies in the radical of `I`, by the auxiliary-variable trick:
/// `1 in I + (1 - t*f)` in the extended ring with one more variable of
/// degree `-deg f`. The extended ideal is inhomogeneous; membership is run
/// without homogeneity assumptions.
pub fn radical_membership(f: &Poly, ideal: &Ideal, opts: &GbOptions) -> Result<bool> {
    if !f.ring().same(ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        // 0 is in the radical iff 0 is in the ideal, which always holds
        return Ok(true);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("radical membership of `{f}`")));
    }
    let ring = ideal.ring();
    let tdeg = -f.degree().unwrap_or(0);
    let ext = ring.extend_variable("t", tdeg, false);
    let nv = ext.nvars();
    let lift = |p: &Poly| -> TermList {
        p.terms()
            .iter()
            .map(|(m, c)| {
                let mut m2 = m.clone();
                m2.push(0);
                (m2, *c)
            })
            .collect()
    };
    let mut gens: Vec<TermList> = ideal.generators().iter().map(&lift).collect();
    // 1 - t*f
    let one: TermList = vec![(mono_one(nv), 1)];
    let mut tf: TermList = Vec::new();
    for (m, c) in f.terms() {
        let mut m2 = m.clone();
        m2.push(1);
        tf.push((m2, ext.field().neg(*c)));
    }
    let mut witness = one.clone();
    witness.extend(tf);
    gens.push(
        mpoly_to_tl(&crate::arith::mpoly_normalize(ext.field(), ext.order(), tl_to_mpoly(&witness, 0))),
    );
    let gb = groebner_raw_in(&ext, gens, opts.ceiling())?;
    let nf = gbcore::normal_form_tl(ext.field(), ext.order(), &gb, &one);
    Ok(nf.is_empty())
}

/// Kernel of the map `A^cols -> A^rows` defined by a list of module columns:
/// the syzygy module over `A`, computed by augmenting with the relation
/// multiples of each unit vector and projecting back.
pub(crate) fn kernel_columns(
    ring: &Ring,
    rows: usize,
    cols: &[MPoly],
    ceiling: u32,
) -> Result<Vec<MPoly>> {
    let mut inputs: Vec<MPoly> = cols.to_vec();
    let npad = ring.relations_raw().len() * rows;
    for rel in ring.relations_raw() {
        for comp in 0..rows {
            inputs.push(tl_to_mpoly(rel, comp as u32).to_vec());
        }
    }
    let out = gbcore::buchberger(
        ring.field(),
        ring.order(),
        &inputs,
        GbConfig { degree_ceiling: ceiling, track: Track::Syzygies },
    )?;
    let _ = npad;
    let ncols = cols.len() as u32;
    let mut projected: Vec<MPoly> = Vec::new();
    for syz in &out.syzygies {
        let keep: MPoly = syz.iter().filter(|t| t.comp < ncols).cloned().collect();
        if !keep.is_empty() {
            projected.push(keep);
        }
    }
    // canonicalize: sort, dedup
    projected.sort_by(|a, b| gbcore::cmp_mterms(ring.order(), &b[0], &a[0]).then_with(|| {
        let sa = format!("{a:?}");
        let sb = format!("{b:?}");
        sa.cmp(&sb)
    }));
    projected.dedup();
    Ok(projected)
}

/// `(I : f) = { g | g*f in I }`, via syzygies of the augmented generator
/// matrix `[f | gens I | relations]`.
pub fn colon_ideal(ideal: &Ideal, f: &Poly, opts: &GbOptions) -> Result<Ideal> {
    if !f.ring().same(ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::Precondition("colon by zero".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("colon by `{f}`")));
    }
    let ring = ideal.ring().clone();
    let mut cols: Vec<MPoly> = vec![tl_to_mpoly(f.terms(), 0)];
    for g in ideal.generators() {
        cols.push(tl_to_mpoly(g.terms(), 0));
    }
    let syz = kernel_columns(&ring, 1, &cols, opts.ceiling())?;
    let mut gens: Vec<Poly> = Vec::new();
    for s in syz {
        let coord0: TermList = s
            .iter()
            .filter(|t| t.comp == 0)
            .map(|t| (t.mono.clone(), t.c))
            .collect();
        if !coord0.is_empty() {
            let p = Poly::from_raw(ring.clone(), coord0).reduce_in_ring()?;
            if !p.is_zero() {
                gens.push(p);
            }
        }
    }
    minimalize_ideal(&ring, gens, opts)
}

/// `I ∩ J` by the one-extra-variable trick: eliminate `t` from
/// `t*I + (1-t)*J` using a product order with `t` in front. `t` gets
/// internal degree 0 so homogeneity is preserved.
pub fn intersect_ideals(lhs: &Ideal, rhs: &Ideal, opts: &GbOptions) -> Result<Ideal> {
    if !lhs.ring().same(rhs.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = lhs.ring().clone();
    let ext = ring.extend_variable("t", 0, true);
    let lift = |p: &Poly, texp: u32, negate: bool, add_plain: bool| -> TermList {
        // t^texp * p, optionally (1-t)*p = p - t*p
        let mut out: TermList = Vec::new();
        for (m, c) in p.terms() {
            let mut m2 = m.clone();
            m2.push(texp);
            out.push((m2, if negate { ext.field().neg(*c) } else { *c }));
        }
        if add_plain {
            for (m, c) in p.terms() {
                let mut m2 = m.clone();
                m2.push(0);
                out.push((m2, *c));
            }
        }
        mpoly_to_tl(&crate::arith::mpoly_normalize(ext.field(), ext.order(), tl_to_mpoly(&out, 0)))
    };
    let mut gens: Vec<TermList> = Vec::new();
    for g in lhs.generators() {
        gens.push(lift(g, 1, false, false)); // t*g
    }
    for g in rhs.generators() {
        gens.push(lift(g, 1, true, true)); // (1-t)*g
    }
    // relations must survive on both sides of the splitting
    for rel in ring.relations_raw() {
        let p = Poly::from_raw(ring.clone(), rel.clone());
        gens.push(lift(&p, 0, false, false));
    }
    let inputs: Vec<MPoly> = gens.iter().map(|g| tl_to_mpoly(g, 0)).collect();
    let out = gbcore::buchberger(
        ext.field(),
        ext.order(),
        &inputs,
        GbConfig { degree_ceiling: opts.ceiling(), track: Track::None },
    )?;
    let mut kept: Vec<Poly> = Vec::new();
    let n = ext.nvars();
    for b in &out.basis {
        if b.iter().all(|t| t.mono[n - 1] == 0) {
            let tl: TermList = b.iter().map(|t| {
                let mut m = t.mono.clone();
                m.pop();
                (m, t.c)
            }).collect();
            let p = Poly::from_raw(ring.clone(), tl).reduce_in_ring()?;
            if !p.is_zero() {
                kept.push(p);
            }
        }
    }
    minimalize_ideal(&ring, kept, opts)
}

/// Replace a generating set by the reduced Groebner basis it spans: a
/// canonical, deterministic set of generators.
fn minimalize_ideal(ring: &Ring, gens: Vec<Poly>, opts: &GbOptions) -> Result<Ideal> {
    let ideal = Ideal::new(ring, gens)?;
    let gb = groebner_basis(&ideal, opts)?;
    // keep only basis elements not coming purely from ring relations
    let mut kept = Vec::new();
    for b in gb.basis() {
        if b.is_zero_in_ring()? {
            continue;
        }
        kept.push(b.clone());
    }
    Ideal::new(ring, kept)
}

/// Kernel of the module map defined by a presentation matrix, over `A`:
/// the returned matrix has the same row twists as `m` has column twists and
/// its columns generate `{ v | m v = 0 }` (Schreyer-style from the module
/// Groebner basis of the columns).
pub fn syzygies(m: &crate::matrix::Matrix, opts: &GbOptions) -> Result<crate::matrix::Matrix> {
    let ring = m.ring().clone();
    let cols = m.columns_mpoly();
    let syz = kernel_columns(&ring, m.rows(), &cols, opts.ceiling())?;
    crate::matrix::Matrix::from_mpoly_columns(&ring, m.col_twists().to_vec(), &syz)
}

/// `{ g in A | g * v in column span of m }` for a module element `v`.
pub(crate) fn colon_submodule(
    ring: &Ring,
    m: &crate::matrix::Matrix,
    v: &MPoly,
    opts: &GbOptions,
) -> Result<Ideal> {
    let mut cols: Vec<MPoly> = vec![v.clone()];
    cols.extend(m.columns_mpoly());
    let syz = kernel_columns(ring, m.rows(), &cols, opts.ceiling())?;
    let mut gens: Vec<Poly> = Vec::new();
    for s in syz {
        let coord0: TermList = s
            .iter()
            .filter(|t| t.comp == 0)
            .map(|t| (t.mono.clone(), t.c))
            .collect();
        if !coord0.is_empty() {
            let p = Poly::from_raw(ring.clone(), coord0).reduce_in_ring()?;
            if !p.is_zero() {
                gens.push(p);
            }
        }
    }
    minimalize_ideal(ring, gens, opts)
}

/// Module Groebner basis of the columns of a matrix (relations adjoined),
/// for repeated membership tests against the column span over `A`.
pub struct ModuleBasis {
    field: crate::field::PrimeField,
    order: TermOrder,
    basis: Vec<MPoly>,
}

impl ModuleBasis {
    pub fn of_columns(m: &crate::matrix::Matrix, opts: &GbOptions) -> Result<ModuleBasis> {
        let ring = m.ring();
        let mut inputs = m.columns_mpoly();
        for rel in ring.relations_raw() {
            for comp in 0..m.rows() {
                inputs.push(tl_to_mpoly(rel, comp as u32));
            }
        }
        let out = gbcore::buchberger(
            ring.field(),
            ring.order(),
            &inputs,
            GbConfig { degree_ceiling: opts.ceiling(), track: Track::None },
        )?;
        Ok(ModuleBasis { field: ring.field(), order: ring.order(), basis: out.basis })
    }

    pub fn contains(&self, v: &MPoly) -> bool {
        gbcore::normal_form(self.field, self.order, &self.basis, v).is_empty()
    }

    /// Every column of `m` lies in the span.
    pub fn contains_all_columns(&self, m: &crate::matrix::Matrix) -> bool {
        (0..m.cols()).all(|j| self.contains(&m.column_mpoly(j)))
    }
}

/// Annihilator of the cokernel of a presentation matrix:
/// `Ann(coker m) = ∩_i (column span : e_i)`, colon ideals intersected with
/// the one-extra-variable trick.
pub fn annihilator(m: &crate::matrix::Matrix, opts: &GbOptions) -> Result<Ideal> {
    let ring = m.ring().clone();
    if m.rows() == 0 {
        // the zero module: unit annihilator
        return Ideal::new(&ring, vec![ring.one()]);
    }
    let mut acc: Option<Ideal> = None;
    for i in 0..m.rows() {
        let e_i: MPoly = vec![MTerm { comp: i as u32, mono: mono_one(ring.nvars()), c: 1 }];
        let colon = colon_submodule(&ring, m, &e_i, opts)?;
        acc = Some(match acc {
            None => colon,
            Some(prev) => intersect_ideals(&prev, &colon, opts)?,
        });
        if let Some(a) = &acc {
            if a.is_zero_ideal() {
                return Ok(a.clone());
            }
        }
    }
    Ok(acc.unwrap())
}

/// Equality of ideals in `A` via double inclusion of Groebner bases.
pub fn ideals_equal(lhs: &Ideal, rhs: &Ideal, opts: &GbOptions) -> Result<bool> {
    let gl = groebner_basis(lhs, opts)?;
    let gr = groebner_basis(rhs, opts)?;
    for g in lhs.generators() {
        if !gr.contains(g)? {
            return Ok(false);
        }
    }
    for g in rhs.generators() {
        if !gl.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience: the ideal generated by the union.
pub fn sum_ideals(lhs: &Ideal, rhs: &Ideal) -> Result<Ideal> {
    if !lhs.ring().same(rhs.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut gens = lhs.generators().to_vec();
    gens.extend(rhs.generators().iter().cloned());
    Ideal::new(lhs.ring(), gens)
}

pub(crate) fn mterm(comp: u32, mono: Vec<u32>, c: u64) -> MTerm {
    MTerm { comp, mono, c }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;

    fn ring() -> Ring {
        Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap()
    }

    fn gb(ideal: &Ideal) -> GroebnerBasis {
        groebner_basis(ideal, &GbOptions::default()).unwrap()
    }

    #[test]
    fn monomial_ideals_are_their_own_basis() {
        let r = ring();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let g = gb(&i);
        assert_eq!(g.basis_strings(), vec!["x^2", "x*y"]);
        let p = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(gb(&p).basis_strings(), vec!["x"]);
    }

    #[test]
    fn buchberger_hand_run() {
        // S(x^2 - y^2, x*y) = -y^3, which is irreducible, so the reduced
        // basis gains y^3 and nothing else
        let r = ring();
        let i = Ideal::parse(&r, &["x^2 - y^2", "x*y"]).unwrap();
        let g = gb(&i);
        let mut strings = g.basis_strings();
        strings.sort();
        assert_eq!(strings, vec!["x*y", "x^2 + 100*y^2", "y^3"]);
    }

    #[test]
    fn normal_forms() {
        let r = ring();
        let i = Ideal::parse(&r, &["x^2 - y^2", "x*y"]).unwrap();
        let g = gb(&i);
        assert!(g.normal_form(&r.zero()).unwrap().is_zero());
        // x^3 = x(x^2 - y^2) + y(x*y)
        assert!(g.normal_form(&r.parse("x^3").unwrap()).unwrap().is_zero());
        let j = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(gb(&j).normal_form(&r.parse("y").unwrap()).unwrap().to_string(), "y");
    }

    #[test]
    fn normal_form_is_idempotent_and_difference_is_member() {
        let r = ring();
        let i = Ideal::parse(&r, &["x^2 - y^2", "x*y"]).unwrap();
        let g = gb(&i);
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
        for _ in 0..50 {
            let f = crate::sampler::random_poly_any(&r, &mut rng, 4, 6);
            let n1 = g.normal_form(&f).unwrap();
            let n2 = g.normal_form(&n1).unwrap();
            assert_eq!(n1, n2);
            let diff = f.sub(&n1).unwrap();
            assert!(g.contains(&diff).unwrap());
        }
    }

    #[test]
    fn membership_examples() {
        let r = ring();
        let o = GbOptions::default();
        let x = r.parse("x").unwrap();
        assert!(ideal_membership(&x, &Ideal::parse(&r, &["x"]).unwrap(), &o).unwrap());
        assert!(!ideal_membership(&x, &Ideal::parse(&r, &["x*y"]).unwrap(), &o).unwrap());
        assert!(ideal_membership(
            &r.parse("x^3").unwrap(),
            &Ideal::parse(&r, &["x^2 - y^2", "x*y"]).unwrap(),
            &o
        )
        .unwrap());
    }

    #[test]
    fn membership_in_quotient_ring() {
        let r = ring().with_relations(&["x*y"]).unwrap();
        let o = GbOptions::default();
        // in A = k[x,y]/(xy), x*y is in every ideal, even the zero one
        let zero = Ideal::zero(&r);
        assert!(ideal_membership(&r.parse("x*y").unwrap(), &zero, &o).unwrap());
        assert!(!ideal_membership(&r.parse("x").unwrap(), &zero, &o).unwrap());
    }

    #[test]
    fn radical_membership_examples() {
        let r = ring();
        let o = GbOptions::default();
        let y = r.parse("y").unwrap();
        assert!(radical_membership(&y, &Ideal::parse(&r, &["y^2"]).unwrap(), &o).unwrap());
        let x = r.parse("x").unwrap();
        assert!(!radical_membership(&x, &Ideal::parse(&r, &["x*y"]).unwrap(), &o).unwrap());
        assert!(radical_membership(&x, &Ideal::parse(&r, &["x^2", "x*y"]).unwrap(), &o).unwrap());
    }

    #[test]
    fn radical_matches_bruteforce_powers() {
        let r = ring();
        let o = GbOptions::default();
        let cases = [
            (vec!["x*y"], "x", false),
            (vec!["x^2"], "x", true),
            (vec!["x^2*y^2"], "x*y", true),
            (vec!["x^2 - y^2", "x*y"], "x", true),
            (vec!["x^2 - y^2"], "x + y", false),
            (vec!["x^4", "y^4"], "x + y", true),
        ];
        for (gens, f, _expect) in cases {
            let i = Ideal::parse(&r, &gens).unwrap();
            let f = r.parse(f).unwrap();
            let trick = radical_membership(&f, &i, &o).unwrap();
            let g = gb(&i);
            let mut brute = false;
            let mut pw = r.one();
            for _ in 1..=8 {
                pw = pw.mul(&f).unwrap();
                if g.contains(&pw).unwrap() {
                    brute = true;
                    break;
                }
            }
            assert_eq!(trick, brute, "radical disagreement for {i} : {f}");
        }
    }

    #[test]
    fn colon_examples() {
        let r = ring();
        let o = GbOptions::default();
        let xy = Ideal::parse(&r, &["x*y"]).unwrap();
        let x = r.parse("x").unwrap();
        let c = colon_ideal(&xy, &x, &o).unwrap();
        assert_eq!(c.sorted_gen_strings(), vec!["y"]);
        let ix = Ideal::parse(&r, &["x"]).unwrap();
        let c = colon_ideal(&ix, &x, &o).unwrap();
        assert_eq!(c.sorted_gen_strings(), vec!["1"]);
        let c = colon_ideal(&Ideal::zero(&r), &x, &o).unwrap();
        assert!(c.is_zero_ideal());
    }

    #[test]
    fn colon_matches_degreewise_kernel() {
        // ((x*y) : x) degree-d slices agree with brute-force linear algebra
        let r = ring();
        let o = GbOptions::default();
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        let f = r.parse("x").unwrap();
        let colon = colon_ideal(&i, &f, &o).unwrap();
        for d in (0..=8).step_by(2) {
            let brute = crate::dims::brute_colon_dimension(&i, &f, d).unwrap();
            let direct = crate::dims::brute_ideal_dimension(&colon, d).unwrap();
            assert_eq!(brute, direct, "degree {d}");
        }
    }

    #[test]
    fn intersection_via_elimination() {
        let r = ring();
        let o = GbOptions::default();
        let ix = Ideal::parse(&r, &["x"]).unwrap();
        let iy = Ideal::parse(&r, &["y"]).unwrap();
        let meet = intersect_ideals(&ix, &iy, &o).unwrap();
        assert_eq!(meet.sorted_gen_strings(), vec!["x*y"]);
        let zero = intersect_ideals(&ix, &Ideal::zero(&r), &o).unwrap();
        assert!(zero.is_zero_ideal());
    }

    #[test]
    fn reduced_basis_is_permutation_invariant() {
        let r = ring();
        let gens = ["x^2 - y^2", "x*y", "y^3 - x*y", "x^3"];
        let base = gb(&Ideal::parse(&r, &gens).unwrap()).basis_strings();
        // 5 deterministic shuffles
        let mut order: Vec<usize> = (0..gens.len()).collect();
        for shuffle in 0..5 {
            order.rotate_left(1 + shuffle % 2);
            order.swap(0, gens.len() - 1);
            let shuffled: Vec<&str> = order.iter().map(|&i| gens[i]).collect();
            let other = gb(&Ideal::parse(&r, &shuffled).unwrap()).basis_strings();
            assert_eq!(base, other);
        }
    }

    #[test]
    fn degree_ceiling_is_a_hard_error() {
        let r = ring();
        let i = Ideal::parse(&r, &["x^2 - y^2", "x*y"]).unwrap();
        let res = groebner_basis(&i, &GbOptions { degree_ceiling: Some(2), cache: None });
        assert!(matches!(res, Err(Error::DegreeCeiling { .. })));
    }
}

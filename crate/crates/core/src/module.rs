//! Finitely generated graded modules, presented as cokernels.
//!
//! Equality of modules is deliberately not decidable by representation;
//! callers compare computable invariants (annihilators, supports, degreewise
//! dimensions) instead.

use crate::dims;
use crate::error::Result;
use crate::groebner::{self, GbOptions};
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::ring::Ring;
use std::collections::BTreeMap;
use std::fmt;

/// `M = coker(presentation)`: generators are the presentation's rows (with
/// their twists), relations its columns.
#[derive(Clone)]
pub struct GradedModule {
    presentation: Matrix,
}

impl GradedModule {
    pub fn from_presentation(presentation: Matrix) -> GradedModule {
        GradedModule { presentation }
    }

    /// The free module on the given twists.
    pub fn free(ring: &Ring, twists: Vec<i64>) -> GradedModule {
        GradedModule { presentation: Matrix::zero(ring, twists, Vec::new()) }
    }

    /// `A/I` as a cyclic module.
    pub fn cyclic(ring: &Ring, ideal: &Ideal) -> Result<GradedModule> {
        let gens = ideal.generators();
        let col_twists: Vec<i64> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
        let entries = gens.to_vec();
        Ok(GradedModule {
            presentation: Matrix::new(ring, vec![0], col_twists, entries)?,
        })
    }

    pub fn ring(&self) -> &Ring {
        self.presentation.ring()
    }

    pub fn presentation(&self) -> &Matrix {
        &self.presentation
    }

    pub fn generator_twists(&self) -> &[i64] {
        self.presentation.row_twists()
    }

    /// The module is zero iff every generator lies in the relation span.
    pub fn is_zero(&self, opts: &GbOptions) -> Result<bool> {
        if self.presentation.rows() == 0 {
            return Ok(true);
        }
        let ann = self.annihilator(opts)?;
        for g in ann.generators() {
            if g.as_nonzero_scalar().is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn annihilator(&self, opts: &GbOptions) -> Result<Ideal> {
        groebner::annihilator(&self.presentation, opts)
    }

    /// Dimension of one internal-degree slice, by exact linear algebra.
    pub fn dimension(&self, degree: i64) -> Result<usize> {
        let ring = self.ring();
        let free = dims::component_basis(ring, self.generator_twists(), degree)?.len();
        if free == 0 {
            return Ok(0);
        }
        if self.presentation.cols() == 0 {
            return Ok(free);
        }
        let rel = dims::matrix_component(&self.presentation, degree)?;
        Ok(free - rel.rank())
    }

    pub fn dimension_table(&self, lo: i64, hi: i64) -> Result<BTreeMap<i64, usize>> {
        let mut out = BTreeMap::new();
        for j in lo..=hi {
            let d = self.dimension(j)?;
            if d > 0 {
                out.insert(j, d);
            }
        }
        Ok(out)
    }

    /// Internal twist `M(d)`.
    pub fn twist(&self, d: i64) -> GradedModule {
        GradedModule { presentation: self.presentation.twist(d) }
    }

    pub fn direct_sum(&self, other: &GradedModule) -> Result<GradedModule> {
        let ring = self.ring().clone();
        let p = Matrix::block2x2(
            &ring,
            Some(&self.presentation),
            None,
            None,
            Some(&other.presentation),
            (self.presentation.row_twists().to_vec(), other.presentation.row_twists().to_vec()),
            (self.presentation.col_twists().to_vec(), other.presentation.col_twists().to_vec()),
        )?;
        Ok(GradedModule { presentation: p })
    }

    /// Quotient `M / I*M`: adjoin `g * e_i` columns for each ideal generator.
    pub fn quotient_by_ideal(&self, ideal: &Ideal) -> Result<GradedModule> {
        let ring = self.ring().clone();
        let mut p = self.presentation.clone();
        for g in ideal.generators() {
            let extra = Matrix::scalar_map(&ring, self.generator_twists(), g)?;
            p = p.hcat(&extra)?;
        }
        Ok(GradedModule { presentation: p })
    }

    /// The submodule `I*M`, presented on the generators `g*e_i`.
    pub fn ideal_multiple(&self, ideal: &Ideal, opts: &GbOptions) -> Result<GradedModule> {
        let ring = self.ring().clone();
        // generators of I*M as columns in the ambient free module
        let mut gen_cols = Matrix::zero(&ring, self.generator_twists().to_vec(), Vec::new());
        for g in ideal.generators() {
            let m = Matrix::scalar_map(&ring, self.generator_twists(), g)?;
            gen_cols = gen_cols.hcat(&m)?;
        }
        // relations: u with gen_cols * u in the old relation span
        let combined = gen_cols.hcat(&self.presentation.clone())?;
        let syz = groebner::syzygies(&combined, opts)?;
        let keep = gen_cols.cols();
        // project syzygy columns to the gen_cols coordinates
        let mut cols = Vec::new();
        for j in 0..syz.cols() {
            let full = syz.column_mpoly(j);
            let head: crate::arith::MPoly =
                full.into_iter().filter(|t| (t.comp as usize) < keep).collect();
            if !head.is_empty() {
                cols.push(head);
            }
        }
        let pres = Matrix::from_mpoly_columns(&ring, gen_cols.col_twists().to_vec(), &cols)?;
        Ok(GradedModule { presentation: pres })
    }
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedModule(gens {:?}, {} relations)",
            self.generator_twists(),
            self.presentation.cols()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;

    fn ring() -> Ring {
        Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap()
    }

    #[test]
    fn annihilator_of_cyclic_module() {
        let r = ring();
        let o = GbOptions::default();
        let m = GradedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert_eq!(m.annihilator(&o).unwrap().sorted_gen_strings(), vec!["x"]);
        let free = GradedModule::free(&r, vec![0]);
        assert!(free.annihilator(&o).unwrap().is_zero_ideal());
    }

    #[test]
    fn annihilator_of_direct_sum_is_intersection() {
        let r = ring();
        let o = GbOptions::default();
        let mx = GradedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        let my = GradedModule::cyclic(&r, &Ideal::parse(&r, &["y"]).unwrap()).unwrap();
        let sum = mx.direct_sum(&my).unwrap();
        let ann = sum.annihilator(&o).unwrap();
        assert_eq!(ann.sorted_gen_strings(), vec!["x*y"]);
    }

    #[test]
    fn annihilator_generators_kill_the_module_degreewise() {
        // soundness: g * e_i lies in the relation span, checked by brute
        // degreewise membership on every annihilator generator
        let r = ring();
        let o = GbOptions::default();
        let pres = Matrix::new(
            &r,
            vec![0, 0],
            vec![2, 4],
            vec![
                r.parse("x").unwrap(),
                r.parse("y^2").unwrap(),
                r.parse("y").unwrap(),
                r.parse("x^2 - y^2").unwrap(),
            ],
        )
        .unwrap();
        let m = GradedModule::from_presentation(pres.clone());
        let ann = m.annihilator(&o).unwrap();
        assert!(!ann.is_zero_ideal());
        // module GB of the columns, for membership tests over A
        let inputs: Vec<crate::arith::MPoly> = pres
            .columns_mpoly()
            .into_iter()
            .chain(r.relations_raw().iter().flat_map(|rel| {
                (0..pres.rows())
                    .map(|k| crate::arith::tl_to_mpoly(rel, k as u32))
                    .collect::<Vec<_>>()
            }))
            .collect();
        let gb = crate::gbcore::buchberger(
            r.field(),
            r.order(),
            &inputs,
            crate::gbcore::GbConfig::default(),
        )
        .unwrap();
        for g in ann.generators() {
            for i in 0..pres.rows() {
                let gei: crate::arith::MPoly = g
                    .terms()
                    .iter()
                    .map(|(mn, c)| crate::arith::MTerm { comp: i as u32, mono: mn.clone(), c: *c })
                    .collect();
                let nf = crate::gbcore::normal_form(r.field(), r.order(), &gb.basis, &gei);
                assert!(nf.is_empty(), "annihilator generator {g} misses e_{i}");
            }
        }
    }

    #[test]
    fn dimension_tables() {
        let r = ring();
        let m = GradedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        // A/(x) = k[y]: one dimension in each even degree
        let t = m.dimension_table(0, 6).unwrap();
        assert_eq!(t, [(0, 1), (2, 1), (4, 1), (6, 1)].into_iter().collect());
        let tw = m.twist(2).dimension_table(-2, 2).unwrap();
        assert_eq!(tw, [(-2, 1), (0, 1), (2, 1)].into_iter().collect());
    }

    #[test]
    fn zero_detection() {
        let r = ring();
        let o = GbOptions::default();
        let m = GradedModule::cyclic(&r, &Ideal::parse(&r, &["1"]).unwrap());
        // (1) is rejected as inhomogeneous? no: 1 is homogeneous of degree 0
        let m = m.unwrap();
        assert!(m.is_zero(&o).unwrap());
        let free = GradedModule::free(&r, vec![0]);
        assert!(!free.is_zero(&o).unwrap());
    }

    #[test]
    fn quotient_and_multiple() {
        let r = ring();
        let o = GbOptions::default();
        // M = A/(x^2, y^2) (as module over A), I = (x, y)
        let i2 = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        let m = GradedModule::cyclic(&r, &i2).unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let q = m.quotient_by_ideal(&i).unwrap();
        // M/IM = k
        assert_eq!(q.dimension_table(0, 8).unwrap(), [(0, 1)].into_iter().collect());
        let im = m.ideal_multiple(&i, &o).unwrap();
        // IM has basis x, y, xy: dims 2 in degree 2, 1 in degree 4
        assert_eq!(im.dimension_table(0, 8).unwrap(), [(2, 2), (4, 1)].into_iter().collect());
        // and (x,y)*IM != 0 here (xy survives), while (x^2,y^2)*M = 0:
        let ann_im = im.annihilator(&o).unwrap();
        let gbm = crate::groebner::groebner_basis(&ann_im, &o).unwrap();
        assert!(!gbm.contains(&r.parse("x").unwrap()).unwrap());
    }
}

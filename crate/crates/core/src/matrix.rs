//! Degree-compatible polynomial matrices between twisted graded free modules.
//!
//! A matrix with row twists `r_i` and column twists `c_j` presents a
//! degree-0 map `⊕_j A(-c_j) -> ⊕_i A(-r_i)`; entry `(i, j)` is homogeneous
//! of internal degree `c_j - r_i` or zero. Entries are kept in normal form
//! modulo the ring relations, so zero tests are componentwise.

use crate::arith::{MPoly, MTerm, TermList};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
    entries: Vec<Poly>,
}

impl Matrix {
    pub fn new(
        ring: &Ring,
        row_twists: Vec<i64>,
        col_twists: Vec<i64>,
        entries: Vec<Poly>,
    ) -> Result<Matrix> {
        let rows = row_twists.len();
        let cols = col_twists.len();
        if entries.len() != rows * cols {
            return Err(Error::BadMatrix(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let mut canonical = Vec::with_capacity(entries.len());
        for (k, e) in entries.into_iter().enumerate() {
            if !e.ring().same(ring) {
                return Err(Error::RingMismatch);
            }
            let e = e.reduce_in_ring()?;
            let (i, j) = (k / cols, k % cols);
            if !e.is_zero() {
                let want = col_twists[j] - row_twists[i];
                match e.degree() {
                    Some(d) if d == want => {}
                    got => {
                        return Err(Error::BadMatrix(format!(
                            "entry ({i},{j}) = `{e}` has degree {got:?}, expected {want}"
                        )))
                    }
                }
            }
            canonical.push(e);
        }
        Ok(Matrix { ring: ring.clone(), rows, cols, row_twists, col_twists, entries: canonical })
    }

    pub fn zero(ring: &Ring, row_twists: Vec<i64>, col_twists: Vec<i64>) -> Matrix {
        let entries = vec![ring.zero(); row_twists.len() * col_twists.len()];
        Matrix {
            ring: ring.clone(),
            rows: row_twists.len(),
            cols: col_twists.len(),
            row_twists,
            col_twists,
            entries,
        }
    }

    pub fn identity(ring: &Ring, twists: Vec<i64>) -> Matrix {
        let n = twists.len();
        let mut m = Matrix::zero(ring, twists.clone(), twists);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    /// Diagonal multiplication-by-`f` map `⊕A(-t_j+d) -> ⊕A(-t_j)` where `d`
    /// is the degree of the homogeneous element `f`.
    pub fn scalar_map(ring: &Ring, twists: &[i64], f: &Poly) -> Result<Matrix> {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("scalar map by `{f}`")));
        }
        let d = f.degree().unwrap_or(0);
        let n = twists.len();
        let col_twists: Vec<i64> = twists.iter().map(|t| t + d).collect();
        let mut entries = vec![ring.zero(); n * n];
        for (i, entry) in entries.iter_mut().enumerate().step_by(n + 1).take(n) {
            let _ = i;
            *entry = f.clone();
        }
        Matrix::new(ring, twists.to_vec(), col_twists, entries)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Matrix product `self * other` (composition of maps, `other` first).
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if !self.ring.same(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::BadMatrix(format!(
                "product shape mismatch: {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let term = self.at(i, k).mul(other.at(k, j))?;
                    acc = acc.add(&term)?;
                }
                entries.push(acc);
            }
        }
        Matrix::new(&self.ring, self.row_twists.clone(), other.col_twists.clone(), entries)
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.neg();
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::BadMatrix("sum shape mismatch".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(&self.ring, self.row_twists.clone(), self.col_twists.clone(), entries)
    }

    /// Assemble a matrix from a 2x2 block grid; `None` blocks are zero.
    /// Row/column twists are the concatenations.
    pub fn block2x2(
        ring: &Ring,
        top_left: Option<&Matrix>,
        top_right: Option<&Matrix>,
        bottom_left: Option<&Matrix>,
        bottom_right: Option<&Matrix>,
        row_split: (Vec<i64>, Vec<i64>),
        col_split: (Vec<i64>, Vec<i64>),
    ) -> Result<Matrix> {
        let (rt0, rt1) = row_split;
        let (ct0, ct1) = col_split;
        let rows = rt0.len() + rt1.len();
        let cols = ct0.len() + ct1.len();
        let mut entries = vec![ring.zero(); rows * cols];
        let mut place = |block: Option<&Matrix>, r0: usize, c0: usize, nr: usize, nc: usize| -> Result<()> {
            if let Some(b) = block {
                if b.rows != nr || b.cols != nc {
                    return Err(Error::BadMatrix("block shape mismatch".into()));
                }
                for i in 0..nr {
                    for j in 0..nc {
                        entries[(r0 + i) * cols + (c0 + j)] = b.at(i, j).clone();
                    }
                }
            }
            Ok(())
        };
        place(top_left, 0, 0, rt0.len(), ct0.len())?;
        place(top_right, 0, ct0.len(), rt0.len(), ct1.len())?;
        place(bottom_left, rt0.len(), 0, rt1.len(), ct0.len())?;
        place(bottom_right, rt0.len(), ct0.len(), rt1.len(), ct1.len())?;
        let mut row_twists = rt0;
        row_twists.extend(rt1);
        let mut col_twists = ct0;
        col_twists.extend(ct1);
        Matrix::new(ring, row_twists, col_twists, entries)
    }

    /// Column `j` as a module element with component = row index.
    pub fn column_mpoly(&self, j: usize) -> MPoly {
        let mut terms: Vec<MTerm> = Vec::new();
        for i in 0..self.rows {
            for (m, c) in self.at(i, j).terms() {
                terms.push(MTerm { comp: i as u32, mono: m.clone(), c: *c });
            }
        }
        crate::arith::mpoly_normalize(self.ring.field(), self.ring.order(), terms)
    }

    pub fn columns_mpoly(&self) -> Vec<MPoly> {
        (0..self.cols).map(|j| self.column_mpoly(j)).collect()
    }

    /// Build from homogeneous module columns; column twists are inferred
    /// from the row twists. Zero columns are dropped.
    pub fn from_mpoly_columns(
        ring: &Ring,
        row_twists: Vec<i64>,
        cols: &[MPoly],
    ) -> Result<Matrix> {
        let weights = ring.var_degrees();
        let mut col_twists = Vec::new();
        let mut kept: Vec<&MPoly> = Vec::new();
        for col in cols {
            if col.is_empty() {
                continue;
            }
            let mut deg: Option<i64> = None;
            for t in col {
                let d = crate::monomial::mono_wdeg(&t.mono, &weights)
                    + row_twists[t.comp as usize];
                match deg {
                    None => deg = Some(d),
                    Some(d0) if d0 != d => {
                        return Err(Error::BadMatrix(format!(
                            "inhomogeneous module column (degrees {d0} and {d})"
                        )))
                    }
                    _ => {}
                }
            }
            col_twists.push(deg.unwrap());
            kept.push(col);
        }
        let rows = row_twists.len();
        let mut entries = vec![ring.zero(); rows * kept.len()];
        for (j, col) in kept.iter().enumerate() {
            for i in 0..rows {
                let tl: TermList = col
                    .iter()
                    .filter(|t| t.comp as usize == i)
                    .map(|t| (t.mono.clone(), t.c))
                    .collect();
                entries[i * kept.len() + j] = Poly::from_raw(ring.clone(), tl);
            }
        }
        Matrix::new(ring, row_twists, col_twists, entries)
    }

    /// The same map with both sides twisted by internal degree `d`
    /// (`M(d)`: every twist drops by `d`, entries unchanged).
    pub fn twist(&self, d: i64) -> Matrix {
        let mut out = self.clone();
        for t in out.row_twists.iter_mut() {
            *t -= d;
        }
        for t in out.col_twists.iter_mut() {
            *t -= d;
        }
        out
    }

    /// Rowwise concatenation `[self | other]` (same row twists).
    pub fn hcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.row_twists != other.row_twists {
            return Err(Error::BadMatrix("hcat row twist mismatch".into()));
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries.push(self.at(i, j).clone());
            }
            for j in 0..other.cols {
                entries.push(other.at(i, j).clone());
            }
        }
        let mut col_twists = self.col_twists.clone();
        col_twists.extend(other.col_twists.iter().copied());
        Matrix::new(&self.ring, self.row_twists.clone(), col_twists, entries)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} rows{:?} cols{:?} [",
            self.rows, self.cols, self.row_twists, self.col_twists
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
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
    fn twist_validation() {
        let r = ring();
        // x: A(-2) -> A is a degree-0 map: row twist 0, col twist 2
        assert!(
            Matrix::new(&r, vec![0], vec![2], vec![r.parse("x").unwrap()]).is_ok()
        );
        assert!(
            Matrix::new(&r, vec![0], vec![4], vec![r.parse("x").unwrap()]).is_err()
        );
    }

    #[test]
    fn entries_reduce_in_quotient() {
        let r = ring().with_relations(&["x*y"]).unwrap();
        let m = Matrix::new(&r, vec![0], vec![4], vec![r.parse("x*y").unwrap()]).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn product_and_scalar_map() {
        let r = ring();
        let mx = Matrix::scalar_map(&r, &[0], &r.parse("x").unwrap()).unwrap();
        let my = Matrix::scalar_map(&r, &[2], &r.parse("y").unwrap()).unwrap();
        let prod = mx.mul(&my).unwrap();
        assert_eq!(prod.at(0, 0).to_string(), "x*y");
        assert_eq!(prod.col_twists(), &[4]);
    }
}

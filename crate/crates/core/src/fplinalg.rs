//! Dense exact linear algebra over `F_p`.

use crate::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMat {
    pub field: PrimeField,
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries, canonical in `[0, p)`.
    pub data: Vec<u64>,
}

impl FpMat {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> FpMat {
        FpMat { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> FpMat {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows);
        let f = self.field;
        let mut out = FpMat::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.at(i, j), f.mul(a, other.at(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FpMat) -> FpMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = self.field.add(*a, *b);
        }
        out
    }

    pub fn scale(&self, c: u64) -> FpMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.mul(*a, c);
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut pivot = None;
            for r in row..self.rows {
                if self.at(r, col) != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            for c in 0..self.cols {
                let tmp = self.at(row, c);
                self.set(row, c, self.at(p, c));
                self.set(p, c, tmp);
            }
            let inv = f.inv(self.at(row, col));
            for c in col..self.cols {
                self.set(row, c, f.mul(self.at(row, c), inv));
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    for c in col..self.cols {
                        let v = f.sub(self.at(r, c), f.mul(factor, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.at(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Whether `v` lies in the column span.
    pub fn column_span_contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.rows);
        let mut aug = FpMat::zero(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c));
            }
            aug.set(r, self.cols, v[r]);
        }
        aug.rank() == self.rank()
    }

    pub fn transpose(&self) -> FpMat {
        let mut out = FpMat::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    pub fn from_columns(field: PrimeField, rows: usize, cols: &[Vec<u64>]) -> FpMat {
        let mut m = FpMat::zero(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for i in 0..rows {
                m.set(i, j, col[i]);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        // [1 2 3; 2 4 6] has rank 1, kernel dim 2
        let mut m = FpMat::zero(f(), 2, 3);
        m.data = vec![1, 2, 3, 2, 4, 6];
        assert_eq!(m.rank(), 1);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let prod: Vec<u64> = (0..2)
                .map(|r| {
                    (0..3).fold(0u64, |acc, c| f().add(acc, f().mul(m.at(r, c), v[c])))
                })
                .collect();
            assert_eq!(prod, vec![0, 0]);
        }
    }

    #[test]
    fn span_membership() {
        let m = FpMat::from_columns(f(), 2, &[vec![1, 0], vec![1, 1]]);
        assert!(m.column_span_contains(&[5, 3]));
        let m2 = FpMat::from_columns(f(), 2, &[vec![1, 0]]);
        assert!(!m2.column_span_contains(&[0, 1]));
    }
}

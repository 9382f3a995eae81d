//! Seeded random instance generation.
//!
//! The distribution is part of the artifact's contract so that suites are
//! comparable across runs and implementations:
//!   - polynomials: random homogeneous, internal degree <= 8, coefficients
//!     uniform in `F_p`, term count bounded by the slice dimension;
//!   - presentation matrices: up to 3x3, row twists even in `[-4, 0]`,
//!     column twists even in `[0, 4]`;
//!   - perfect complexes: length <= 3. A two-term complex takes a random
//!     matrix; the third differential is drawn from the syzygies of the
//!     second so that `d . d = 0` holds exactly. The result is optionally
//!     shifted (cohomological `[-1, 1]`) and twisted (internal, even in
//!     `[-2, 2]`);
//!   - posets: random strict relations on shuffled labels, transitively
//!     closed.

use crate::complex::FreeComplex;
use crate::error::Result;
use crate::groebner::{self, GbOptions};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::poset::Poset;
use crate::ring::Ring;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Independent stream for one (suite, instance) pair: distinct instances
/// never share randomness, and reruns are bit-identical.
pub fn instance_rng(seed: u64, suite: &str, instance: u64) -> ChaCha8Rng {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(suite.as_bytes());
    h.update(instance.to_le_bytes());
    let d = h.finalize();
    ChaCha8Rng::seed_from_u64(u64::from_le_bytes(d[..8].try_into().unwrap()))
}

/// Random polynomial with exponents up to `max_exp` and up to `max_terms`
/// terms; not necessarily homogeneous. Used by normal-form round-trips.
pub fn random_poly_any(ring: &Ring, rng: &mut ChaCha8Rng, max_exp: u32, max_terms: usize) -> Poly {
    let p = ring.field().p();
    let mut acc = ring.zero();
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let exps: Vec<u32> = (0..ring.nvars()).map(|_| rng.gen_range(0..=max_exp)).collect();
        let c = rng.gen_range(0..p) as i64;
        acc = acc.add(&ring.monomial(&exps, c)).expect("same ring");
    }
    acc
}

/// Random homogeneous polynomial of the exact internal degree (possibly
/// zero if `allow_zero`); `None` when the degree slice is empty.
pub fn random_homogeneous(
    ring: &Ring,
    rng: &mut ChaCha8Rng,
    degree: i64,
    allow_zero: bool,
) -> Result<Option<Poly>> {
    let monos = crate::dims::free_monomials(ring, degree)?;
    if monos.is_empty() {
        return Ok(None);
    }
    let p = ring.field().p();
    for _attempt in 0..16 {
        let mut acc = ring.zero();
        for m in &monos {
            // sparse coefficients: roughly half the monomials appear
            if rng.gen_bool(0.5) {
                let c = rng.gen_range(1..p) as i64;
                acc = acc.add(&ring.monomial(m, c)).expect("same ring");
            }
        }
        if allow_zero || !acc.is_zero() {
            return Ok(Some(acc));
        }
    }
    // fall back to a single monomial
    let m = &monos[rng.gen_range(0..monos.len())];
    Ok(Some(ring.monomial(m, 1)))
}

/// Random degree-0 matrix with the documented twist distribution; entries
/// of internal degree <= 8.
pub fn random_matrix(ring: &Ring, rng: &mut ChaCha8Rng, max_dim: usize) -> Result<Matrix> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let row_twists: Vec<i64> = (0..rows).map(|_| -2 * rng.gen_range(0..=2i64)).collect();
    let col_twists: Vec<i64> = (0..cols).map(|_| 2 * rng.gen_range(0..=2i64)).collect();
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let d = col_twists[j] - row_twists[i];
            let e = if rng.gen_bool(0.25) {
                ring.zero()
            } else {
                random_homogeneous(ring, rng, d, true)?.unwrap_or_else(|| ring.zero())
            };
            entries.push(e);
        }
    }
    Matrix::new(ring, row_twists, col_twists, entries)
}

/// Random perfect complex of length at most 3 with exact `d . d = 0`.
pub fn random_perfect_complex(
    ring: &Ring,
    rng: &mut ChaCha8Rng,
    opts: &GbOptions,
) -> Result<FreeComplex> {
    let length = rng.gen_range(1..=3u32);
    let complex = match length {
        1 => {
            let rank = rng.gen_range(1..=3usize);
            let twists: Vec<i64> = (0..rank).map(|_| 2 * rng.gen_range(-2..=2i64)).collect();
            FreeComplex::concentrated(ring, 0, twists)
        }
        2 => {
            let d = random_matrix(ring, rng, 3)?;
            FreeComplex::two_term(ring, -1, d)?
        }
        _ => {
            let d1 = random_matrix(ring, rng, 3)?;
            let kernel = groebner::syzygies(&d1, opts)?;
            if kernel.cols() == 0 {
                FreeComplex::two_term(ring, -1, d1)?
            } else {
                // mix kernel columns into at most 3 new columns
                let ncols = rng.gen_range(1..=3usize);
                let mut cols: Vec<crate::arith::MPoly> = Vec::new();
                for _ in 0..ncols {
                    let k = rng.gen_range(0..kernel.cols());
                    let base = kernel.column_mpoly(k);
                    let extra = 2 * rng.gen_range(0..=1i64);
                    let coeff = match random_homogeneous(ring, rng, extra, false)? {
                        Some(c) => c,
                        None => ring.one(),
                    };
                    let mixed = crate::arith::mpoly_mul_scalar(
                        ring.field(),
                        ring.order(),
                        &base,
                        coeff.terms(),
                    );
                    if !mixed.is_empty() {
                        cols.push(mixed);
                    }
                }
                if cols.is_empty() {
                    FreeComplex::two_term(ring, -1, d1)?
                } else {
                    let d0 = Matrix::from_mpoly_columns(ring, d1.col_twists().to_vec(), &cols)?;
                    let mut twists = BTreeMap::new();
                    twists.insert(-2i64, d0.col_twists().to_vec());
                    twists.insert(-1, d1.col_twists().to_vec());
                    twists.insert(0, d1.row_twists().to_vec());
                    let mut diffs = BTreeMap::new();
                    diffs.insert(-2i64, d0);
                    diffs.insert(-1, d1);
                    FreeComplex::new(ring, twists, diffs)?
                }
            }
        }
    };
    let shifted = complex.shift(rng.gen_range(-1..=1i64));
    Ok(shifted.twist(2 * rng.gen_range(-1..=1i64)))
}

/// Random poset on `n` labeled points: a random strict relation on a
/// shuffled linear extension, transitively closed.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.35) {
                edges.push((perm[i], perm[j]));
            }
        }
    }
    Poset::from_relations(n, &edges).expect("closure of a strict order is a poset")
}

//! Degreewise exact linear algebra.
//!
//! Internal-degree slices of rings, free modules and matrices, computed on
//! standard-monomial bases. This is the second, Groebner-independent route
//! used by oracle tests and dimension tables: spans are taken on raw
//! monomial coordinates, so a rank here never depends on Buchberger output
//! unless explicitly stated.

use crate::arith::TermList;
use crate::error::{Error, Result};
use crate::fplinalg::FpMat;
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::monomial::{mono_divides, mono_wdeg, Monomial};
use crate::poly::Poly;
use crate::ring::Ring;
use std::collections::BTreeMap;

/// All monomials of the free polynomial ring with the given weighted degree.
/// Fails when a variable of nonpositive degree makes the slice infinite.
pub fn free_monomials(ring: &Ring, degree: i64) -> Result<Vec<Monomial>> {
    let weights = ring.var_degrees();
    for (i, w) in weights.iter().enumerate() {
        if *w <= 0 {
            return Err(Error::InfiniteDimension(ring.var_names()[i].to_string()));
        }
    }
    let mut out = Vec::new();
    if degree < 0 {
        return Ok(out);
    }
    let mut current = vec![0u32; weights.len()];
    enumerate(&weights, 0, degree, &mut current, &mut |m| out.push(m.to_vec()), &[]);
    out.sort();
    Ok(out)
}

/// Standard monomials of `A` in one degree: monomials of the weighted degree
/// not divisible by any lead term of the relations basis. Degree-0 variables
/// are allowed when the relations bound their exponents by a pure power.
pub fn standard_monomials(ring: &Ring, degree: i64) -> Result<Vec<Monomial>> {
    let weights = ring.var_degrees();
    let gb = ring.relations_gb_raw()?;
    let leads: Vec<Monomial> = gb.iter().map(|g| g[0].0.clone()).collect();
    // exponent caps: positive-degree variables are capped by the degree,
    // degree-0 variables need a pure-power lead term
    let mut caps: Vec<u32> = Vec::with_capacity(weights.len());
    for (i, w) in weights.iter().enumerate() {
        if *w > 0 {
            caps.push(if degree < 0 { 0 } else { (degree / w) as u32 });
        } else if *w < 0 {
            return Err(Error::InfiniteDimension(ring.var_names()[i].to_string()));
        } else {
            let mut cap = None;
            for lead in &leads {
                if lead[i] > 0 && lead.iter().enumerate().all(|(k, &e)| k == i || e == 0) {
                    let c = lead[i] - 1;
                    cap = Some(cap.map_or(c, |old: u32| old.min(c)));
                }
            }
            match cap {
                Some(c) => caps.push(c),
                None => {
                    return Err(Error::InfiniteDimension(ring.var_names()[i].to_string()))
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; weights.len()];
    enumerate(&weights, 0, degree, &mut current, &mut |m| {
        if !leads.iter().any(|l| mono_divides(l, m)) {
            out.push(m.to_vec());
        }
    }, &caps);
    out.sort();
    Ok(out)
}

fn enumerate(
    weights: &[i64],
    var: usize,
    remaining: i64,
    current: &mut Vec<u32>,
    sink: &mut impl FnMut(&[u32]),
    caps: &[u32],
) {
    if var == weights.len() {
        if remaining == 0 {
            sink(current);
        }
        return;
    }
    if remaining < 0 {
        return;
    }
    let w = weights[var];
    let max_e = if w > 0 {
        let by_deg = (remaining / w) as u32;
        if caps.is_empty() { by_deg } else { by_deg.min(caps[var]) }
    } else {
        caps[var]
    };
    for e in 0..=max_e {
        current[var] = e;
        enumerate(weights, var + 1, remaining - w * e as i64, current, sink, caps);
    }
    current[var] = 0;
}

pub fn ring_dimension(ring: &Ring, degree: i64) -> Result<usize> {
    Ok(standard_monomials(ring, degree)?.len())
}

/// Basis of one internal-degree slice of `⊕ A(-t_g)`: pairs of generator
/// index and standard monomial of degree `j - t_g`.
pub fn component_basis(ring: &Ring, twists: &[i64], degree: i64) -> Result<Vec<(usize, Monomial)>> {
    let mut out = Vec::new();
    for (g, t) in twists.iter().enumerate() {
        for m in standard_monomials(ring, degree - t)? {
            out.push((g, m));
        }
    }
    Ok(out)
}

fn basis_index(basis: &[(usize, Monomial)]) -> BTreeMap<(usize, Monomial), usize> {
    basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect()
}

/// Expand an element of `⊕ A(-t_g)` (already in normal form mod relations)
/// on a component basis.
pub(crate) fn expand_on_basis(
    coords: &[(usize, TermList)],
    index: &BTreeMap<(usize, Monomial), usize>,
    dim: usize,
) -> Result<Vec<u64>> {
    let mut v = vec![0u64; dim];
    for (g, tl) in coords {
        for (m, c) in tl {
            let key = (*g, m.clone());
            let slot = index.get(&key).ok_or_else(|| {
                Error::Internal("component expansion hit a non-standard monomial".into())
            })?;
            v[*slot] = *c;
        }
    }
    Ok(v)
}

/// The `F_p`-matrix of a degree-0 matrix map on one internal-degree slice.
pub fn matrix_component(m: &Matrix, degree: i64) -> Result<FpMat> {
    let ring = m.ring();
    let src = component_basis(ring, m.col_twists(), degree)?;
    let dst = component_basis(ring, m.row_twists(), degree)?;
    let dst_index = basis_index(&dst);
    let mut out = FpMat::zero(ring.field(), dst.len(), src.len());
    for (jcol, (g, mono)) in src.iter().enumerate() {
        // image of (generator g) * mono: column g of the matrix times mono
        let mut coords: Vec<(usize, TermList)> = Vec::new();
        for i in 0..m.rows() {
            let e = m.at(i, *g);
            if e.is_zero() {
                continue;
            }
            let shifted: TermList = e
                .terms()
                .iter()
                .map(|(em, ec)| (crate::monomial::mono_mul(em, mono), *ec))
                .collect();
            let nf = ring.nf_raw(&shifted)?;
            if !nf.is_empty() {
                coords.push((i, nf));
            }
        }
        let col = expand_on_basis(&coords, &dst_index, dst.len())?;
        for (irow, v) in col.iter().enumerate() {
            if *v != 0 {
                out.set(irow, jcol, *v);
            }
        }
    }
    Ok(out)
}

/// Dimension of the degree-`d` slice of the preimage in `k[x..]` of an ideal
/// of `A`: the span of all `monomial * generator` and `monomial * relation`
/// products, by rank on raw monomial coordinates. Groebner-free.
pub fn brute_ideal_dimension(ideal: &Ideal, degree: i64) -> Result<usize> {
    let ring = ideal.ring();
    let ambient = free_monomials(ring, degree)?;
    if ambient.is_empty() {
        return Ok(0);
    }
    let index: BTreeMap<&Monomial, usize> =
        ambient.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut cols: Vec<Vec<u64>> = Vec::new();
    let mut push_products = |p: &TermList, pdeg: i64| -> Result<()> {
        let need = degree - pdeg;
        for m in free_monomials(ring, need)? {
            let mut v = vec![0u64; ambient.len()];
            for (pm, pc) in p {
                let prod = crate::monomial::mono_mul(pm, &m);
                v[*index.get(&prod).unwrap()] = *pc;
            }
            cols.push(v);
        }
        Ok(())
    };
    for g in ideal.generators() {
        if let Some(d) = g.degree() {
            push_products(g.terms(), d)?;
        }
    }
    for rel in ring.relations_raw() {
        let d = mono_wdeg(&rel[0].0, &ring.var_degrees());
        push_products(rel, d)?;
    }
    if cols.is_empty() {
        return Ok(0);
    }
    let m = FpMat::from_columns(ring.field(), ambient.len(), &cols);
    Ok(m.rank())
}

/// Brute membership of a homogeneous `f` in an ideal of `A`, degreewise:
/// `f` lies in the span of `monomial * generator` products in its degree.
pub fn brute_ideal_membership(ideal: &Ideal, f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let degree = f
        .degree()
        .ok_or_else(|| Error::NotHomogeneous(format!("brute membership of `{f}`")))?;
    let ring = ideal.ring();
    let ambient = free_monomials(ring, degree)?;
    let index: BTreeMap<&Monomial, usize> =
        ambient.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut cols: Vec<Vec<u64>> = Vec::new();
    let mut push_products = |p: &TermList, pdeg: i64| -> Result<()> {
        for m in free_monomials(ring, degree - pdeg)? {
            let mut v = vec![0u64; ambient.len()];
            for (pm, pc) in p {
                v[*index.get(&crate::monomial::mono_mul(pm, &m)).unwrap()] = *pc;
            }
            cols.push(v);
        }
        Ok(())
    };
    for g in ideal.generators() {
        if let Some(d) = g.degree() {
            push_products(g.terms(), d)?;
        }
    }
    for rel in ring.relations_raw() {
        let d = mono_wdeg(&rel[0].0, &ring.var_degrees());
        push_products(rel, d)?;
    }
    let mut target = vec![0u64; ambient.len()];
    for (m, c) in f.terms() {
        target[*index.get(m).unwrap()] = *c;
    }
    if cols.is_empty() {
        return Ok(target.iter().all(|&c| c == 0));
    }
    let span = FpMat::from_columns(ring.field(), ambient.len(), &cols);
    Ok(span.column_span_contains(&target))
}

/// Dimension of `{ g in k[x..]_d : g*f in preimage of I }`, by linear
/// algebra on monomial coordinates. This is the degree-`d` slice of the
/// preimage of `(I : f)`.
pub fn brute_colon_dimension(ideal: &Ideal, f: &Poly, degree: i64) -> Result<usize> {
    let ring = ideal.ring();
    let fdeg = f
        .degree()
        .ok_or_else(|| Error::NotHomogeneous(format!("brute colon by `{f}`")))?;
    let gmonos = free_monomials(ring, degree)?;
    if gmonos.is_empty() {
        return Ok(0);
    }
    let target_deg = degree + fdeg;
    let ambient = free_monomials(ring, target_deg)?;
    let index: BTreeMap<&Monomial, usize> =
        ambient.iter().enumerate().map(|(i, m)| (m, i)).collect();
    // columns of the span at target degree
    let mut span_cols: Vec<Vec<u64>> = Vec::new();
    let mut push_products = |p: &TermList, pdeg: i64| -> Result<()> {
        for m in free_monomials(ring, target_deg - pdeg)? {
            let mut v = vec![0u64; ambient.len()];
            for (pm, pc) in p {
                v[*index.get(&crate::monomial::mono_mul(pm, &m)).unwrap()] = *pc;
            }
            span_cols.push(v);
        }
        Ok(())
    };
    for g in ideal.generators() {
        if let Some(d) = g.degree() {
            push_products(g.terms(), d)?;
        }
    }
    for rel in ring.relations_raw() {
        let d = mono_wdeg(&rel[0].0, &ring.var_degrees());
        push_products(rel, d)?;
    }
    // candidate vectors g_k * f
    let mut cand_cols: Vec<Vec<u64>> = Vec::new();
    for gm in &gmonos {
        let mut v = vec![0u64; ambient.len()];
        for (fm, fc) in f.terms() {
            v[*index.get(&crate::monomial::mono_mul(fm, gm)).unwrap()] = *fc;
        }
        cand_cols.push(v);
    }
    let span_rank = if span_cols.is_empty() {
        0
    } else {
        FpMat::from_columns(ring.field(), ambient.len(), &span_cols).rank()
    };
    let mut all = span_cols;
    all.extend(cand_cols);
    let total_rank = FpMat::from_columns(ring.field(), ambient.len(), &all).rank();
    // candidates contributing new directions are exactly the non-members
    Ok(gmonos.len() - (total_rank - span_rank))
}

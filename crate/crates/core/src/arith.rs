//! Ring-agnostic term-list arithmetic.
//!
//! Everything here operates on raw sorted term lists plus an explicit
//! `(PrimeField, TermOrder)` pair, so the Groebner engine and the ring's own
//! relation bookkeeping can share one kernel without reference cycles.

use crate::field::PrimeField;
use crate::monomial::{mono_mul, Monomial, TermOrder};
use std::cmp::Ordering;

/// Scalar polynomial as a term list, sorted strictly descending in the order.
pub type TermList = Vec<(Monomial, u64)>;

/// One term of a free-module element: component index, monomial, coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTerm {
    pub comp: u32,
    pub mono: Monomial,
    pub c: u64,
}

/// Free-module element as a flat term list, sorted strictly descending.
pub type MPoly = Vec<MTerm>;

/// Module order: monomials compare by the ring order, ties prefer the lower
/// component index (term-over-position).
#[inline]
pub fn mterm_cmp(ord: TermOrder, a: &MTerm, b: &MTerm) -> Ordering {
    match ord.cmp(&a.mono, &b.mono) {
        Ordering::Equal => b.comp.cmp(&a.comp),
        o => o,
    }
}

pub fn mpoly_is_zero(f: &MPoly) -> bool {
    f.is_empty()
}

/// Canonicalize an arbitrary term soup: sort descending, merge, drop zeros.
pub fn mpoly_normalize(field: PrimeField, ord: TermOrder, mut terms: MPoly) -> MPoly {
    terms.sort_unstable_by(|a, b| mterm_cmp(ord, b, a));
    let mut out: MPoly = Vec::with_capacity(terms.len());
    for t in terms {
        if t.c == 0 {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.comp == t.comp && last.mono == t.mono => {
                last.c = field.add(last.c, t.c);
                if last.c == 0 {
                    out.pop();
                }
            }
            _ => out.push(t),
        }
    }
    out
}

/// `f + c * m * g` where `c` is a field element and `m` a monomial.
pub fn mpoly_add_scaled(
    field: PrimeField,
    ord: TermOrder,
    f: &MPoly,
    c: u64,
    m: &[u32],
    g: &MPoly,
) -> MPoly {
    if c == 0 || g.is_empty() {
        return f.clone();
    }
    let mut out: MPoly = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.len() && j < g.len() {
        let gt = MTerm {
            comp: g[j].comp,
            mono: mono_mul(&g[j].mono, m),
            c: field.mul(c, g[j].c),
        };
        match mterm_cmp(ord, &f[i], &gt) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(gt);
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(f[i].c, gt.c);
                if s != 0 {
                    out.push(MTerm { comp: f[i].comp, mono: f[i].mono.clone(), c: s });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while j < g.len() {
        out.push(MTerm {
            comp: g[j].comp,
            mono: mono_mul(&g[j].mono, m),
            c: field.mul(c, g[j].c),
        });
        j += 1;
    }
    out
}

pub fn mpoly_add(field: PrimeField, ord: TermOrder, f: &MPoly, g: &MPoly) -> MPoly {
    let one = vec![0; mono_len(f, g)];
    mpoly_add_scaled(field, ord, f, 1, &one, g)
}

fn mono_len(f: &MPoly, g: &MPoly) -> usize {
    f.first().or_else(|| g.first()).map(|t| t.mono.len()).unwrap_or(0)
}

pub fn mpoly_scale(field: PrimeField, f: &MPoly, c: u64) -> MPoly {
    if c == 0 {
        return Vec::new();
    }
    f.iter()
        .map(|t| MTerm { comp: t.comp, mono: t.mono.clone(), c: field.mul(t.c, c) })
        .collect()
}

pub fn mpoly_neg(field: PrimeField, f: &MPoly) -> MPoly {
    f.iter()
        .map(|t| MTerm { comp: t.comp, mono: t.mono.clone(), c: field.neg(t.c) })
        .collect()
}

/// Multiply a module element by a scalar term list.
pub fn mpoly_mul_scalar(field: PrimeField, ord: TermOrder, f: &MPoly, s: &[(Monomial, u64)]) -> MPoly {
    let mut acc: MPoly = Vec::new();
    for (m, c) in s {
        acc = mpoly_add_scaled(field, ord, &acc, *c, m, f);
    }
    acc
}

// Scalar term-list helpers (component 0 module elements, unwrapped).

pub fn tl_to_mpoly(f: &TermList, comp: u32) -> MPoly {
    f.iter().map(|(m, c)| MTerm { comp, mono: m.clone(), c: *c }).collect()
}

pub fn mpoly_to_tl(f: &MPoly) -> TermList {
    f.iter().map(|t| (t.mono.clone(), t.c)).collect()
}

pub fn tl_add(field: PrimeField, ord: TermOrder, f: &TermList, g: &[(Monomial, u64)]) -> TermList {
    mpoly_to_tl(&mpoly_add(field, ord, &tl_to_mpoly(f, 0), &g.iter().map(|(m, c)| MTerm { comp: 0, mono: m.clone(), c: *c }).collect::<Vec<_>>()))
}

pub fn tl_mul(field: PrimeField, ord: TermOrder, f: &TermList, g: &TermList) -> TermList {
    let mut soup: MPoly = Vec::with_capacity(f.len() * g.len());
    for (mf, cf) in f {
        for (mg, cg) in g {
            soup.push(MTerm { comp: 0, mono: mono_mul(mf, mg), c: field.mul(*cf, *cg) });
        }
    }
    mpoly_to_tl(&mpoly_normalize(field, ord, soup))
}

pub fn tl_neg(field: PrimeField, f: &TermList) -> TermList {
    f.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect()
}

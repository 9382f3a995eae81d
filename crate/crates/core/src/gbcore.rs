//! Buchberger engine over free modules `k[x]^r`.
//!
//! One engine serves ideals (r = 1), module Groebner bases, syzygies and
//! lifts. Selection is normal (sugar-free): pairs are processed by total
//! degree of the lcm, ties broken by index. A configurable ceiling on the
//! S-pair degree turns runaway computations into a hard error instead of a
//! wrong answer.
//!
//! When representation tracking is on, every basis element carries its
//! expression over the input generators, and every S-pair that reduces to
//! zero contributes a syzygy of the inputs. Buchberger's coprimality
//! criterion is only applied when syzygies are not requested (the skipped
//! pairs' syzygies would be missing otherwise) and only in the scalar case.

use crate::arith::*;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::*;
use std::cmp::Ordering;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Track {
    /// Basis only.
    None,
    /// Basis plus expressions of basis elements over the inputs.
    Reps,
    /// Reps plus generators of the syzygy module of the inputs.
    Syzygies,
}

#[derive(Clone, Copy, Debug)]
pub struct GbConfig {
    pub degree_ceiling: u32,
    pub track: Track,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { degree_ceiling: 64, track: Track::None }
    }
}

pub struct GbOutput {
    /// Reduced, monic, auto-reduced basis, sorted descending by lead term.
    pub basis: Vec<MPoly>,
    /// `reps[k]`: the k-th basis element as a combination of the inputs,
    /// encoded with component i = input i. Present under `Track::Reps+`.
    pub reps: Vec<MPoly>,
    /// Generators of `Syz(inputs)`, same encoding. Present under
    /// `Track::Syzygies`.
    pub syzygies: Vec<MPoly>,
}

struct Engine {
    field: PrimeField,
    ord: TermOrder,
    cfg: GbConfig,
    basis: Vec<MPoly>,
    reps: Vec<MPoly>,
    scalar: bool,
}

impl Engine {
    fn lead<'a>(&self, f: &'a MPoly) -> &'a MTerm {
        &f[0]
    }

    /// Full division: returns the remainder; when `quot` is given, records
    /// the quotient against each basis element so that
    /// `f = sum q_k g_k + remainder` exactly.
    fn reduce_full(&self, mut f: MPoly, quot: Option<&mut Vec<TermList>>) -> MPoly {
        let mut out: MPoly = Vec::new();
        let mut q: Option<&mut Vec<TermList>> = quot;
        'outer: while !f.is_empty() {
            let (lt_comp, lt_mono, lt_c) = (f[0].comp, f[0].mono.clone(), f[0].c);
            for (k, g) in self.basis.iter().enumerate() {
                if g.is_empty() {
                    continue;
                }
                let gl = self.lead(g);
                if gl.comp == lt_comp {
                    if let Some(m) = mono_div(&lt_mono, &gl.mono) {
                        // basis is monic: subtract lt.c * m * g
                        let c = self.field.neg(lt_c);
                        f = mpoly_add_scaled(self.field, self.ord, &f, c, &m, g);
                        if let Some(qs) = q.as_deref_mut() {
                            qs[k] = tl_add(self.field, self.ord, &qs[k], &[(m, lt_c)]);
                        }
                        continue 'outer;
                    }
                }
            }
            // lead term is irreducible: move it to the remainder
            out.push(f.remove(0));
        }
        out
    }

    fn monicize(&self, f: &mut MPoly, rep: Option<&mut MPoly>) {
        let lc = f[0].c;
        if lc != 1 {
            let inv = self.field.inv(lc);
            *f = mpoly_scale(self.field, f, inv);
            if let Some(r) = rep {
                *r = mpoly_scale(self.field, r, inv);
            }
        }
    }
}

pub fn buchberger(
    field: PrimeField,
    ord: TermOrder,
    inputs: &[MPoly],
    cfg: GbConfig,
) -> Result<GbOutput> {
    let track = cfg.track;
    let mut eng = Engine {
        field,
        ord,
        cfg,
        basis: Vec::new(),
        reps: Vec::new(),
        scalar: inputs.iter().all(|f| f.iter().all(|t| t.comp == 0)),
    };
    let mut syzygies: Vec<MPoly> = Vec::new();
    let nvars = inputs
        .iter()
        .flat_map(|f| f.first())
        .map(|t| t.mono.len())
        .next()
        .unwrap_or(0);

    for (i, f) in inputs.iter().enumerate() {
        if f.is_empty() {
            // a zero input contributes the unit syzygy e_i
            if track == Track::Syzygies {
                syzygies.push(vec![MTerm { comp: i as u32, mono: mono_one(nvars), c: 1 }]);
            }
            continue;
        }
        let mut g = f.clone();
        let mut rep = vec![MTerm { comp: i as u32, mono: mono_one(nvars), c: 1 }];
        // rep scales with g
        let lc = g[0].c;
        if lc != 1 {
            let inv = field.inv(lc);
            g = mpoly_scale(field, &g, inv);
            rep = mpoly_scale(field, &rep, inv);
        }
        eng.basis.push(g);
        eng.reps.push(rep);
    }

    // pair queue ordered by (totdeg of lcm, i, j)
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut enqueue = |basis: &[MPoly], pairs: &mut BTreeSet<(u32, usize, usize)>, t: usize| {
        for i in 0..t {
            let (a, b) = (&basis[i][0], &basis[t][0]);
            if a.comp != b.comp {
                continue;
            }
            let deg = mono_totdeg(&mono_lcm(&a.mono, &b.mono));
            pairs.insert((deg, i, t));
        }
    };
    for t in 0..eng.basis.len() {
        enqueue(&eng.basis, &mut pairs, t);
    }

    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        if deg > eng.cfg.degree_ceiling {
            return Err(Error::DegreeCeiling { degree: deg, ceiling: eng.cfg.degree_ceiling });
        }
        let (li, lj) = (eng.basis[i][0].clone(), eng.basis[j][0].clone());
        if track != Track::Syzygies
            && eng.scalar
            && mono_coprime(&li.mono, &lj.mono)
        {
            continue;
        }
        let lcm = mono_lcm(&li.mono, &lj.mono);
        let ui = mono_div(&lcm, &li.mono).unwrap();
        let uj = mono_div(&lcm, &lj.mono).unwrap();
        // both monic: S = ui*g_i - uj*g_j
        let s = {
            let scaled = mpoly_add_scaled(
                field,
                ord,
                &mpoly_mul_scalar(field, ord, &eng.basis[i], &[(ui.clone(), 1)]),
                field.neg(1),
                &uj,
                &eng.basis[j],
            );
            scaled
        };
        let mut quot: Option<Vec<TermList>> =
            if track != Track::None { Some(vec![Vec::new(); eng.basis.len()]) } else { None };
        let rem = eng.reduce_full(s, quot.as_mut());
        if rem.is_empty() {
            if track == Track::Syzygies {
                // ui*rep_i - uj*rep_j - sum q_k rep_k
                let mut syz = mpoly_add_scaled(
                    field,
                    ord,
                    &mpoly_mul_scalar(field, ord, &eng.reps[i], &[(ui, 1)]),
                    field.neg(1),
                    &uj,
                    &eng.reps[j],
                );
                for (k, qk) in quot.unwrap().iter().enumerate() {
                    if !qk.is_empty() {
                        let t = mpoly_mul_scalar(field, ord, &eng.reps[k], qk);
                        syz = mpoly_add(field, ord, &syz, &mpoly_neg(field, &t));
                    }
                }
                if !syz.is_empty() {
                    syzygies.push(syz);
                }
            }
            continue;
        }
        let mut rem = rem;
        let mut rep_new: MPoly = Vec::new();
        if track != Track::None {
            rep_new = mpoly_add_scaled(
                field,
                ord,
                &mpoly_mul_scalar(field, ord, &eng.reps[i], &[(ui, 1)]),
                field.neg(1),
                &uj,
                &eng.reps[j],
            );
            for (k, qk) in quot.unwrap().iter().enumerate() {
                if !qk.is_empty() {
                    let t = mpoly_mul_scalar(field, ord, &eng.reps[k], qk);
                    rep_new = mpoly_add(field, ord, &rep_new, &mpoly_neg(field, &t));
                }
            }
        }
        eng.monicize(&mut rem, if track != Track::None { Some(&mut rep_new) } else { None });
        eng.basis.push(rem);
        eng.reps.push(rep_new);
        let t = eng.basis.len() - 1;
        enqueue(&eng.basis, &mut pairs, t);
    }

    // auto-reduce to the unique reduced basis, keeping reps in sync
    loop {
        let mut changed = false;
        for k in 0..eng.basis.len() {
            if eng.basis[k].is_empty() {
                continue;
            }
            let f = std::mem::take(&mut eng.basis[k]);
            let mut quot: Option<Vec<TermList>> =
                if track != Track::None { Some(vec![Vec::new(); eng.basis.len()]) } else { None };
            let mut r = eng.reduce_full(f.clone(), quot.as_mut());
            if r != f {
                changed = true;
            }
            if track != Track::None {
                let mut rep = std::mem::take(&mut eng.reps[k]);
                for (l, ql) in quot.unwrap().iter().enumerate() {
                    if !ql.is_empty() {
                        let t = mpoly_mul_scalar(field, ord, &eng.reps[l], ql);
                        rep = mpoly_add(field, ord, &rep, &mpoly_neg(field, &t));
                    }
                }
                if r.is_empty() {
                    // fully redundant element: its rep is a syzygy
                    if track == Track::Syzygies && !rep.is_empty() {
                        syzygies.push(rep.clone());
                    }
                    eng.reps[k] = MPoly::new();
                } else {
                    eng.monicize(&mut r, Some(&mut rep));
                    eng.reps[k] = rep;
                }
            } else if !r.is_empty() {
                eng.monicize(&mut r, None);
            }
            eng.basis[k] = r;
        }
        if !changed {
            break;
        }
    }

    // drop zeros, sort canonically (descending lead)
    let mut packed: Vec<(MPoly, MPoly)> = eng
        .basis
        .into_iter()
        .zip(eng.reps)
        .filter(|(b, _)| !b.is_empty())
        .collect();
    packed.sort_by(|(a, _), (b, _)| mterm_cmp(ord, &b[0], &a[0]));
    let (basis, reps): (Vec<_>, Vec<_>) = packed.into_iter().unzip();

    Ok(GbOutput { basis, reps, syzygies })
}

/// Full normal form of `f` against a reduced basis (deterministic: the basis
/// order is canonical).
pub fn normal_form(field: PrimeField, ord: TermOrder, basis: &[MPoly], f: &MPoly) -> MPoly {
    let eng = Engine {
        field,
        ord,
        cfg: GbConfig::default(),
        basis: basis.to_vec(),
        reps: Vec::new(),
        scalar: false,
    };
    eng.reduce_full(f.clone(), None)
}

/// Normal form for scalar term lists against a scalar basis.
pub fn normal_form_tl(field: PrimeField, ord: TermOrder, basis: &[TermList], f: &TermList) -> TermList {
    let b: Vec<MPoly> = basis.iter().map(|g| tl_to_mpoly(g, 0)).collect();
    mpoly_to_tl(&normal_form(field, ord, &b, &tl_to_mpoly(f, 0)))
}

/// Compare module terms for an external sort.
pub fn cmp_mterms(ord: TermOrder, a: &MTerm, b: &MTerm) -> Ordering {
    mterm_cmp(ord, a, b)
}

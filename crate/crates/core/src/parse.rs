//! Polynomial string grammar shared by all input files.
//!
//! Tokens: integer coefficients, variable names, `*`, `+`, `-`, `^` with
//! positive integer exponents; whitespace is insignificant.
//! Example: `3*x^2 - y*x`.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Star,
    Plus,
    Minus,
    Caret,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit = &s[start..i];
                if lit.len() > 30 {
                    return Err(Error::Parse { pos: start, msg: "integer literal too long".into() });
                }
                let v: u128 = lit.parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "bad integer literal".into(),
                })?;
                if v > u64::MAX as u128 {
                    return Err(Error::Parse { pos: start, msg: "integer literal too large".into() });
                }
                out.push((start, Tok::Int(v as u64)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") });
            }
        }
    }
    Ok(out)
}

pub fn parse_poly(ring: &Ring, s: &str) -> Result<Poly> {
    let toks = lex(s)?;
    let mut pos = 0usize;
    let mut acc = ring.zero();
    let mut first = true;
    let end = toks.len();
    if end == 0 {
        return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
    }
    while pos < end {
        // sign
        let mut negative = false;
        if first {
            if let Tok::Minus = toks[pos].1 {
                negative = true;
                pos += 1;
            } else if let Tok::Plus = toks[pos].1 {
                pos += 1;
            }
            first = false;
        } else {
            match &toks[pos].1 {
                Tok::Plus => pos += 1,
                Tok::Minus => {
                    negative = true;
                    pos += 1;
                }
                _ => {
                    return Err(Error::Parse {
                        pos: toks[pos].0,
                        msg: "expected `+` or `-` between terms".into(),
                    })
                }
            }
        }
        // term: factor { '*' factor }
        let mut coeff: i64 = if negative { -1 } else { 1 };
        let mut exps = vec![0u32; ring.nvars()];
        let mut coeff_p: u64 = 1;
        let p = ring.field().p();
        let mut any = false;
        loop {
            if pos >= end {
                if any {
                    break;
                }
                return Err(Error::Parse { pos: s.len(), msg: "dangling sign".into() });
            }
            match &toks[pos].1 {
                Tok::Int(v) => {
                    coeff_p = ring.field().mul(coeff_p, v % p);
                    pos += 1;
                    any = true;
                }
                Tok::Ident(name) => {
                    let idx = ring.var_index(name).ok_or_else(|| Error::Parse {
                        pos: toks[pos].0,
                        msg: format!("unknown variable `{name}`"),
                    })?;
                    pos += 1;
                    let mut e: u32 = 1;
                    if pos < end && toks[pos].1 == Tok::Caret {
                        pos += 1;
                        match toks.get(pos) {
                            Some((_, Tok::Int(v))) if *v >= 1 && *v <= u32::MAX as u64 => {
                                e = *v as u32;
                                pos += 1;
                            }
                            _ => {
                                return Err(Error::Parse {
                                    pos: toks.get(pos).map(|t| t.0).unwrap_or(s.len()),
                                    msg: "expected positive integer exponent after `^`".into(),
                                })
                            }
                        }
                    }
                    exps[idx] = exps[idx].checked_add(e).ok_or_else(|| Error::Parse {
                        pos: toks[pos - 1].0,
                        msg: "exponent overflow".into(),
                    })?;
                    any = true;
                }
                other => {
                    return Err(Error::Parse {
                        pos: toks[pos].0,
                        msg: format!("unexpected token {other:?} in term"),
                    })
                }
            }
            if pos < end && toks[pos].1 == Tok::Star {
                pos += 1;
                continue;
            }
            break;
        }
        let signed = if coeff < 0 {
            ring.field().neg(coeff_p)
        } else {
            coeff_p
        };
        acc = acc
            .add(&crate::poly::Poly::from_raw(
                ring.clone(),
                if signed == 0 { Vec::new() } else { vec![(exps, signed)] },
            ))
            .expect("same ring");
    }
    Ok(acc)
}

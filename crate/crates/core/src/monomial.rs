//! Exponent vectors and monomial orders.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Exponent vector; length always equals the ring's variable count.
pub type Monomial = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Grevlex,
    Lex,
}

/// A monomial order. `elim_last` turns the order into a product order that
/// eliminates the last variable: exponents of that variable compare first,
/// ties fall through to `kind` on the full vector. Used internally for the
/// one-extra-variable intersection trick.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub elim_last: bool,
}

impl TermOrder {
    pub fn grevlex() -> Self {
        TermOrder { kind: OrderKind::Grevlex, elim_last: false }
    }

    pub fn lex() -> Self {
        TermOrder { kind: OrderKind::Lex, elim_last: false }
    }

    pub fn name(&self) -> String {
        let base = match self.kind {
            OrderKind::Grevlex => "grevlex",
            OrderKind::Lex => "lex",
        };
        if self.elim_last {
            format!("{base}-elim1")
        } else {
            base.to_string()
        }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        if self.elim_last {
            let n = a.len();
            match a[n - 1].cmp(&b[n - 1]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        match self.kind {
            OrderKind::Lex => a.cmp(b),
            OrderKind::Grevlex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // ties: last differing exponent, smaller one wins
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

pub fn mono_one(nvars: usize) -> Monomial {
    vec![0; nvars]
}

pub fn mono_is_one(m: &[u32]) -> bool {
    m.iter().all(|&e| e == 0)
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a / b` when `b` divides `a`.
pub fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    let mut out = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(out)
}

pub fn mono_divides(b: &[u32], a: &[u32]) -> bool {
    b.iter().zip(a).all(|(y, x)| y <= x)
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn mono_totdeg(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// Internal (weighted) degree with respect to per-variable degrees.
pub fn mono_wdeg(a: &[u32], weights: &[i64]) -> i64 {
    a.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
}

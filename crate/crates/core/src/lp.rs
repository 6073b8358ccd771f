//! Length positive sets `LP(x) = { v in W : l(x, v r) >= 0 for all r > 0 }`.

use std::fmt;

use crate::roots::{AffineRoot, Coweight};
use crate::titscone::{length_functional, WtElement};
use crate::weyl::{FinitePart, Letter, Side, WeylElt};

/// `LP(x)`, kept symbolic when it is infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpSet {
    /// Sorted by `(length, side)`.
    Finite(Vec<WeylElt>),
    /// The identity together with every element of the given side.
    HalfSide(Side),
    All,
}

impl LpSet {
    pub fn contains(&self, v: WeylElt) -> bool {
        match self {
            LpSet::Finite(list) => list.contains(&v),
            LpSet::HalfSide(side) => v.side().compatible(*side),
            LpSet::All => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, LpSet::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&[WeylElt]> {
        match self {
            LpSet::Finite(list) => Some(list),
            _ => None,
        }
    }

    /// The shortest member. Infinite sets always contain the identity.
    pub fn first(&self) -> WeylElt {
        match self {
            LpSet::Finite(list) => list[0],
            _ => WeylElt::identity(),
        }
    }

    /// Members of length at most `max_len`, sorted.
    pub fn up_to(&self, max_len: u64) -> Vec<WeylElt> {
        match self {
            LpSet::Finite(list) => list
                .iter()
                .copied()
                .filter(|v| v.length() <= max_len)
                .collect(),
            _ => WeylElt::all_up_to(max_len)
                .into_iter()
                .filter(|v| self.contains(*v))
                .collect(),
        }
    }
}

impl fmt::Display for LpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpSet::Finite(list) => {
                f.write_str("{")?;
                for (i, v) in list.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("}")
            }
            LpSet::HalfSide(side) => write!(f, "{side}"),
            LpSet::All => f.write_str("ALL"),
        }
    }
}

pub fn lp_set(x: WtElement) -> LpSet {
    if x.level() > 0 {
        LpSet::Finite(positive_level(x.w(), x.mu()))
    } else {
        // LP(x) = { v : s_i v > v } where s_i is the last letter of w
        match x.w().last_letter() {
            None => LpSet::All,
            Some(Letter::S1) => LpSet::HalfSide(Side::Left),
            Some(Letter::S0) => LpSet::HalfSide(Side::Right),
        }
    }
}

pub fn lp_contains(x: WtElement, v: WeylElt) -> bool {
    lp_set(x).contains(v)
}

/// Root index bound that makes [`lp_oracle`] exact for `v`.
pub fn oracle_bound(x: WtElement, v: WeylElt) -> i64 {
    2 * x.mu().k.abs() + 2 * v.t.abs() + x.level() + 2
}

/// Brute force: test `l(x, v r) >= 0` over positive roots of index at most
/// `n_bound`.
pub fn lp_oracle(x: WtElement, v: WeylElt, n_bound: i64) -> bool {
    AffineRoot::positive_roots(n_bound).all(|r| length_functional(x, v.act_root(r)) >= 0)
}

/// Classification for positive level, with `x = w0 tau^r eps^mu`.
fn positive_level(w: WeylElt, mu: Coweight) -> Vec<WeylElt> {
    let (k, l) = (mu.k, mu.l);
    let r = w.t;
    // unique t with -l/2 < j = k - t l <= l/2
    let t = (2 * k - l).div_euclid(2 * l) + i64::from((2 * k - l).rem_euclid(2 * l) != 0);
    let j = k - t * l;
    let tau = WeylElt::tau(t);
    let (s0, s1) = (WeylElt::s0(), WeylElt::s1());
    // [w0 a > 0]
    let phi = i64::from(w.v0 == FinitePart::Identity);

    let mut out = Vec::new();
    for v0 in [FinitePart::Identity, FinitePart::S1] {
        let sj = v0.sign().as_i64() * j;
        if 1 <= sj && 2 * sj < l {
            out.push(tau * WeylElt::new(v0, 0));
        }
    }
    if j == 0 {
        if t <= 0 || t >= phi - r {
            out.push(tau);
        }
        if t >= 1 || t < phi - r {
            out.push(tau * s1);
        }
    }
    if 2 * j == l {
        if t >= 0 || t <= -1 - r {
            out.push(tau);
        }
        if t <= -1 || t >= -r {
            out.push(tau * s0);
        }
    }
    if 2 * j == l - 1 && -r <= t && t <= -1 {
        out.push(tau * s0);
    }
    if 2 * j == 1 - l && 1 <= t && t <= -r {
        out.push(tau * s1 * s0);
    }
    out.sort();
    out.dedup();
    out
}

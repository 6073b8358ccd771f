//! The generalised Demazure product on `W_T`.
//!
//! For `(u, v)` in `LP(x) x LP(y)` minimising the graph distance
//! `u => w_y v`, the product is
//! `x * y = w_x u v^-1 eps^(v u^-1 mu_x + mu_y - v wt(u => w_y v))`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lp::{lp_set, LpSet};
use crate::qbg;
use crate::roots::Coweight;
use crate::titscone::{wt_length, wt_mul, WtElement};
use crate::weyl::WeylElt;

/// Distance minimising pairs `M_{x,y}`, sorted by `(length(u), length(v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPairs {
    pub pairs: Vec<(WeylElt, WeylElt)>,
    pub dist: u64,
}

impl MinPairs {
    /// The `v` components.
    pub fn right_components(&self) -> BTreeSet<WeylElt> {
        self.pairs.iter().map(|&(_, v)| v).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemazureResult {
    pub product: WtElement,
    pub pairs: MinPairs,
    /// `u v^-1`, shared by all minimising pairs.
    pub uv_inverse: WeylElt,
    /// `v wt(u => w_y v)`, shared by all minimising pairs.
    pub v_weight: Coweight,
    /// The distance, which is also the length defect.
    pub defect: u64,
}

/// Candidate windows for `LP(x)` and `LP(y)`. Finite sets are used as is.
/// An infinite `LP(y)` is cut at a length past which moving further out can
/// only increase the distance; an infinite `LP(x)` is then cut just past the
/// longest target `w_y v`.
fn candidate_windows(x: WtElement, y: WtElement) -> (Vec<WeylElt>, Vec<WeylElt>) {
    let (lpx, lpy) = (lp_set(x), lp_set(y));
    let wy = y.w();
    let right = match &lpy {
        LpSet::Finite(list) => list.clone(),
        infinite => {
            let cut = match lpx.as_finite() {
                Some(us) => {
                    let longest = us.iter().map(|u| u.length()).max().unwrap_or(0);
                    2 * longest + 2 * wy.length() + 2
                }
                None => x.w().length() + wy.length() + 4,
            };
            infinite.up_to(cut)
        }
    };
    let left = match &lpx {
        LpSet::Finite(list) => list.clone(),
        infinite => {
            let cut = right.iter().map(|v| (wy * *v).length()).max().unwrap_or(0) + 1;
            infinite.up_to(cut)
        }
    };
    (left, right)
}

pub fn min_pairs(x: WtElement, y: WtElement) -> Result<MinPairs> {
    let (left, right) = candidate_windows(x, y);
    let wy = y.w();
    let mut best = u64::MAX;
    let mut pairs = Vec::new();
    for &u in &left {
        for &v in &right {
            let d = qbg::distance(u, wy * v);
            if d < best {
                best = d;
                pairs.clear();
            }
            if d == best {
                pairs.push((u, v));
            }
        }
    }
    // with LP(x) infinite, an optimum reaches w_y v or the opposite side
    if !lp_set(x).is_finite() && best > 1 {
        return Err(Error::WindowTooSmall(format!(
            "best distance {best} for {x} and {y}"
        )));
    }
    pairs.sort_by_key(|&(u, v)| (u.length(), v.length(), u, v));
    Ok(MinPairs { pairs, dist: best })
}

/// The product computed from one pair, together with `u v^-1` and
/// `v wt(u => w_y v)`.
pub fn product_for_pair(
    x: WtElement,
    y: WtElement,
    u: WeylElt,
    v: WeylElt,
) -> Result<(WtElement, WeylElt, Coweight)> {
    let wt = qbg::weight(u, y.w() * v);
    product_with_weight(x, y, u, v, wt)
}

/// As [`product_for_pair`], with the path weight supplied by the caller.
pub fn product_with_weight(
    x: WtElement,
    y: WtElement,
    u: WeylElt,
    v: WeylElt,
    wt: Coweight,
) -> Result<(WtElement, WeylElt, Coweight)> {
    let uv_inverse = u * v.inverse();
    let v_weight = v.act_coweight(wt);
    let mu = uv_inverse.inverse().act_coweight(x.mu()) + y.mu() - v_weight;
    let product = WtElement::new(x.w() * uv_inverse, mu)?;
    Ok((product, uv_inverse, v_weight))
}

pub fn dem_product(x: WtElement, y: WtElement) -> Result<DemazureResult> {
    let pairs = min_pairs(x, y)?;
    let (u, v) = pairs.pairs[0];
    let (product, uv_inverse, v_weight) = product_for_pair(x, y, u, v)?;
    for &(u2, v2) in &pairs.pairs[1..] {
        let (other, _, _) = product_for_pair(x, y, u2, v2)?;
        if other != product {
            return Err(Error::WellDefinednessViolation {
                first: format!("({u}, {v}) -> {product}"),
                other: format!("({u2}, {v2}) -> {other}"),
            });
        }
    }
    let defect = pairs.dist;
    Ok(DemazureResult {
        product,
        pairs,
        uv_inverse,
        v_weight,
        defect,
    })
}

/// `LP(x * y)` equals the set of `v` components of `M_{x,y}`. Meaningful for
/// positive levels.
pub fn lp_of_product_check(x: WtElement, y: WtElement) -> Result<bool> {
    let res = dem_product(x, y)?;
    let expected: Vec<WeylElt> = res.pairs.right_components().into_iter().collect();
    let mut expected = expected;
    expected.sort();
    Ok(lp_set(res.product) == LpSet::Finite(expected))
}

/// Whether `LP(y) ∩ w_y^-1 LP(x)` is nonempty.
pub fn is_length_additive(x: WtElement, y: WtElement) -> bool {
    let (lpx, lpy) = (lp_set(x), lp_set(y));
    let wy = y.w();
    match (&lpx, &lpy) {
        (LpSet::Finite(us), _) => us.iter().any(|u| lpy.contains(wy.inverse() * *u)),
        (_, LpSet::Finite(vs)) => vs.iter().any(|v| lpx.contains(wy * *v)),
        // Past length l(w_y) the side of w_y v depends only on the side of v,
        // so a window a little longer than w_y decides the question.
        _ => lpy
            .up_to(2 * wy.length() + 4)
            .into_iter()
            .any(|v| lpx.contains(wy * v)),
    }
}

/// The additivity equivalence: the Demazure product is length additive iff
/// the ordinary product is, iff `LP(y) ∩ w_y^-1 LP(x)` is nonempty; and then
/// both products agree.
pub fn additivity_equiv_check(x: WtElement, y: WtElement) -> Result<bool> {
    let res = dem_product(x, y)?;
    let (lx, ly) = (wt_length(x), wt_length(y));
    let dem_additive = wt_length(res.product) == lx + ly;
    let xy = wt_mul(x, y);
    let mul_additive = wt_length(xy) == lx + ly;
    let intersect = is_length_additive(x, y);
    let agree = !dem_additive || res.product == xy;
    Ok(dem_additive == mul_additive && mul_additive == intersect && agree)
}

/// `(x * y) * z == x * (y * z)`.
pub fn assoc_check(x: WtElement, y: WtElement, z: WtElement) -> Result<bool> {
    let left = dem_product(dem_product(x, y)?.product, z)?.product;
    let right = dem_product(x, dem_product(y, z)?.product)?.product;
    Ok(left == right)
}

/// The unique `v` in `set` minimising `distance(u, v)` (or `distance(v, u)`
/// when `reverse`), or `None` if the minimum is attained twice.
pub fn unique_minimizer(set: &[WeylElt], u: WeylElt, reverse: bool) -> Option<WeylElt> {
    let dist = |v: WeylElt| {
        if reverse {
            qbg::distance(v, u)
        } else {
            qbg::distance(u, v)
        }
    };
    let best = set.iter().map(|v| dist(*v)).min()?;
    let mut winners = set.iter().filter(|v| dist(**v) == best);
    let first = *winners.next()?;
    winners.next().is_none().then_some(first)
}

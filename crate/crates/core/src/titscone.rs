//! The double affine Weyl semigroup `W_T = W ⋉ T`.
//!
//! Elements are written `w * eps^mu` with `mu` in the Tits cone, and the
//! commutation rule is `eps^mu * w = w * eps^(w^-1 mu)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lp::lp_set;
use crate::roots::{pair, two_rho_pair, AffineRoot, Coweight, DoubleAffineRoot};
use crate::weyl::WeylElt;

/// Default cap on the number of `(root, m)` candidates examined by
/// [`daf_inversions_intersection`].
pub const DEFAULT_CANDIDATE_CAP: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WtElement {
    w: WeylElt,
    mu: Coweight,
}

impl WtElement {
    pub fn new(w: WeylElt, mu: Coweight) -> Result<Self> {
        if !mu.in_tits_cone() {
            return Err(Error::OutsideTitsCone(mu));
        }
        Ok(WtElement { w, mu })
    }

    /// `eps^mu * w`, rewritten as `w * eps^(w^-1 mu)`.
    pub fn from_left(mu: Coweight, w: WeylElt) -> Result<Self> {
        WtElement::new(w, w.inverse().act_coweight(mu))
    }

    pub fn identity() -> Self {
        WtElement {
            w: WeylElt::identity(),
            mu: Coweight::ZERO,
        }
    }

    pub fn weyl(w: WeylElt) -> Self {
        WtElement {
            w,
            mu: Coweight::ZERO,
        }
    }

    pub fn w(&self) -> WeylElt {
        self.w
    }

    pub fn mu(&self) -> Coweight {
        self.mu
    }

    pub fn level(&self) -> i64 {
        self.mu.l
    }

    pub fn length(&self) -> i64 {
        wt_length(*self)
    }
}

impl fmt::Display for WtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} e[{}]", self.w, self.mu)
    }
}

/// `(w_x eps^mu_x)(w_y eps^mu_y) = w_x w_y eps^(w_y^-1 mu_x + mu_y)`.
pub fn wt_mul(x: WtElement, y: WtElement) -> WtElement {
    let mu = y.w.inverse().act_coweight(x.mu) + y.mu;
    WtElement::new(x.w * y.w, mu).expect("the Tits cone is closed under the product")
}

/// `l(x, r) = <mu, r> + [r > 0] - [w r > 0]`.
pub fn length_functional(x: WtElement, r: AffineRoot) -> i64 {
    pair(x.mu, r) + i64::from(r.is_positive()) - i64::from(x.w.act_root(r).is_positive())
}

/// `<u^-1 mu, 2rho> - l(u) + l(w u)`; the value is the same for every
/// `u` in `LP(x)`.
pub fn wt_length_at(x: WtElement, u: WeylElt) -> i64 {
    two_rho_pair(u.inverse().act_coweight(x.mu)) - u.length() as i64 + (x.w * u).length() as i64
}

/// Length on `W_T`. It can be negative.
pub fn wt_length(x: WtElement) -> i64 {
    wt_length_at(x, lp_set(x).first())
}

/// Length computed from inversion counts:
/// `l(eps^mu) + #{r in Inv(w) : <mu, r> >= 0} - #{r in Inv(w) : <mu, r> < 0}`
/// where `l(eps^mu) = <u^-1 mu, 2rho> + 2 #{r > 0 : <mu, u r> = -1}`.
pub fn wt_length_via_inversions(x: WtElement) -> i64 {
    let u = lp_set(x).first();
    let dominant = u.inverse().act_coweight(x.mu);
    // <dominant, eps*a + n*d> = 2*eps*k + n*l equals -1 only for |n| <= 2|k| + 1
    let bound = 2 * dominant.k.abs() + 2;
    let minus_ones = if x.mu.l == 0 {
        0
    } else {
        AffineRoot::positive_roots(bound)
            .filter(|r| pair(dominant, *r) == -1)
            .count() as i64
    };
    let translation = two_rho_pair(dominant) + 2 * minus_ones;
    let (mut nonneg, mut neg) = (0i64, 0i64);
    for r in x.w.inversion_set() {
        if pair(x.mu, r) >= 0 {
            nonneg += 1;
        } else {
            neg += 1;
        }
    }
    translation + nonneg - neg
}

/// `w eps^mu (b + m pi) = w b + (m - <mu, b>) pi`.
pub fn daf_act(x: WtElement, beta: DoubleAffineRoot) -> DoubleAffineRoot {
    DoubleAffineRoot::new(x.w.act_root(beta.base), beta.m_pi - pair(x.mu, beta.base))
}

/// `y^-1 (b + m pi) = w^-1 b + (m + <mu, w^-1 b>) pi`.
pub fn daf_act_inverse(y: WtElement, beta: DoubleAffineRoot) -> DoubleAffineRoot {
    let base = y.w.inverse().act_root(beta.base);
    DoubleAffineRoot::new(base, beta.m_pi + pair(y.mu, base))
}

/// Index bound of the search box for [`daf_inversions_intersection`].
pub fn daf_box_bound(x: WtElement, y: WtElement) -> i64 {
    let ky = y.w.act_coweight(y.mu).k;
    2 * x.mu.k.abs().max(ky.abs()) + x.w.length() as i64 + y.w.length() as i64 + 2
}

/// `Inv(x) ∩ Inv(y^-1)`: positive double affine roots `b` with `x(b) < 0`
/// and `y^-1(b) < 0`.
pub fn daf_inversions_intersection(
    x: WtElement,
    y: WtElement,
    candidate_cap: u64,
) -> Result<BTreeSet<DoubleAffineRoot>> {
    daf_inversions_in_box(x, y, daf_box_bound(x, y), candidate_cap)
}

/// [`daf_inversions_intersection`] on an explicit box `|n| <= bound`.
pub fn daf_inversions_in_box(
    x: WtElement,
    y: WtElement,
    bound: i64,
    candidate_cap: u64,
) -> Result<BTreeSet<DoubleAffineRoot>> {
    // For b = base + m pi with m >= 0, x(b) < 0 needs m <= <mu_x, base> and
    // y^-1(b) < 0 needs m <= -<y.mu, w_y^-1 base>. For m < 0 the root is
    // -base + |m| pi and both inequalities flip sign.
    let mut ranges = Vec::new();
    let mut candidates = 0u64;
    for base in AffineRoot::positive_roots(bound) {
        let px = pair(x.mu, base);
        let py = pair(y.mu, y.w.inverse().act_root(base));
        let up = px.min(-py);
        if up >= 0 {
            candidates += up as u64 + 1;
            ranges.push((base, 0..=up));
        }
        let down = (-px).min(py);
        if down >= 1 {
            candidates += down as u64;
            ranges.push((base, -down..=-1));
        }
        if candidates > candidate_cap {
            return Err(Error::BoundOverflow {
                candidates,
                cap: candidate_cap,
            });
        }
    }

    let mut out = BTreeSet::new();
    for (base, ms) in ranges {
        for m in ms {
            let b = DoubleAffineRoot::positive_from(base, m);
            if !daf_act(x, b).is_positive() && !daf_act_inverse(y, b).is_positive() {
                if base.index().abs() == bound {
                    return Err(Error::BoxBoundaryHit { bound });
                }
                out.insert(b);
            }
        }
    }
    Ok(out)
}

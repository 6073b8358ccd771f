//! Real affine roots, coweights and their pairings for affine SL2.
//!
//! A real root is `eps*a + n*d` with `eps = ±1`; a coweight is
//! `k*av + m*d + l*L` where `av` is the finite coroot, `d` the null coweight
//! (the sum of the two simple coroots) and `L` the fundamental coweight that
//! carries the level.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A real affine root `eps*a + n*d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineRoot {
    pub eps: Sign,
    pub n: i64,
}

impl AffineRoot {
    pub const fn new(eps: Sign, n: i64) -> Self {
        AffineRoot { eps, n }
    }

    /// The simple root `a` (index 1).
    pub const fn alpha1() -> Self {
        AffineRoot::new(Sign::Plus, 0)
    }

    /// The simple root `-a+d` (index 0).
    pub const fn alpha0() -> Self {
        AffineRoot::new(Sign::Minus, 1)
    }

    /// The positive root indexed by `n`: `a + n*d` for `n >= 0` and
    /// `-a - n*d` for `n < 0`. Every positive root arises exactly once.
    pub fn positive_from_index(n: i64) -> Self {
        if n >= 0 {
            AffineRoot::new(Sign::Plus, n)
        } else {
            AffineRoot::new(Sign::Minus, -n)
        }
    }

    /// Inverse of [`AffineRoot::positive_from_index`] on positive roots.
    pub fn index(self) -> i64 {
        match self.eps {
            Sign::Plus => self.n,
            Sign::Minus => -self.n,
        }
    }

    /// All positive roots with index in `-bound..=bound`.
    pub fn positive_roots(bound: i64) -> impl Iterator<Item = AffineRoot> {
        (-bound..=bound).map(AffineRoot::positive_from_index)
    }

    pub fn is_positive(self) -> bool {
        self.n >= 1 || (self.n == 0 && self.eps == Sign::Plus)
    }

    pub fn negate(self) -> Self {
        AffineRoot::new(self.eps.flip(), -self.n)
    }

    pub fn is_simple(self) -> bool {
        self == AffineRoot::alpha0() || self == AffineRoot::alpha1()
    }

    /// `eps*av + n*d`; for the simple roots this is `(1,0,0)` and `(-1,1,0)`.
    pub fn coroot(self) -> Coweight {
        Coweight::new(self.eps.as_i64(), self.n, 0)
    }

    /// Height in terms of the simple roots (negative for negative roots).
    pub fn height(self) -> i64 {
        // eps*a + n*d = n*(-a+d) + (n + eps)*a
        2 * self.n + self.eps.as_i64()
    }
}

impl Neg for AffineRoot {
    type Output = AffineRoot;

    fn neg(self) -> AffineRoot {
        self.negate()
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps {
            Sign::Plus => write!(f, "a")?,
            Sign::Minus => write!(f, "-a")?,
        }
        match self.n {
            0 => Ok(()),
            1 => write!(f, "+d"),
            -1 => write!(f, "-d"),
            n => write!(f, "{n:+}d"),
        }
    }
}

/// `k*av + m*d + l*L`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight {
    pub k: i64,
    pub m: i64,
    pub l: i64,
}

impl Coweight {
    pub const ZERO: Coweight = Coweight { k: 0, m: 0, l: 0 };

    pub const fn new(k: i64, m: i64, l: i64) -> Self {
        Coweight { k, m, l }
    }

    pub fn level(self) -> i64 {
        self.l
    }

    /// Tits cone membership: positive level, or a multiple of `d`.
    pub fn in_tits_cone(self) -> bool {
        self.l > 0 || (self.l == 0 && self.k == 0)
    }

    pub fn to_array(self) -> [i64; 3] {
        [self.k, self.m, self.l]
    }
}

impl Add for Coweight {
    type Output = Coweight;

    fn add(self, rhs: Coweight) -> Coweight {
        Coweight::new(self.k + rhs.k, self.m + rhs.m, self.l + rhs.l)
    }
}

impl AddAssign for Coweight {
    fn add_assign(&mut self, rhs: Coweight) {
        *self = *self + rhs;
    }
}

impl Sub for Coweight {
    type Output = Coweight;

    fn sub(self, rhs: Coweight) -> Coweight {
        Coweight::new(self.k - rhs.k, self.m - rhs.m, self.l - rhs.l)
    }
}

impl Neg for Coweight {
    type Output = Coweight;

    fn neg(self) -> Coweight {
        Coweight::new(-self.k, -self.m, -self.l)
    }
}

impl Mul<Coweight> for i64 {
    type Output = Coweight;

    fn mul(self, rhs: Coweight) -> Coweight {
        Coweight::new(self * rhs.k, self * rhs.m, self * rhs.l)
    }
}

impl std::iter::Sum for Coweight {
    fn sum<I: Iterator<Item = Coweight>>(iter: I) -> Coweight {
        iter.fold(Coweight::ZERO, Add::add)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}a{:+}d{:+}L", self.k, self.m, self.l)
    }
}

/// `<mu, eps*a + n*d> = 2*eps*k + n*l`. The `d` component of `mu` pairs to
/// zero with every real root.
pub fn pair(mu: Coweight, r: AffineRoot) -> i64 {
    2 * r.eps.as_i64() * mu.k + r.n * mu.l
}

/// Pairing with `2*rho`: `<2rho, av> = 2`, `<2rho, d> = 4`, `<2rho, L> = 0`.
pub fn two_rho_pair(mu: Coweight) -> i64 {
    2 * mu.k + 4 * mu.m
}

/// A double affine root `base + m_pi*pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleAffineRoot {
    pub base: AffineRoot,
    pub m_pi: i64,
}

impl DoubleAffineRoot {
    pub const fn new(base: AffineRoot, m_pi: i64) -> Self {
        DoubleAffineRoot { base, m_pi }
    }

    /// `sgn(m)*(base + m*pi)` for a positive `base`, with `sgn(0) = 1`.
    pub fn positive_from(base: AffineRoot, m: i64) -> Self {
        debug_assert!(base.is_positive());
        if m >= 0 {
            DoubleAffineRoot::new(base, m)
        } else {
            DoubleAffineRoot::new(base.negate(), -m)
        }
    }

    pub fn is_positive(self) -> bool {
        self.m_pi >= 1 || (self.m_pi == 0 && self.base.is_positive())
    }

    pub fn negate(self) -> Self {
        DoubleAffineRoot::new(self.base.negate(), -self.m_pi)
    }
}

impl fmt::Display for DoubleAffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}p", self.base, self.m_pi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn root(eps: i64, n: i64) -> AffineRoot {
        AffineRoot::new(if eps > 0 { Sign::Plus } else { Sign::Minus }, n)
    }

    #[test]
    fn pairing_values() {
        assert_eq!(pair(Coweight::new(0, 5, 0), AffineRoot::alpha1()), 0);
        assert_eq!(pair(Coweight::new(-1, 0, 1), AffineRoot::alpha0()), 3);
        assert_eq!(pair(Coweight::new(1, 0, 1), AffineRoot::alpha1()), 2);
        // <L, d> = 1 and <L, a> = 0
        let lam0 = Coweight::new(0, 0, 1);
        assert_eq!(pair(lam0, root(1, 1)) - pair(lam0, root(1, 0)), 1);
        assert_eq!(pair(lam0, AffineRoot::alpha1()), 0);
    }

    #[test]
    fn two_rho_values() {
        assert_eq!(two_rho_pair(Coweight::ZERO), 0);
        assert_eq!(two_rho_pair(Coweight::new(1, 1, 1)), 6);
        for n in 0..=50 {
            let r = root(1, n);
            assert_eq!(two_rho_pair(r.coroot()), 2 + 4 * n);
        }
    }

    #[test]
    fn plumbing() {
        let a = AffineRoot::alpha1();
        assert_eq!(a.negate(), root(-1, 0));
        assert!(!a.negate().is_positive());
        assert_eq!(AffineRoot::alpha0().coroot(), Coweight::new(-1, 1, 0));
        assert_eq!(AffineRoot::alpha1().coroot(), Coweight::new(1, 0, 0));
        assert!(!root(1, 1).is_simple());
        assert!(AffineRoot::alpha0().is_simple());
    }

    #[test]
    fn two_rho_is_twice_letter_count() {
        // a + n*d = n*(-a+d) + (n+1)*a and -a + n*d = n*(-a+d) + (n-1)*a
        for idx in -50..=50 {
            let r = AffineRoot::positive_from_index(idx);
            assert!(r.is_positive());
            let letters = if idx >= 0 {
                2 * idx + 1
            } else {
                2 * (-idx) - 1
            };
            assert_eq!(two_rho_pair(r.coroot()), 2 * letters, "{r}");
            assert_eq!(r.height(), letters);
            assert_eq!(AffineRoot::positive_from_index(r.index()), r);
        }
    }

    #[test]
    fn exactly_one_of_pair_positive() {
        for n in -50..=50 {
            for eps in [1, -1] {
                let r = root(eps, n);
                assert!(r.is_positive() ^ r.negate().is_positive());
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(root(1, 0).to_string(), "a");
        assert_eq!(root(-1, 1).to_string(), "-a+d");
        assert_eq!(root(1, 2).to_string(), "a+2d");
        assert_eq!(root(1, -1).to_string(), "a-d");
        assert_eq!(Coweight::new(-1, 0, 1).to_string(), "-1a+0d+1L");
    }

    proptest! {
        #[test]
        fn pairing_is_odd_in_root(k in -100i64..100, m in -100i64..100, l in 0i64..50,
                                  plus in any::<bool>(), n in -100i64..100) {
            let mu = Coweight::new(k, m, l);
            let r = AffineRoot::new(if plus { Sign::Plus } else { Sign::Minus }, n);
            prop_assert_eq!(pair(mu, r.negate()), -pair(mu, r));
        }

        #[test]
        fn pairing_is_additive(a in (-50i64..50, -50i64..50, 0i64..20),
                               b in (-50i64..50, -50i64..50, 0i64..20), n in -30i64..30) {
            let x = Coweight::new(a.0, a.1, a.2);
            let y = Coweight::new(b.0, b.1, b.2);
            let r = AffineRoot::positive_from_index(n);
            prop_assert_eq!(pair(x + y, r), pair(x, r) + pair(y, r));
        }
    }
}

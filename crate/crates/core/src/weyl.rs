//! The infinite dihedral group `W = <s0, s1>`, stored in the normal form
//! `v0 * tau^(t*av)` with `v0` in the finite Weyl group `{e, s1}`.
//!
//! The two presentations are linked by `s0 = s1 * tau^(-av)`. Reduced words
//! are alternating, so every non-identity element is determined by its length
//! and first letter.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::roots::{AffineRoot, Coweight, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FinitePart {
    Identity,
    S1,
}

impl FinitePart {
    pub fn sign(self) -> Sign {
        match self {
            FinitePart::Identity => Sign::Plus,
            FinitePart::S1 => Sign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    S0,
    S1,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::S0 => Letter::S1,
            Letter::S1 => Letter::S0,
        }
    }

    pub fn simple_root(self) -> AffineRoot {
        match self {
            Letter::S0 => AffineRoot::alpha0(),
            Letter::S1 => AffineRoot::alpha1(),
        }
    }

    pub fn element(self) -> WeylElt {
        match self {
            Letter::S0 => WeylElt::s0(),
            Letter::S1 => WeylElt::s1(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::S0 => "s0",
            Letter::S1 => "s1",
        })
    }
}

/// Which column of the quantum Bruhat graph an element sits in. Left-sided
/// elements satisfy `s1 w > w` (reduced words start with `s0`), right-sided
/// ones satisfy `s0 w > w`. The identity is both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Both,
    Left,
    Right,
}

impl Side {
    /// Same-sided, with `Both` compatible with everything.
    pub fn compatible(self, other: Side) -> bool {
        self == Side::Both || other == Side::Both || self == other
    }

    pub fn of_first_letter(letter: Letter) -> Side {
        match letter {
            Letter::S0 => Side::Left,
            Letter::S1 => Side::Right,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Both => "BOTH",
            Side::Left => "LEFT",
            Side::Right => "RIGHT",
        })
    }
}

/// `v0 * tau^(t*av)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElt {
    pub v0: FinitePart,
    pub t: i64,
}

impl WeylElt {
    pub const fn new(v0: FinitePart, t: i64) -> Self {
        WeylElt { v0, t }
    }

    pub const fn identity() -> Self {
        WeylElt::new(FinitePart::Identity, 0)
    }

    pub const fn s1() -> Self {
        WeylElt::new(FinitePart::S1, 0)
    }

    pub const fn s0() -> Self {
        WeylElt::new(FinitePart::S1, -1)
    }

    pub const fn tau(t: i64) -> Self {
        WeylElt::new(FinitePart::Identity, t)
    }

    pub fn is_identity(self) -> bool {
        self == WeylElt::identity()
    }

    pub fn from_word(letters: &[Letter]) -> Self {
        letters
            .iter()
            .fold(WeylElt::identity(), |acc, l| acc * l.element())
    }

    /// The reflection `s_r`; depends only on `±r`.
    pub fn reflection(r: AffineRoot) -> Self {
        WeylElt::new(FinitePart::S1, r.eps.as_i64() * r.n)
    }

    pub fn length(self) -> u64 {
        let t = self.t;
        match self.v0 {
            FinitePart::Identity => 2 * t.unsigned_abs(),
            FinitePart::S1 if t >= 0 => 2 * t as u64 + 1,
            FinitePart::S1 => 2 * t.unsigned_abs() - 1,
        }
    }

    pub fn first_letter(self) -> Option<Letter> {
        match (self.v0, self.t) {
            (FinitePart::Identity, 0) => None,
            (FinitePart::Identity, t) if t > 0 => Some(Letter::S0),
            (FinitePart::Identity, _) => Some(Letter::S1),
            (FinitePart::S1, t) if t >= 0 => Some(Letter::S1),
            (FinitePart::S1, _) => Some(Letter::S0),
        }
    }

    pub fn last_letter(self) -> Option<Letter> {
        self.inverse().first_letter()
    }

    /// The unique reduced word.
    pub fn reduced_word(self) -> Vec<Letter> {
        let Some(mut letter) = self.first_letter() else {
            return Vec::new();
        };
        let len = self.length() as usize;
        let mut word = Vec::with_capacity(len);
        for _ in 0..len {
            word.push(letter);
            letter = letter.other();
        }
        word
    }

    pub fn inverse(self) -> Self {
        match self.v0 {
            FinitePart::Identity => WeylElt::tau(-self.t),
            FinitePart::S1 => self,
        }
    }

    /// `w(eps*a + n*d) = eps*w0(a) + (n - 2*eps*t)*d`.
    pub fn act_root(self, r: AffineRoot) -> AffineRoot {
        AffineRoot::new(self.v0.sign() * r.eps, r.n - 2 * r.eps.as_i64() * self.t)
    }

    /// Action on the Tits cone lattice. With `lambda = t*av` and
    /// `mu = k*av + m*d + l*L`:
    /// `w0 tau^lambda (mu) = w0(k*av + l*lambda) + (m - <k*av, lambda> - l/2 <lambda, lambda>) d + l*L`.
    pub fn act_coweight(self, mu: Coweight) -> Coweight {
        let t = self.t;
        Coweight::new(
            self.v0.sign().as_i64() * (mu.k + mu.l * t),
            mu.m - 2 * mu.k * t - mu.l * t * t,
            mu.l,
        )
    }

    /// `Inv(w) = { r > 0 : w(r) < 0 }`, built from a reduced word
    /// `s_{i_1} ... s_{i_k}` as `{ s_{i_k} ... s_{i_{j+1}} (a_{i_j}) }`.
    pub fn inversion_set(self) -> BTreeSet<AffineRoot> {
        let word = self.reduced_word();
        let mut set = BTreeSet::new();
        let mut suffix = WeylElt::identity();
        for letter in word.iter().rev() {
            set.insert(suffix.inverse().act_root(letter.simple_root()));
            suffix = letter.element() * suffix;
        }
        set
    }

    /// Bruhat order. In the infinite dihedral group `a <= b` iff `a = b` or
    /// `l(a) < l(b)`.
    pub fn bruhat_leq(self, other: WeylElt) -> bool {
        self == other || self.length() < other.length()
    }

    pub fn side(self) -> Side {
        self.first_letter()
            .map_or(Side::Both, Side::of_first_letter)
    }

    /// Every element of length at most `max_len`, in order of length.
    pub fn all_up_to(max_len: u64) -> Vec<WeylElt> {
        let mut out = vec![WeylElt::identity()];
        for len in 1..=max_len {
            for first in [Letter::S0, Letter::S1] {
                out.push(WeylElt::with_first_letter(first, len));
            }
        }
        out
    }

    /// The element of length `len >= 1` whose reduced word starts with `first`.
    pub fn with_first_letter(first: Letter, len: u64) -> WeylElt {
        debug_assert!(len >= 1);
        let half = (len / 2) as i64;
        match (first, len % 2) {
            (Letter::S0, 0) => WeylElt::tau(half),
            (Letter::S1, 0) => WeylElt::tau(-half),
            (Letter::S1, _) => WeylElt::new(FinitePart::S1, half),
            (Letter::S0, _) => WeylElt::new(FinitePart::S1, -half - 1),
        }
    }

    pub fn normal_form(self) -> String {
        let v0 = match self.v0 {
            FinitePart::Identity => "e",
            FinitePart::S1 => "s1",
        };
        format!("(v0={v0}, t={})", self.t)
    }

    fn sort_key(self) -> (u64, Side) {
        (self.length(), self.side())
    }
}

impl Mul for WeylElt {
    type Output = WeylElt;

    /// `(a0 tau^a)(b0 tau^b) = a0 b0 tau^(b0^-1(a) + b)`.
    fn mul(self, rhs: WeylElt) -> WeylElt {
        let v0 = if self.v0 == rhs.v0 {
            FinitePart::Identity
        } else {
            FinitePart::S1
        };
        WeylElt::new(v0, rhs.v0.sign().as_i64() * self.t + rhs.t)
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order by `(length, side)`; not the Bruhat order.
impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.reduced_word();
        if word.is_empty() {
            return f.write_str("e");
        }
        for (i, letter) in word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

//! Text syntax for roots, coweights, Weyl group elements and `W_T` elements.
//!
//! ```text
//! root      a | -a+d | a+2d | a-d
//! coweight  -1a+0d+1L | -1*av + 0*d + 1*L
//! word      s0 s1 s0 | e | s1 t[-1]
//! normal    (v0=s1, t=-1)
//! element   <word> e[<coweight>]
//! ```

use crate::error::{Error, Result};
use crate::roots::{AffineRoot, Coweight, Sign};
use crate::titscone::WtElement;
use crate::weyl::{FinitePart, WeylElt};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.rest().is_empty()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    /// Optionally signed decimal integer.
    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let sign_len = usize::from(rest.starts_with(['+', '-']));
        let digits = rest[sign_len..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - sign_len);
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let text = &rest[..sign_len + digits];
        self.pos += text.len();
        text.parse()
            .map_err(|_| Error::parse(start, format!("integer `{text}` out of range")))
    }

    /// Unsigned decimal integer, if one is next.
    fn digits(&mut self) -> Option<Result<i64>> {
        self.skip_ws();
        let rest = self.rest();
        let n = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if n == 0 {
            return None;
        }
        let start = self.pos;
        self.pos += n;
        Some(
            rest[..n]
                .parse()
                .map_err(|_| Error::parse(start, "integer out of range")),
        )
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

/// A signed linear combination `c1 x1 +- c2 x2 ...` over symbols, where the
/// coefficient may be omitted and may be joined to the symbol by `*`.
fn linear_combination(cur: &mut Cursor<'_>, symbols: &[&str]) -> Result<Vec<(usize, i64)>> {
    let mut terms = Vec::new();
    loop {
        // the operator, then an optional sign on the coefficient
        let mut sign = 1;
        for _ in 0..2 {
            if cur.eat("-") {
                sign = -sign;
            } else {
                cur.eat("+");
            }
        }
        let coeff = match cur.digits() {
            Some(c) => {
                let c = c?;
                cur.eat("*");
                c
            }
            None => 1,
        };
        cur.skip_ws();
        let at = cur.pos;
        // longest symbol first so that `av` wins over `a`
        let mut sorted: Vec<(usize, &str)> = symbols.iter().copied().enumerate().collect();
        sorted.sort_by_key(|(_, s)| std::cmp::Reverse(s.len()));
        let Some((idx, sym)) = sorted.into_iter().find(|(_, s)| cur.rest().starts_with(s)) else {
            return Err(Error::parse(at, format!("expected one of {symbols:?}")));
        };
        cur.pos += sym.len();
        terms.push((idx, sign * coeff));
        if cur.at_end() || !matches!(cur.peek(), Some('+' | '-')) {
            break;
        }
    }
    Ok(terms)
}

fn coweight_at(cur: &mut Cursor<'_>) -> Result<Coweight> {
    let mut mu = Coweight::ZERO;
    for (idx, c) in linear_combination(cur, &["av", "a", "d", "L"])? {
        match idx {
            0 | 1 => mu.k += c,
            2 => mu.m += c,
            _ => mu.l += c,
        }
    }
    Ok(mu)
}

pub fn parse_coweight(text: &str) -> Result<Coweight> {
    let mut cur = Cursor::new(text);
    let mu = coweight_at(&mut cur)?;
    cur.finish()?;
    Ok(mu)
}

pub fn parse_root(text: &str) -> Result<AffineRoot> {
    let mut cur = Cursor::new(text);
    let (mut a, mut n) = (0, 0);
    for (idx, c) in linear_combination(&mut cur, &["a", "d"])? {
        if idx == 0 {
            a += c;
        } else {
            n += c;
        }
    }
    cur.finish()?;
    let eps = match a {
        1 => Sign::Plus,
        -1 => Sign::Minus,
        _ => return Err(Error::parse(0, "the coefficient of `a` must be 1 or -1")),
    };
    Ok(AffineRoot::new(eps, n))
}

/// A word over `s0`, `s1`, `e` and `t[<int>]`, stopping before `e[`.
fn word_at(cur: &mut Cursor<'_>) -> Result<WeylElt> {
    let mut w = WeylElt::identity();
    loop {
        cur.skip_ws();
        let rest = cur.rest();
        if rest.is_empty() || rest.starts_with("e[") {
            return Ok(w);
        }
        if cur.eat("s0") {
            w = w * WeylElt::s0();
        } else if cur.eat("s1") {
            w = w * WeylElt::s1();
        } else if cur.eat("t[") {
            let t = cur.int()?;
            cur.expect("]")?;
            w = w * WeylElt::tau(t);
        } else if cur.eat("e") {
        } else {
            return Err(cur.error("expected `s0`, `s1`, `e` or `t[..]`"));
        }
    }
}

fn normal_form_at(cur: &mut Cursor<'_>) -> Result<WeylElt> {
    cur.expect("(")?;
    cur.expect("v0")?;
    cur.expect("=")?;
    let v0 = if cur.eat("s1") {
        FinitePart::S1
    } else if cur.eat("e") {
        FinitePart::Identity
    } else {
        return Err(cur.error("expected `e` or `s1`"));
    };
    cur.expect(",")?;
    cur.expect("t")?;
    cur.expect("=")?;
    let t = cur.int()?;
    cur.expect(")")?;
    Ok(WeylElt::new(v0, t))
}

/// A word or a normal form `(v0=e|s1, t=<int>)`.
pub fn parse_weyl(text: &str) -> Result<WeylElt> {
    let mut cur = Cursor::new(text);
    let w = if cur.peek() == Some('(') {
        normal_form_at(&mut cur)?
    } else {
        word_at(&mut cur)?
    };
    cur.finish()?;
    Ok(w)
}

/// `<word> e[<coweight>]`.
pub fn parse_element(text: &str) -> Result<WtElement> {
    let mut cur = Cursor::new(text);
    let w = if cur.peek() == Some('(') {
        normal_form_at(&mut cur)?
    } else {
        word_at(&mut cur)?
    };
    cur.expect("e[")?;
    let start = cur.pos;
    let mu = coweight_at(&mut cur)?;
    cur.expect("]")?;
    cur.finish()?;
    WtElement::new(w, mu).map_err(|e| Error::parse(start, e.to_string()))
}

/// Canonical form accepted by [`parse_element`].
pub fn format_element(x: WtElement) -> String {
    x.to_string()
}

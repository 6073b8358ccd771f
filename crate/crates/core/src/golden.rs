//! Worked examples with their expected values, recomputed on demand.

use crate::demazure::{dem_product, is_length_additive};
use crate::error::{Error, Result};
use crate::lp::lp_set;
use crate::qbg;
use crate::text::{parse_coweight, parse_element, parse_weyl};
use crate::titscone::{
    daf_inversions_intersection, wt_length, wt_mul, WtElement, DEFAULT_CANDIDATE_CAP,
};
use crate::weyl::WeylElt;

/// Expected data for one product `x * y`.
pub struct GoldenProduct {
    pub name: &'static str,
    /// `x` and `y` written as `eps^mu w`: `(word, coweight)`.
    pub x_left: (&'static str, &'static str),
    pub y_left: (&'static str, &'static str),
    pub x: &'static str,
    pub y: &'static str,
    pub lp_x: &'static [&'static str],
    pub lp_y: &'static [&'static str],
    /// All of `M_{x,y}` when `pairs_exact`, otherwise a subset.
    pub pairs: &'static [(&'static str, &'static str)],
    pub pairs_exact: bool,
    pub dist: u64,
    /// `(u, w_y v, wt(u => w_y v))` for the first listed pair.
    pub path_weight: (&'static str, &'static str, &'static str),
    pub product: &'static str,
    pub xy: &'static str,
    pub len_x: i64,
    pub len_y: i64,
    pub len_product: i64,
    pub len_xy: i64,
    pub intersection: usize,
    pub additive: bool,
}

pub const PRODUCTS: &[GoldenProduct] = &[
    GoldenProduct {
        name: "additive product",
        x_left: ("s0 s1", "0a+1d+1L"),
        y_left: ("e", "0a+4d+1L"),
        x: "s0 s1 e[-1a+0d+1L]",
        y: "e e[0a+4d+1L]",
        lp_x: &["s1", "s1 s0", "s1 s0 s1"],
        lp_y: &["e", "s1"],
        pairs: &[("s1", "s1")],
        pairs_exact: true,
        dist: 0,
        path_weight: ("s1", "s1", "0a+0d+0L"),
        product: "s0 s1 e[-1a+4d+2L]",
        xy: "s0 s1 e[-1a+4d+2L]",
        len_x: 2,
        len_y: 16,
        len_product: 18,
        len_xy: 18,
        intersection: 0,
        additive: true,
    },
    GoldenProduct {
        name: "product with defect one",
        x_left: ("s0 s1 s0", "0a+0d+1L"),
        y_left: ("s0", "0a+0d+1L"),
        x: "s0 s1 s0 e[2a-4d+1L]",
        y: "s1 t[-1] e[1a-1d+1L]",
        lp_x: &["s0 s1", "s0 s1 s0", "s0 s1 s0 s1"],
        lp_y: &["e", "s0", "s0 s1"],
        pairs: &[("s0 s1", "e")],
        pairs_exact: false,
        dist: 1,
        path_weight: ("s0 s1", "s0", "1a+0d+0L"),
        product: "s1 t[-1] e[1a-2d+2L]",
        xy: "s0 s1 e[0a-2d+2L]",
        len_x: -3,
        len_y: -1,
        len_product: -5,
        len_xy: -6,
        intersection: 1,
        additive: false,
    },
];

/// Expected length positive sets.
pub const LP_SETS: &[(&str, &[&str])] = &[
    ("t[-1] e[-2a+1d+4L]", &["s1", "s1 s0"]),
    ("s1 t[-1] e[1a-1d+1L]", &["e", "s0", "s0 s1"]),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub field: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    fn check(&mut self, field: &str, expected: impl ToString, actual: impl ToString) {
        self.checks.push(Check {
            field: field.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

fn sorted_set(words: &[&str]) -> Result<String> {
    let mut elts = words
        .iter()
        .map(|w| parse_weyl(w))
        .collect::<Result<Vec<WeylElt>>>()?;
    elts.sort();
    Ok(show_set(&elts))
}

fn show_set(elts: &[WeylElt]) -> String {
    let parts: Vec<String> = elts.iter().map(WeylElt::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn canonical(text: &str) -> Result<String> {
    Ok(parse_element(text)?.to_string())
}

pub fn check_product(g: &GoldenProduct) -> Result<ExampleReport> {
    let mut rep = ExampleReport {
        name: g.name.to_string(),
        checks: Vec::new(),
    };
    let x = parse_element(g.x)?;
    let y = parse_element(g.y)?;
    let x_left = WtElement::from_left(parse_coweight(g.x_left.1)?, parse_weyl(g.x_left.0)?)?;
    let y_left = WtElement::from_left(parse_coweight(g.y_left.1)?, parse_weyl(g.y_left.0)?)?;
    rep.check("x", x, x_left);
    rep.check("y", y, y_left);

    rep.check("LP(x)", sorted_set(g.lp_x)?, lp_set(x));
    rep.check("LP(y)", sorted_set(g.lp_y)?, lp_set(y));

    let res = dem_product(x, y)?;
    let actual_pairs: Vec<(WeylElt, WeylElt)> = res.pairs.pairs.clone();
    let show_pairs = |ps: &[(WeylElt, WeylElt)]| {
        let parts: Vec<String> = ps.iter().map(|(u, v)| format!("({u}, {v})")).collect();
        parts.join(" ")
    };
    let expected_pairs = g
        .pairs
        .iter()
        .map(|(u, v)| Ok((parse_weyl(u)?, parse_weyl(v)?)))
        .collect::<Result<Vec<_>>>()?;
    if g.pairs_exact {
        rep.check("M", show_pairs(&expected_pairs), show_pairs(&actual_pairs));
    } else {
        let found: Vec<_> = expected_pairs
            .iter()
            .copied()
            .filter(|p| actual_pairs.contains(p))
            .collect();
        rep.check(
            "M contains",
            show_pairs(&expected_pairs),
            show_pairs(&found),
        );
    }
    rep.check("distance", g.dist, res.defect);

    let (pu, pv, pw) = g.path_weight;
    let (pu, pv) = (parse_weyl(pu)?, parse_weyl(pv)?);
    rep.check("path weight", parse_coweight(pw)?, qbg::weight(pu, pv));

    rep.check("x * y", canonical(g.product)?, res.product);
    let xy = wt_mul(x, y);
    rep.check("xy", canonical(g.xy)?, xy);
    rep.check("l(x)", g.len_x, wt_length(x));
    rep.check("l(y)", g.len_y, wt_length(y));
    rep.check("l(x * y)", g.len_product, wt_length(res.product));
    rep.check("l(xy)", g.len_xy, wt_length(xy));
    rep.check(
        "l(x) + l(y) - l(x * y)",
        g.dist,
        wt_length(x) + wt_length(y) - wt_length(res.product),
    );
    let inter = daf_inversions_intersection(x, y, DEFAULT_CANDIDATE_CAP)?;
    rep.check("|Inv(x) ∩ Inv(y^-1)|", g.intersection, inter.len());
    rep.check(
        "LP(y) ∩ w_y^-1 LP(x) nonempty",
        g.additive,
        is_length_additive(x, y),
    );
    Ok(rep)
}

pub fn check_lp_sets() -> Result<ExampleReport> {
    let mut rep = ExampleReport {
        name: "length positive sets".to_string(),
        checks: Vec::new(),
    };
    for (elt, expected) in LP_SETS {
        let x = parse_element(elt)?;
        rep.check(&format!("LP({elt})"), sorted_set(expected)?, lp_set(x));
    }
    Ok(rep)
}

/// Every example, passing or not.
pub fn examples_report() -> Result<Vec<ExampleReport>> {
    let mut out = PRODUCTS
        .iter()
        .map(check_product)
        .collect::<Result<Vec<_>>>()?;
    out.push(check_lp_sets()?);
    Ok(out)
}

/// As [`examples_report`], failing with the list of mismatched fields.
pub fn run_examples() -> Result<Vec<ExampleReport>> {
    let reports = examples_report()?;
    let diffs: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().filter(|c| !c.passed()).map(move |c| {
                format!(
                    "{}: {} expected {} got {}",
                    r.name, c.field, c.expected, c.actual
                )
            })
        })
        .collect();
    if diffs.is_empty() {
        Ok(reports)
    } else {
        Err(Error::GoldenMismatch(diffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_pass() {
        let reports = run_examples().unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            for c in &r.checks {
                assert!(c.passed(), "{}: {:?}", r.name, c);
            }
        }
    }

    #[test]
    fn mismatches_are_reported() {
        let mut bad = ExampleReport {
            name: "n".into(),
            checks: Vec::new(),
        };
        bad.check("f", 1, 2);
        assert!(!bad.passed());
    }
}

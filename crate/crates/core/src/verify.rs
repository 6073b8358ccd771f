//! Randomised property suites. Every run is reproducible from its seed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::demazure::{
    additivity_equiv_check, assoc_check, dem_product, is_length_additive, lp_of_product_check,
    min_pairs, product_with_weight, unique_minimizer,
};
use crate::error::{Error, Result};
use crate::lp::{lp_oracle, lp_set, oracle_bound, LpSet};
use crate::qbg;
use crate::roots::{two_rho_pair, AffineRoot, Coweight, Sign};
use crate::titscone::{
    daf_inversions_intersection, length_functional, wt_length, wt_length_at,
    wt_length_via_inversions, wt_mul, WtElement, DEFAULT_CANDIDATE_CAP,
};
use crate::weyl::{FinitePart, Letter, WeylElt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Qbg,
    Lp,
    Length,
    Demazure,
    Assoc,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Qbg,
        Suite::Lp,
        Suite::Length,
        Suite::Demazure,
        Suite::Assoc,
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "qbg" => Suite::Qbg,
            "lp" => Suite::Lp,
            "length" => Suite::Length,
            "demazure" => Suite::Demazure,
            "assoc" => Suite::Assoc,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite `{s}`")),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Qbg => "qbg",
            Suite::Lp => "lp",
            Suite::Length => "length",
            Suite::Demazure => "demazure",
            Suite::Assoc => "assoc",
            Suite::All => "all",
        })
    }
}

/// Sampling box: `|k| <= max_k`, `|m| <= max_m`, `level <= max_l`, and
/// translation part `|t| <= max_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_k: i64,
    pub max_m: i64,
    pub max_l: i64,
    pub max_t: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_k: 6,
            max_m: 6,
            max_l: 5,
            max_t: 4,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    bounds: Bounds,
}

impl Sampler {
    pub fn new(seed: u64, bounds: Bounds) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bounds,
        }
    }

    pub fn weyl(&mut self) -> WeylElt {
        let v0 = if self.rng.random_range(0..2) == 1 {
            FinitePart::S1
        } else {
            FinitePart::Identity
        };
        let b = self.bounds.max_t;
        WeylElt::new(v0, self.rng.random_range(-b..=b))
    }

    /// A Tits cone element with level in `min_level..=max_level`.
    pub fn element_with_level(&mut self, min_level: i64, max_level: i64) -> WtElement {
        let w = self.weyl();
        let l = self.rng.random_range(min_level..=max_level);
        let (bk, bm) = (self.bounds.max_k, self.bounds.max_m);
        let k = if l == 0 {
            0
        } else {
            self.rng.random_range(-bk..=bk)
        };
        let m = self.rng.random_range(-bm..=bm);
        WtElement::new(w, Coweight::new(k, m, l)).expect("sampled inside the cone")
    }

    pub fn element(&mut self) -> WtElement {
        self.element_with_level(0, self.bounds.max_l)
    }

    pub fn root(&mut self) -> AffineRoot {
        let sign = if self.rng.random_range(0..2) == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        AffineRoot::new(sign, self.rng.random_range(-20..=20))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub first_counterexample: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub properties: Vec<PropertyResult>,
    /// Observations that are recorded but not asserted.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for p in &self.properties {
            let status = if p.passed() { "pass" } else { "FAIL" };
            writeln!(
                f,
                "  {status} {} ({} checked, {} failed)",
                p.name, p.checked, p.failed
            )?;
            if let Some(ce) = &p.first_counterexample {
                writeln!(f, "       first counterexample: {ce}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note {n}")?;
        }
        Ok(())
    }
}

struct Tally {
    suite: String,
    properties: Vec<PropertyResult>,
    notes: Vec<String>,
}

impl Tally {
    fn new(suite: &str) -> Self {
        Tally {
            suite: suite.to_string(),
            properties: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn slot(&mut self, name: &str) -> &mut PropertyResult {
        if let Some(i) = self.properties.iter().position(|p| p.name == name) {
            return &mut self.properties[i];
        }
        self.properties.push(PropertyResult {
            name: name.to_string(),
            checked: 0,
            failed: 0,
            first_counterexample: None,
        });
        self.properties.last_mut().expect("just pushed")
    }

    fn record(&mut self, name: &str, ok: bool, context: impl FnOnce() -> String) {
        let slot = self.slot(name);
        slot.checked += 1;
        if !ok {
            slot.failed += 1;
            if slot.first_counterexample.is_none() {
                slot.first_counterexample = Some(context());
            }
        }
    }

    /// Errors count as failures.
    fn record_result(
        &mut self,
        name: &str,
        outcome: Result<bool>,
        context: impl FnOnce() -> String,
    ) {
        match outcome {
            Ok(ok) => self.record(name, ok, context),
            Err(e) => self.record(name, false, || format!("{}: {e}", context())),
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            properties: self.properties,
            notes: self.notes,
        }
    }
}

pub fn run_verify(suite: Suite, seed: u64, count: u64, bounds: Bounds) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::EACH
            .iter()
            .map(|s| run_single(*s, seed, count, bounds))
            .collect(),
        s => vec![run_single(s, seed, count, bounds)],
    }
}

fn run_single(suite: Suite, seed: u64, count: u64, bounds: Bounds) -> SuiteReport {
    let mut sampler = Sampler::new(seed, bounds);
    match suite {
        Suite::Qbg => qbg_suite(&mut sampler, count),
        Suite::Lp => lp_suite(&mut sampler, count),
        Suite::Length => length_suite(&mut sampler, count),
        Suite::Demazure => demazure_suite(&mut sampler, count),
        Suite::Assoc => assoc_suite(&mut sampler, count),
        Suite::All => unreachable!("expanded by run_verify"),
    }
}

fn check_qbg_pair(tally: &mut Tally, u: WeylElt, v: WeylElt) {
    let ctx = || format!("u = {u}, v = {v}");
    let d = qbg::distance(u, v);
    let wt = qbg::weight(u, v);
    match qbg::search_distance_and_weights(u, v) {
        Ok((bfs_d, weights)) => {
            tally.record("distance matches search", bfs_d == d, ctx);
            tally.record(
                "shortest paths share the closed-form weight",
                weights == BTreeSet::from([wt]),
                || format!("u = {u}, v = {v}, weights {weights:?}, closed form {wt}"),
            );
        }
        Err(e) => {
            tally.record("distance matches search", false, || {
                format!("{}: {e}", ctx())
            });
        }
    }
    let height = d as i64 + u.length() as i64 - v.length() as i64;
    tally.record("weight-height identity", two_rho_pair(wt) == height, ctx);
    tally.record(
        "bruhat order iff zero weight",
        u.bruhat_leq(v) == (wt == Coweight::ZERO),
        ctx,
    );
}

fn qbg_suite(s: &mut Sampler, count: u64) -> SuiteReport {
    let mut tally = Tally::new("qbg");
    for _ in 0..count {
        let (u, v) = (s.weyl(), s.weyl());
        check_qbg_pair(&mut tally, u, v);
    }
    tally.finish()
}

/// The closed forms against search for every pair of elements of length at
/// most `max_len`.
pub fn qbg_exhaustive(max_len: u64) -> SuiteReport {
    let mut tally = Tally::new("qbg exhaustive");
    let elts = WeylElt::all_up_to(max_len);
    for &u in &elts {
        for &v in &elts {
            check_qbg_pair(&mut tally, u, v);
        }
    }
    tally.finish()
}

/// Brute-force `LP(x)` among elements of length at most `max_len`.
fn lp_brute(x: WtElement, max_len: u64) -> Vec<WeylElt> {
    WeylElt::all_up_to(max_len)
        .into_iter()
        .filter(|v| lp_oracle(x, *v, oracle_bound(x, *v)))
        .collect()
}

fn lp_window(x: WtElement) -> u64 {
    2 * x.mu().k.unsigned_abs() + 10
}

fn check_lp_element(tally: &mut Tally, x: WtElement) {
    let lp = lp_set(x);
    let window = lp_window(x);
    let brute = lp_brute(x, window);
    tally.record(
        "classification matches brute force",
        lp.up_to(window) == brute,
        || format!("x = {x}: classification {lp}, brute force {brute:?}"),
    );
    let ctx = || format!("x = {x}, LP = {lp}");
    match &lp {
        LpSet::Finite(list) => {
            let max = if x.level() == 1 { 3 } else { 2 };
            tally.record("size bounds", !list.is_empty() && list.len() <= max, ctx);
            let connected = list
                .windows(2)
                .all(|p| (p[0].inverse() * p[1]).length() == 1);
            tally.record("connected by simple reflections", connected, ctx);
            let mut forbidden = vec![WeylElt::s1(), WeylElt::identity(), WeylElt::s0()];
            forbidden.sort();
            tally.record("never {s1, e, s0}", *list != forbidden, ctx);
            let one_sided = list
                .iter()
                .all(|a| list.iter().all(|b| a.side().compatible(b.side())));
            tally.record("one-sided", one_sided, ctx);
            for &u in list {
                for letter in [Letter::S0, Letter::S1] {
                    let zero = length_functional(x, u.act_root(letter.simple_root())) == 0;
                    let inside = list.contains(&(u * letter.element()));
                    tally.record(
                        "neighbour positive iff functional vanishes",
                        zero == inside,
                        || format!("x = {x}, u = {u}, letter {letter}"),
                    );
                }
            }
        }
        _ => {
            tally.record("infinite only at level zero", x.level() == 0, ctx);
        }
    }
}

fn lp_suite(s: &mut Sampler, count: u64) -> SuiteReport {
    let mut tally = Tally::new("lp");
    for _ in 0..count {
        let x = s.element();
        check_lp_element(&mut tally, x);
    }
    tally.finish()
}

fn length_suite(s: &mut Sampler, count: u64) -> SuiteReport {
    let mut tally = Tally::new("length");
    for _ in 0..count {
        let x = s.element();
        let y = s.element();
        let ctx = || format!("x = {x}");
        tally.record(
            "two length formulas agree",
            wt_length(x) == wt_length_via_inversions(x),
            ctx,
        );
        let witnesses = lp_set(x).up_to(12);
        let values: BTreeSet<i64> = witnesses.iter().map(|u| wt_length_at(x, *u)).collect();
        tally.record(
            "length independent of the LP witness",
            values.len() == 1,
            ctx,
        );
        let xy = wt_mul(x, y);
        tally.record("levels add", xy.level() == x.level() + y.level(), ctx);
        let r = s.root();
        tally.record(
            "functional is odd",
            length_functional(x, r.negate()) == -length_functional(x, r),
            || format!("x = {x}, r = {r}"),
        );
        let outcome = daf_inversions_intersection(x, y, DEFAULT_CANDIDATE_CAP)
            .map(|inter| wt_length(xy) == wt_length(x) + wt_length(y) - 2 * inter.len() as i64);
        tally.record_result("inversion count identity", outcome, || {
            format!("x = {x}, y = {y}")
        });
    }
    tally.finish()
}

/// Every property of one Demazure product.
fn check_demazure_pair(tally: &mut Tally, x: WtElement, y: WtElement) {
    let ctx = || format!("x = {x}, y = {y}");
    let res = match dem_product(x, y) {
        Ok(r) => r,
        Err(e) => {
            tally.record("well-defined", false, || format!("{}: {e}", ctx()));
            return;
        }
    };
    tally.record("well-defined", true, ctx);

    // path independence: every shortest path, not only the closed form
    let mut path_ok = Ok(true);
    for &(u, v) in &res.pairs.pairs {
        let target = y.w() * v;
        let step = qbg::search_distance_and_weights(u, target).and_then(|(_, weights)| {
            for wt in weights {
                let (p, _, _) = product_with_weight(x, y, u, v, wt)?;
                if p != res.product {
                    return Ok(false);
                }
            }
            Ok(true)
        });
        path_ok = path_ok.and_then(|ok| step.map(|s| ok && s));
    }
    tally.record_result("path independent", path_ok, ctx);

    let defect = res.defect as i64;
    tally.record(
        "length of product",
        wt_length(res.product) == wt_length(x) + wt_length(y) - defect,
        ctx,
    );
    if x.level() >= 1 && y.level() >= 1 {
        tally.record_result("LP of product", lp_of_product_check(x, y), ctx);
    }
    tally.record_result("additivity equivalence", additivity_equiv_check(x, y), ctx);
    tally.record(
        "zero distance iff LP intersection",
        (defect == 0) == is_length_additive(x, y),
        ctx,
    );
    let outcome = daf_inversions_intersection(x, y, DEFAULT_CANDIDATE_CAP).map(|inter| {
        wt_length(wt_mul(x, y)) == wt_length(x) + wt_length(y) - 2 * inter.len() as i64
    });
    tally.record_result("inversion count identity", outcome, ctx);
}

fn demazure_suite(s: &mut Sampler, count: u64) -> SuiteReport {
    let mut tally = Tally::new("demazure");
    for _ in 0..count {
        let x = s.element();
        let y = s.element();
        check_demazure_pair(&mut tally, x, y);

        if x.level() > 0 {
            let list = lp_set(x)
                .as_finite()
                .map(<[WeylElt]>::to_vec)
                .unwrap_or_default();
            let u = s.weyl();
            tally.record(
                "unique minimiser",
                unique_minimizer(&list, u, false).is_some()
                    && unique_minimizer(&list, u, true).is_some(),
                || format!("x = {x}, u = {u}"),
            );
        }
        let pairs = min_pairs(x, y);
        tally.record_result(
            "minimising pairs nonempty",
            pairs.map(|m| !m.pairs.is_empty()),
            || format!("x = {x}, y = {y}"),
        );
    }
    tally.finish()
}

fn assoc_suite(s: &mut Sampler, count: u64) -> SuiteReport {
    let mut tally = Tally::new("assoc");
    let max_l = s.bounds.max_l.max(2);
    for _ in 0..count {
        let (x, y, z) = (
            s.element_with_level(2, max_l),
            s.element_with_level(2, max_l),
            s.element_with_level(2, max_l),
        );
        tally.record_result("associative at levels >= 2", assoc_check(x, y, z), || {
            format!("x = {x}, y = {y}, z = {z}")
        });
    }

    // level one is recorded, not asserted
    let (mut checked, mut failed, mut errors) = (0u64, 0u64, 0u64);
    let mut big_lp = 0u64;
    for _ in 0..count.div_ceil(4) {
        let (x, y, z) = (
            s.element_with_level(1, 1),
            s.element_with_level(1, 1),
            s.element_with_level(1, 1),
        );
        let has_three = [x, y, z]
            .iter()
            .any(|e| lp_set(*e).as_finite().is_some_and(|l| l.len() == 3));
        big_lp += u64::from(has_three);
        checked += 1;
        match assoc_check(x, y, z) {
            Ok(true) => {}
            Ok(false) => failed += 1,
            Err(_) => errors += 1,
        }
    }
    tally.notes.push(format!(
        "level-1 triples: {checked} checked ({big_lp} with a three-element LP set), {failed} non-associative, {errors} errors"
    ));
    tally.finish()
}

/// Well-definedness, checked by brute force over a window independent of
/// the one used in production.
pub fn well_defined_wide(x: WtElement, y: WtElement, window: u64) -> Result<bool> {
    let left = lp_set(x).up_to(window);
    let right = lp_set(y).up_to(window);
    let wy = y.w();
    let best = left
        .iter()
        .flat_map(|u| right.iter().map(move |v| qbg::distance(*u, wy * *v)))
        .min()
        .ok_or_else(|| Error::WindowTooSmall("empty window".into()))?;
    let reference = dem_product(x, y)?;
    if best != reference.defect {
        return Ok(false);
    }
    for &u in &left {
        for &v in &right {
            if qbg::distance(u, wy * v) == best {
                let (p, _, _) = crate::demazure::product_for_pair(x, y, u, v)?;
                if p != reference.product {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_small_runs() {
        for report in run_verify(Suite::All, 7, 40, Bounds::default()) {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn runs_are_reproducible() {
        let a = run_verify(Suite::Lp, 3, 30, Bounds::default());
        let b = run_verify(Suite::Lp, 3, 30, Bounds::default());
        assert_eq!(a, b);
    }

    #[test]
    fn sampler_respects_bounds() {
        let bounds = Bounds {
            max_k: 2,
            max_m: 3,
            max_l: 1,
            max_t: 1,
        };
        let mut s = Sampler::new(11, bounds);
        for _ in 0..200 {
            let x = s.element();
            assert!(x.mu().k.abs() <= 2 && x.mu().m.abs() <= 3 && x.level() <= 1);
            assert!(x.w().t.abs() <= 1);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn failures_keep_the_first_counterexample() {
        let mut t = Tally::new("t");
        t.record("p", true, || "a".into());
        t.record("p", false, || "b".into());
        t.record("p", false, || "c".into());
        let r = t.finish();
        assert!(!r.passed());
        let p = r.property("p").unwrap();
        assert_eq!((p.checked, p.failed), (3, 2));
        assert_eq!(p.first_counterexample.as_deref(), Some("b"));
    }

    #[test]
    fn production_window_matches_a_wide_window() {
        let mut s = Sampler::new(5, Bounds::default());
        for _ in 0..60 {
            let (x, y) = (s.element(), s.element());
            assert!(well_defined_wide(x, y, 30).unwrap(), "x = {x}, y = {y}");
        }
    }
}

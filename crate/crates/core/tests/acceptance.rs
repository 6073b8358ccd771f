//! Acceptance criteria. Prints one line per criterion and exits nonzero if
//! any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use affine_demazure::demazure::is_length_additive;
use affine_demazure::lp::LpSet;
use affine_demazure::qbg;
use affine_demazure::titscone::{daf_inversions_intersection, DEFAULT_CANDIDATE_CAP};
use affine_demazure::verify::{qbg_exhaustive, run_verify, Bounds, Suite, SuiteReport};
use affine_demazure::{
    dem_product, lp_set, wt_length, wt_mul, Coweight, FinitePart, Letter, WeylElt, WtElement,
};

/// Zero tolerance on every count; only wall-clock budgets vary.
const MAX_VIOLATIONS: u64 = 0;
const BUDGET_EXAMPLE: Duration = Duration::from_secs(1);
const BUDGET_QBG: Duration = Duration::from_secs(10);
const BUDGET_LP: Duration = Duration::from_secs(30);
const BUDGET_DEMAZURE: Duration = Duration::from_secs(60);
const BUDGET_ASSOC: Duration = Duration::from_secs(60);

const QBG_MAX_LEN: u64 = 8;
const QBG_PAIRS: usize = 17 * 17;
const LP_SAMPLES: u64 = 1000;
const DEMAZURE_SAMPLES: u64 = 500;
const ASSOC_TRIPLES: u64 = 200;
const SEED: u64 = 20_240_601;

use Letter::{S0, S1};

fn word(ws: &[Letter]) -> WeylElt {
    WeylElt::from_word(ws)
}

fn finite(ws: &[&[Letter]]) -> LpSet {
    let mut v: Vec<_> = ws.iter().map(|w| word(w)).collect();
    v.sort();
    LpSet::Finite(v)
}

/// Collects failed sub-checks for one criterion.
struct Checks(Vec<String>);

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.0.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

fn run_checks(f: impl FnOnce(&mut Checks) -> Result<(), String>) -> Vec<String> {
    let mut c = Checks(Vec::new());
    if let Err(e) = f(&mut c) {
        c.0.push(e);
    }
    c.0
}

fn additive_example(c: &mut Checks) -> Result<(), String> {
    let x =
        WtElement::from_left(Coweight::new(0, 1, 1), word(&[S0, S1])).map_err(|e| e.to_string())?;
    let y = WtElement::from_left(Coweight::new(0, 4, 1), WeylElt::identity())
        .map_err(|e| e.to_string())?;
    c.eq(
        "LP(x)",
        lp_set(x),
        finite(&[&[S1, S0], &[S1, S0, S1], &[S1]]),
    );
    c.eq("LP(y)", lp_set(y), finite(&[&[], &[S1]]));
    let res = dem_product(x, y).map_err(|e| e.to_string())?;
    c.eq(
        "M",
        res.pairs.pairs.clone(),
        vec![(WeylElt::s1(), WeylElt::s1())],
    );
    let want =
        WtElement::new(word(&[S0, S1]), Coweight::new(-1, 4, 2)).map_err(|e| e.to_string())?;
    c.eq("x * y", res.product, want);
    c.eq("xy", wt_mul(x, y), want);
    Ok(())
}

fn defect_example(c: &mut Checks) -> Result<(), String> {
    let x = WtElement::from_left(Coweight::new(0, 0, 1), word(&[S0, S1, S0]))
        .map_err(|e| e.to_string())?;
    let y =
        WtElement::from_left(Coweight::new(0, 0, 1), WeylElt::s0()).map_err(|e| e.to_string())?;
    let lpx = lp_set(x);
    let lpy = lp_set(y);
    c.eq(
        "LP(x)",
        lpx.clone(),
        finite(&[&[S0, S1, S0, S1], &[S0, S1, S0], &[S0, S1]]),
    );
    c.eq("LP(y)", lpy.clone(), finite(&[&[S0, S1], &[S0], &[]]));
    let shifted: BTreeSet<WeylElt> = lpy
        .as_finite()
        .unwrap_or_default()
        .iter()
        .map(|v| y.w() * *v)
        .collect();
    let meet: Vec<_> = lpx
        .as_finite()
        .unwrap_or_default()
        .iter()
        .filter(|u| shifted.contains(u))
        .collect();
    c.eq("|LP(x) ∩ w_y LP(y)|", meet.len(), 0);
    c.eq("additive", is_length_additive(x, y), false);
    c.eq(
        "wt(s0 s1 => s0)",
        qbg::weight(word(&[S0, S1]), WeylElt::s0()),
        Coweight::new(1, 0, 0),
    );
    let res = dem_product(x, y).map_err(|e| e.to_string())?;
    let want = WtElement::new(WeylElt::new(FinitePart::S1, -1), Coweight::new(1, -2, 2))
        .map_err(|e| e.to_string())?;
    c.eq("x * y", res.product, want);
    c.eq(
        "l(x * y)",
        wt_length(res.product),
        wt_length(x) + wt_length(y) - 1,
    );
    let inter =
        daf_inversions_intersection(x, y, DEFAULT_CANDIDATE_CAP).map_err(|e| e.to_string())?;
    c.eq(
        "l(xy)",
        wt_length(wt_mul(x, y)),
        wt_length(x) + wt_length(y) - 2 * inter.len() as i64,
    );
    Ok(())
}

fn lp_pictures(c: &mut Checks) -> Result<(), String> {
    let a = WtElement::new(WeylElt::tau(-1), Coweight::new(-2, 1, 4)).map_err(|e| e.to_string())?;
    c.eq("LP(a)", lp_set(a), finite(&[&[S1], &[S1, S0]]));
    let b = WtElement::new(WeylElt::new(FinitePart::S1, -1), Coweight::new(1, -1, 1))
        .map_err(|e| e.to_string())?;
    c.eq("LP(b)", lp_set(b), finite(&[&[], &[S0], &[S0, S1]]));
    Ok(())
}

/// Failed properties of a suite, plus a check that enough cases ran.
fn suite_failures(report: &SuiteReport, required: &[(&str, u64)]) -> Vec<String> {
    let mut out: Vec<String> = report
        .properties
        .iter()
        .filter(|p| p.failed > MAX_VIOLATIONS)
        .map(|p| {
            format!(
                "{}: {} of {} failed, first {}",
                p.name,
                p.failed,
                p.checked,
                p.first_counterexample.as_deref().unwrap_or("-")
            )
        })
        .collect();
    for (name, min) in required {
        match report.property(name) {
            Some(p) if p.checked >= *min => {}
            Some(p) => out.push(format!("{name}: only {} cases", p.checked)),
            None => out.push(format!("{name}: not run")),
        }
    }
    out
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Vec<String>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "additive worked example: LP sets, M = {(s1, s1)}, x * y = xy",
        budget: BUDGET_EXAMPLE,
        run: || run_checks(additive_example),
    },
    Criterion {
        id: 2,
        title: "defect-one worked example: LP sets, empty meet, weight, product, length",
        budget: BUDGET_EXAMPLE,
        run: || run_checks(defect_example),
    },
    Criterion {
        id: 3,
        title: "pictured length positive sets",
        budget: BUDGET_EXAMPLE,
        run: || run_checks(lp_pictures),
    },
    Criterion {
        id: 4,
        title: "graph search equals closed forms for all lengths <= 8",
        budget: BUDGET_QBG,
        run: || {
            let r = qbg_exhaustive(QBG_MAX_LEN);
            let n = QBG_PAIRS as u64;
            suite_failures(
                &r,
                &[
                    ("distance matches search", n),
                    ("shortest paths share the closed-form weight", n),
                    ("weight-height identity", n),
                    ("bruhat order iff zero weight", n),
                ],
            )
        },
    },
    Criterion {
        id: 5,
        title: "length positive classification against brute force, 1000 samples",
        budget: BUDGET_LP,
        run: || {
            let r = &run_verify(Suite::Lp, SEED, LP_SAMPLES, Bounds::default())[0];
            suite_failures(
                r,
                &[
                    ("classification matches brute force", LP_SAMPLES),
                    ("size bounds", 1),
                    ("connected by simple reflections", 1),
                    ("never {s1, e, s0}", 1),
                ],
            )
        },
    },
    Criterion {
        id: 6,
        title: "Demazure product properties, 500 pairs",
        budget: BUDGET_DEMAZURE,
        run: || {
            let r = &run_verify(Suite::Demazure, SEED, DEMAZURE_SAMPLES, Bounds::default())[0];
            suite_failures(
                r,
                &[
                    ("well-defined", DEMAZURE_SAMPLES),
                    ("path independent", DEMAZURE_SAMPLES),
                    ("length of product", DEMAZURE_SAMPLES),
                    ("LP of product", 1),
                    ("additivity equivalence", DEMAZURE_SAMPLES),
                    ("inversion count identity", DEMAZURE_SAMPLES),
                ],
            )
        },
    },
    Criterion {
        id: 7,
        title: "associativity, 200 triples of level >= 2",
        budget: BUDGET_ASSOC,
        run: || {
            let r = &run_verify(Suite::Assoc, SEED, ASSOC_TRIPLES, Bounds::default())[0];
            for n in &r.notes {
                println!("      note: {n}");
            }
            suite_failures(r, &[("associative at levels >= 2", ASSOC_TRIPLES)])
        },
    },
];

fn main() -> ExitCode {
    let mut all_ok = true;
    for c in CRITERIA {
        let start = Instant::now();
        let mut failures = (c.run)();
        let elapsed = start.elapsed();
        if elapsed > c.budget {
            failures.push(format!("took {elapsed:.2?}, budget {:?}", c.budget));
        }
        let ok = failures.is_empty();
        all_ok &= ok;
        println!(
            "{} criterion {}: {} [{elapsed:.2?}]",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title
        );
        for f in failures {
            println!("      {f}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

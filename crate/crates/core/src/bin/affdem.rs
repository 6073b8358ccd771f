use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use affine_demazure::golden::{examples_report, ExampleReport};
use affine_demazure::qbg::{self, QbgPath};
use affine_demazure::verify::{run_verify, Bounds, Suite, SuiteReport};
use affine_demazure::{
    dem_product, lp_set, min_pairs, parse_element, parse_weyl, wt_length, wt_mul, Coweight, Error,
    LpSet, WeylElt, WtElement,
};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "affdem",
    version,
    about = "Demazure products on the double affine Weyl semigroup of affine SL2"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Length positive set of an element.
    Lp { x: String },
    /// Length of an element.
    Len { x: String },
    /// Semigroup product.
    Mul { x: String, y: String },
    /// Demazure product.
    Dem { x: String, y: String },
    /// Distance in the quantum Bruhat graph.
    QbgDist { u: String, v: String },
    /// Weight of a shortest path in the quantum Bruhat graph.
    QbgWt { u: String, v: String },
    /// Every shortest path in the quantum Bruhat graph.
    QbgPaths { u: String, v: String },
    /// Distance minimising pairs.
    Minpairs { x: String, y: String },
    /// Recompute the worked examples and compare with stored values.
    Examples,
    /// Run a randomised property suite.
    Verify {
        /// qbg, lp, length, demazure, assoc or all.
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: u64,
        #[arg(long, default_value_t = 6)]
        max_k: i64,
        #[arg(long, default_value_t = 6)]
        max_m: i64,
        #[arg(long, default_value_t = 5)]
        max_l: i64,
        #[arg(long, default_value_t = 4)]
        max_t: i64,
    },
}

enum Failure {
    Parse(Error),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e),
            other => Failure::Violation(other.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            ok: true,
        }
    }
}

fn element_json(x: WtElement) -> Value {
    json!({
        "w": x.w().to_string(),
        "normal_form": x.w().normal_form(),
        "mu": x.mu().to_array(),
        "level": x.level(),
        "length": wt_length(x),
        "text": x.to_string(),
    })
}

fn coweight_json(mu: Coweight) -> Value {
    json!(mu.to_array())
}

fn lp_json(lp: &LpSet) -> Value {
    match lp {
        LpSet::Finite(list) => json!(list.iter().map(WeylElt::to_string).collect::<Vec<_>>()),
        other => json!(other.to_string()),
    }
}

fn pairs_json(pairs: &[(WeylElt, WeylElt)]) -> Value {
    json!(pairs
        .iter()
        .map(|(u, v)| json!([u.to_string(), v.to_string()]))
        .collect::<Vec<_>>())
}

fn path_json(p: &QbgPath) -> Value {
    json!({
        "len": p.len(),
        "weight": coweight_json(p.weight()),
        "edges": p.edges.iter().map(|e| json!({
            "src": e.src.to_string(),
            "dst": e.dst.to_string(),
            "kind": e.kind.to_string(),
            "root": e.root.to_string(),
            "weight": coweight_json(e.weight),
        })).collect::<Vec<_>>(),
    })
}

fn suite_json(r: &SuiteReport) -> Value {
    json!({
        "suite": r.suite,
        "passed": r.passed(),
        "properties": r.properties.iter().map(|p| json!({
            "name": p.name,
            "checked": p.checked,
            "failed": p.failed,
            "first_counterexample": p.first_counterexample,
        })).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

fn example_json(r: &ExampleReport) -> Value {
    json!({
        "name": r.name,
        "passed": r.passed(),
        "checks": r.checks.iter().map(|c| json!({
            "field": c.field,
            "expected": c.expected,
            "actual": c.actual,
            "passed": c.passed(),
        })).collect::<Vec<_>>(),
    })
}

fn show_pairs(pairs: &[(WeylElt, WeylElt)]) -> String {
    pairs
        .iter()
        .map(|(u, v)| format!("({u}, {v})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Lp { x } => {
            let x = parse_element(&x)?;
            let lp = lp_set(x);
            Output::ok(
                lp.to_string(),
                json!({ "element": element_json(x), "lp": lp_json(&lp) }),
            )
        }
        Command::Len { x } => {
            let x = parse_element(&x)?;
            let len = wt_length(x);
            Output::ok(
                len.to_string(),
                json!({ "element": element_json(x), "length": len }),
            )
        }
        Command::Mul { x, y } => {
            let (x, y) = (parse_element(&x)?, parse_element(&y)?);
            let p = wt_mul(x, y);
            Output::ok(p.to_string(), json!({ "product": element_json(p) }))
        }
        Command::Dem { x, y } => {
            let (x, y) = (parse_element(&x)?, parse_element(&y)?);
            let res = dem_product(x, y)?;
            let expected = wt_length(x) + wt_length(y) - res.defect as i64;
            let length_check = wt_length(res.product) == expected;
            let text = format!(
                "{}\ndistance {}\npairs {}\nu v^-1 = {}\nv wt = {}",
                res.product,
                res.defect,
                show_pairs(&res.pairs.pairs),
                res.uv_inverse,
                res.v_weight
            );
            Output {
                text,
                json: json!({
                    "product": element_json(res.product),
                    "pairs": pairs_json(&res.pairs.pairs),
                    "dist": res.defect,
                    "uv_inverse": res.uv_inverse.to_string(),
                    "v_weight": coweight_json(res.v_weight),
                    "length_check": length_check,
                }),
                ok: length_check,
            }
        }
        Command::QbgDist { u, v } => {
            let (u, v) = (parse_weyl(&u)?, parse_weyl(&v)?);
            let d = qbg::distance(u, v);
            Output::ok(
                d.to_string(),
                json!({ "src": u.to_string(), "dst": v.to_string(), "distance": d }),
            )
        }
        Command::QbgWt { u, v } => {
            let (u, v) = (parse_weyl(&u)?, parse_weyl(&v)?);
            let wt = qbg::weight(u, v);
            Output::ok(
                wt.to_string(),
                json!({ "src": u.to_string(), "dst": v.to_string(), "weight": coweight_json(wt) }),
            )
        }
        Command::QbgPaths { u, v } => {
            let (u, v) = (parse_weyl(&u)?, parse_weyl(&v)?);
            let paths = qbg::shortest_paths(u, v)?;
            let text = paths
                .iter()
                .map(|p| {
                    let mut line = u.to_string();
                    for e in &p.edges {
                        line += &format!(" -[{} {}]-> {}", e.kind, e.weight, e.dst);
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            Output::ok(
                text,
                json!({ "paths": paths.iter().map(path_json).collect::<Vec<_>>() }),
            )
        }
        Command::Minpairs { x, y } => {
            let (x, y) = (parse_element(&x)?, parse_element(&y)?);
            let m = min_pairs(x, y)?;
            Output::ok(
                format!("distance {}\n{}", m.dist, show_pairs(&m.pairs)),
                json!({ "dist": m.dist, "pairs": pairs_json(&m.pairs) }),
            )
        }
        Command::Examples => {
            let reports = examples_report()?;
            let ok = reports.iter().all(ExampleReport::passed);
            let mut text = String::new();
            for r in &reports {
                text += &format!("{} {}\n", if r.passed() { "pass" } else { "FAIL" }, r.name);
                for c in &r.checks {
                    let mark = if c.passed() { "ok" } else { "MISMATCH" };
                    text += &format!("  {mark} {}: {}", c.field, c.actual);
                    if !c.passed() {
                        text += &format!(" (expected {})", c.expected);
                    }
                    text += "\n";
                }
            }
            Output {
                text: text.trim_end().to_string(),
                json: json!({ "examples": reports.iter().map(example_json).collect::<Vec<_>>() }),
                ok,
            }
        }
        Command::Verify {
            suite,
            seed,
            count,
            max_k,
            max_m,
            max_l,
            max_t,
        } => {
            let bounds = Bounds {
                max_k,
                max_m,
                max_l,
                max_t,
            };
            let reports = run_verify(suite, seed, count, bounds);
            let ok = reports.iter().all(SuiteReport::passed);
            let text = reports.iter().map(ToString::to_string).collect::<String>();
            Output {
                text: text.trim_end().to_string(),
                json: json!({
                    "seed": seed,
                    "count": count,
                    "suites": reports.iter().map(suite_json).collect::<Vec<_>>(),
                }),
                ok,
            }
        }
    })
}

fn emit(line: impl std::fmt::Display) {
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                let mut body = out.json;
                if let Value::Object(map) = &mut body {
                    map.insert("schema".into(), json!(SCHEMA));
                    map.insert("ok".into(), json!(out.ok));
                }
                emit(body);
            } else {
                emit(out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Parse(e)) => {
            if cli.json {
                emit(json!({ "schema": SCHEMA, "ok": false, "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(msg)) => {
            if cli.json {
                emit(json!({ "schema": SCHEMA, "ok": false, "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

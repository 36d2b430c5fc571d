//! Acceptance criteria 1-12, one line each.
//!
//! Criteria 8 and 10 contain stated identities that are inconsistent with
//! each other (see README, "Known failures"); those fail here, and so do the
//! criteria that depend on them (6, 12). The run itself succeeds only if the
//! set of failing identities is exactly the documented one and everything
//! else passes.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use elchi_core::workbench::{run, Suite, SuiteResult, Windows};
use serde_json::Value;

/// Required checks expected to fail, as `(suite, identity)`.
const KNOWN_FAILURES: &[(&str, &str)] = &[
    ("lemma32", "lambda(H+)(1-chi)_n = -(n/z)(2-chi)_(n-1)"),
    ("lemma32", "lambda(H-)(chibar)_n = (n/z)(chibar+1)_(n-1)"),
    ("lemma38", "lambda(HH+)(rho_j(chi)_r) = -(1/z)[(j+r)rho_j + j(j+r-1)(j+r)rho_(j-1)](chi)_(r-1)"),
    ("lemma38", "lambda(HH-)(rho_j(chi)_r) = -(1/z) j rho_(j-1)(chi)_(r+1)"),
    ("prop39", "lambda(HH-)phi_(-r) = phi_(-r-1)"),
    ("prop39", "lambda(HH+)phi_(-r) = k(1+z^2 k) phi_(-r+1)"),
    ("prop39", "lambda(H+H-)phi_(+-r) = k phi_(+-r)"),
    ("prop39", "lambda(HH+ HH-)phi_(+-r) = k(1+z^2 k) phi_(+-r)"),
];

const KNOWN_FAILING_CRITERIA: [u32; 4] = [6, 8, 10, 12];

struct Outcome {
    pass: bool,
    detail: String,
}

fn timed(suites: &[Suite]) -> (Vec<SuiteResult>, Duration) {
    let t = Instant::now();
    let out = suites.iter().flat_map(|s| run(*s, &Windows::default())).collect();
    (out, t.elapsed())
}

fn failing(results: &[SuiteResult]) -> BTreeSet<(String, String)> {
    results
        .iter()
        .flat_map(|s| s.reports.iter().filter(|r| r.required && !r.pass()).map(|r| (s.suite.name().to_string(), r.identity.clone())))
        .collect()
}

/// Runs suites in-process, remembering every failing required check.
#[derive(Default)]
struct Runner {
    observed: BTreeSet<(String, String)>,
}

impl Runner {
    fn suites(&mut self, suites: &[Suite], limit: Option<Duration>) -> (Outcome, Vec<SuiteResult>) {
        let (results, t) = timed(suites);
        let bad = failing(&results);
        self.observed.extend(bad.iter().cloned());
        let in_time = limit.is_none_or(|l| t < l);
        let mut detail = format!("{:.1}s", t.as_secs_f64());
        if let Some(l) = limit {
            detail += &format!(" (limit {}s)", l.as_secs());
        }
        let checks: usize = results.iter().flat_map(|s| &s.reports).filter(|r| r.required).count();
        detail += &format!(", {} of {checks} required checks pass", checks - bad.len());
        for (s, id) in &bad {
            detail += &format!("\n      failing: {s} :: {id}");
        }
        (Outcome { pass: bad.is_empty() && in_time, detail }, results)
    }

    fn outcome(&mut self, suites: &[Suite], limit: Option<Duration>) -> Outcome {
        self.suites(suites, limit).0
    }
}

fn elchi(args: &[&str]) -> (i32, String, Duration) {
    let t = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_elchi")).args(args).output().expect("run elchi");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), t.elapsed())
}

fn reports(v: &Value) -> Vec<(&str, &Value)> {
    let suites: Vec<&Value> = match v.get("suites") {
        Some(Value::Array(a)) => a.iter().collect(),
        _ => vec![v],
    };
    suites
        .into_iter()
        .flat_map(|s| {
            let name = s["suite"].as_str().unwrap_or_default();
            s["reports"].as_array().into_iter().flatten().map(move |r| (name, r))
        })
        .collect()
}

/// A corrupted run must exit 1 and name `key` in a required check that passes on clean input.
fn negative_control(clean: &Value, suite: &str, corrupt: &str, key: &str) -> (bool, String) {
    let (code, stdout, _) = elchi(&["verify", suite, "--corrupt", corrupt]);
    let clean_passing: BTreeSet<&str> = reports(clean)
        .into_iter()
        .filter(|(s, r)| *s == suite && r["required"] == true && r["pass"] == true)
        .filter_map(|(_, r)| r["identity"].as_str())
        .collect();
    let v: Value = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    let named = reports(&v).into_iter().any(|(_, r)| {
        clean_passing.contains(r["identity"].as_str().unwrap_or_default())
            && r["discrepancies"].as_array().into_iter().flatten().any(|d| d["key"] == key)
    });
    (code == 1 && named, format!("{suite} --corrupt {corrupt}: exit {code}, names {key}: {named}"))
}

fn criterion12() -> (Outcome, BTreeSet<String>) {
    let dir = std::env::temp_dir().join(format!("elchi-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("all.json");
    let (code, _, t) = elchi(&["verify", "all", "--out", path.to_str().unwrap()]);
    let all: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap_or_default()).unwrap_or(Value::Null);
    let failing_suites: BTreeSet<String> = all["suites"]
        .as_array()
        .into_iter()
        .flatten()
        .filter(|s| s["pass"] == false)
        .filter_map(|s| s["suite"].as_str().map(String::from))
        .collect();
    let mut detail = format!("verify all: exit {code} in {:.1}s (limit 300s), failing suites {failing_suites:?}", t.as_secs_f64());
    let mut controls = true;
    for (suite, corrupt, key) in [
        ("prop33", "2,3", "(chi)_2*(1-chibar)_3"),
        ("prop39", "3,2", "rho_3*(chi)_2"),
        ("classical-limits", "2,3", "x^2*xbar^3"),
    ] {
        let (ok, line) = negative_control(&all, suite, corrupt, key);
        controls &= ok;
        detail += &format!("\n      negative control {line}");
    }
    let _ = std::fs::remove_dir_all(&dir);
    (Outcome { pass: code == 0 && t < Duration::from_secs(300) && controls, detail }, failing_suites)
}

fn main() {
    let mut runner = Runner::default();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    let secs = |s| Some(Duration::from_secs(s));

    results.push((1, "Hopf axioms for F on |l|<=2, m+n<=3", runner.outcome(&[Suite::HopfF], secs(30))));
    results.push((2, "Hopf axioms for U on a+c+d<=2, |b|<=2", runner.outcome(&[Suite::HopfU], secs(30))));
    results.push((3, "duality pairing and pairing-defined actions", runner.outcome(&[Suite::Duality], None)));
    results.push((4, "twisted primitive X and (* o S)(X) = -X", runner.outcome(&[Suite::Lemma22], None)));
    results.push((5, "quantum plane invariance, coaction and relation", runner.outcome(&[Suite::Prop23], None)));
    let (c24, prop24) = runner.suites(&[Suite::Prop24Crosscheck], None);
    results.push((7, "abstract identities in PBW normal form", runner.outcome(&[Suite::AbstractIdentities], secs(10))));
    let plane = [Suite::Lemma32, Suite::Lemma34, Suite::Lemma35];
    results.push((8, "plane actions, eigenvalues and rho_n", runner.outcome(&plane, secs(120))));
    results.push((9, "plane-wave eigenstates and series", runner.outcome(&[Suite::Prop33], None)));
    results.push((10, "angular ladders and eigenstates", runner.outcome(&[Suite::Lemma38, Suite::Prop39], None)));
    results.push((11, "classical limits", runner.outcome(&[Suite::ClassicalLimits], None)));

    let j_report = prop24.iter().flat_map(|s| &s.reports).any(|r| r.identity.contains("lambda(J)"));
    let deps: Vec<u32> = results.iter().filter(|(n, _, o)| (7..=10).contains(n) && !o.pass).map(|(n, _, _)| *n).collect();
    let c6 = Outcome {
        pass: c24.pass && j_report && deps.is_empty(),
        detail: format!("{}, J reconciliation report emitted: {j_report}, depends on criteria 7-10, failing: {deps:?}", c24.detail),
    };
    results.push((6, "lambda(P1), lambda(P2) closed forms; J reconciliation", c6));
    let (c12, failing_suites) = criterion12();
    results.push((12, "verify all and negative controls", c12));
    results.sort_by_key(|(n, _, _)| *n);

    for (n, title, o) in &results {
        println!("criterion {n:>2}: {} {title}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }

    let expected: BTreeSet<(String, String)> = KNOWN_FAILURES.iter().map(|(s, i)| (s.to_string(), i.to_string())).collect();
    let expected_suites: BTreeSet<String> = expected.iter().map(|(s, _)| s.clone()).collect();
    let unexpected: Vec<u32> = results.iter().filter(|(n, _, o)| !o.pass && !KNOWN_FAILING_CRITERIA.contains(n)).map(|(n, _, _)| *n).collect();
    let passed = results.iter().filter(|(_, _, o)| o.pass).count();
    println!("{passed} of {} criteria pass", results.len());
    let consistent = runner.observed == expected && failing_suites == expected_suites && unexpected.is_empty();
    if !consistent {
        println!("unexpected criteria failures: {unexpected:?}");
        println!("failing suites in verify all: {failing_suites:?}");
        println!("failing identities differing from the documented set:");
        for d in runner.observed.symmetric_difference(&expected) {
            println!("  {d:?}");
        }
        std::process::exit(1);
    }
    println!("every failure is one of the documented conflicts between stated identities");
}

// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance runner. Prints one line per criterion and exits nonzero if any
//! criterion fails in a way not already recorded as a known limitation.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use serde_json::Value;
use wasa::engine::{
    build_divergence_witness, divergence_inequality, divergence_params, guarantee,
    matrix_exponential_degrees, registry, solve_direct, solve_sigmoid_direct, witness_semantics,
    Status, BIPOLAR,
};
use wasa::graph::builtin;
use wasa::random::{random_wasa, trial_rng, GraphSpec};
use wasa::{iterate, Aggregator, Influence, IterationConfig, Semantics, ValueDomain};
use wasa_cli::report::fmt3;
use wasa_cli::{run_from, ExitStatus, Rendered};

/// Result of one criterion. `failures` are short stable labels, compared
/// against the known list.
struct Outcome {
    detail: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(detail: impl Into<String>, failures: Vec<String>) -> Self {
        Outcome {
            detail: detail.into(),
            failures,
        }
    }
}

struct Criterion {
    id: u8,
    name: &'static str,
    run: fn() -> Outcome,
    /// Failures that are understood and recorded, with the reason.
    known: &'static [&'static str],
    reason: &'static str,
    time_limit: Option<Duration>,
}

fn cli(args: &[&str]) -> Rendered {
    let argv = std::iter::once("wasa").chain(args.iter().copied());
    run_from(argv)
        .unwrap_or_else(|e| panic!("bad arguments {args:?}: {e}"))
        .unwrap_or_else(|e| panic!("command {args:?} failed: {e}"))
}

fn cli_json(args: &[&str]) -> (Value, ExitStatus) {
    let mut all: Vec<&str> = args.to_vec();
    all.extend(["--format", "json"]);
    let out = cli(&all);
    (
        serde_json::from_str(&out.stdout).expect("json output"),
        out.status,
    )
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|x| x.as_f64().expect("number"))
        .collect()
}

const TABLE: [(&str, [&str; 4]); 7] = [
    ("euler", ["0.800", "0.894", "0.000", "0.604"]),
    ("max-euler", ["0.800", "0.801", "0.000", "0.612"]),
    ("direct", ["0.800", "1.161", "-1.039", "0.120"]),
    ("damped-max", ["0.800", "1.400", "-0.699", "0.000"]),
    ("positive-direct", ["0.800", "2.200", "-1.499", "-0.400"]),
    ("sigmoid-direct", ["0.800", "0.902", "-0.875", "0.126"]),
    ("sigmoid-damped-max", ["0.800", "0.940", "-0.699", "0.000"]),
];

fn comparison_table() -> Outcome {
    let (json, _) = cli_json(&["compare", "--builtin", "ex2", "--delta", "2"]);
    let rows = json["rows"].as_array().expect("rows");
    let mut failures = Vec::new();
    let mut cells = 0;
    for (name, expected) in TABLE {
        let Some(row) = rows.iter().find(|r| r["semantics"] == name) else {
            failures.push(format!("{name}: missing row"));
            continue;
        };
        if row["degrees"].is_null() {
            failures.push(format!("{name}: {}", row["status"]));
            continue;
        }
        for (i, (x, e)) in floats(&row["degrees"])
            .into_iter()
            .zip(expected)
            .enumerate()
        {
            cells += 1;
            let target: f64 = e.parse().unwrap();
            if fmt3(x) != e || (x - target).abs() > 0.0005 {
                failures.push(format!("{name} a{}: {x} vs {e}", i + 1));
            }
        }
    }
    Outcome::new(format!("{cells} cells compared"), failures)
}

fn matrix_exponential() -> Outcome {
    let wasa = builtin("exp-counter").unwrap();
    let d = matrix_exponential_degrees(&wasa, 1e-15);
    let mut failures = Vec::new();
    if !close(&d, &[1.0, 2.0, 2.5, 2.0, 3.0], 1e-9) {
        failures.push(format!("degrees {d:?}"));
    }
    // a3 and a5 have equal weights and one supporter each, of equal degree.
    let g = wasa.matrix();
    let same_inputs = wasa.weights()[2] == wasa.weights()[4]
        && g.row(2) == [0, 1, 0, 0, 0]
        && g.row(4) == [0, 0, 0, 1, 0]
        && (d[1] - d[3]).abs() < 1e-9;
    if !same_inputs {
        failures.push("a3 and a5 inputs differ".into());
    }
    if (d[2] - d[4]).abs() < 1e-9 {
        failures.push("a3 and a5 agree".into());
    }
    Outcome::new(
        format!(
            "degrees {:?}",
            d.iter().map(|x| fmt3(*x)).collect::<Vec<_>>()
        ),
        failures,
    )
}

const TWO_CYCLE: &str = r#"{
  "domain": {"lo": 0, "hi": 1},
  "arguments": [{"id": "a", "weight": 0.75}, {"id": "b", "weight": 0.25}],
  "edges": [
    {"from": "a", "to": "a", "kind": "attack"},
    {"from": "b", "to": "a", "kind": "support"},
    {"from": "a", "to": "b", "kind": "support"},
    {"from": "b", "to": "b", "kind": "attack"}
  ]
}"#;

fn oscillation() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two_cycle.json");
    std::fs::write(&path, TWO_CYCLE).unwrap();
    let p = path.to_str().unwrap();
    let (json, status) = cli_json(&[
        "evaluate",
        "--graph",
        p,
        "--semantics",
        "combined-h-categorizer",
    ]);
    let mut failures = Vec::new();
    if status != ExitStatus::Diverged {
        failures.push(format!("exit {status:?}"));
    }
    if json["status"] != "oscillating" {
        return Outcome::new("", vec![format!("status {}", json["status"])]);
    }
    let period = json["period"].as_u64().unwrap();
    let at = json["detected_at"].as_u64().unwrap();
    let cycle: Vec<Vec<f64>> = json["cycle"]
        .as_array()
        .unwrap()
        .iter()
        .map(floats)
        .collect();
    if period != 2 {
        failures.push(format!("period {period}"));
    }
    if at > 10 {
        failures.push(format!("detected at {at}"));
    }
    for want in [[0.75, 0.25], [0.5, 0.5]] {
        if !cycle.iter().any(|c| close(c, &want, 1e-9)) {
            failures.push(format!("{want:?} not in cycle"));
        }
    }
    Outcome::new(
        format!("period {period}, detected at iteration {at}"),
        failures,
    )
}

fn divergence_witnesses() -> Outcome {
    let cases = [
        Influence::Multilinear,
        Influence::Qmax,
        Influence::CombinedFractional,
        Influence::Euler,
        Influence::Linear { delta: 2.0 },
        Influence::Linear { delta: 3.0 },
        Influence::Linear { delta: 4.0 },
        Influence::Sigmoid { delta: 2.0 },
        Influence::Sigmoid { delta: 3.0 },
    ];
    let cfg = IterationConfig::default()
        .with_tolerance(1e-10)
        .with_max_iterations(100_000);
    let mut failures = Vec::new();
    for inf in cases {
        let p = divergence_params(inf).unwrap();
        let wasa = build_divergence_witness(p.k, p.v, p.w, inf.value_domain()).unwrap();
        let sem = witness_semantics(inf).unwrap();
        if let Ok(o) = iterate(&wasa, &sem, &cfg) {
            if o.is_converged() {
                failures.push(format!("{inf} converges"));
            }
        }
        let (lhs, rhs) = divergence_inequality(inf, p);
        if !matches!(
            lhs.partial_cmp(&rhs),
            Some(Ordering::Greater | Ordering::Equal)
        ) {
            failures.push(format!("{inf} inequality"));
        }
    }
    Outcome::new(format!("{} witnesses", cases.len()), failures)
}

/// Draws the semantics and graph family for one trial.
type Family = fn(&mut rand_chacha::ChaCha8Rng) -> (GraphSpec, Semantics);

fn certificate_sweep() -> Outcome {
    const GRAPHS: u64 = 200;
    let cfg = IterationConfig::default().with_max_iterations(100_000);
    let mut failures = Vec::new();
    let mut total = 0;
    let families: [(&str, Family); 5] = [
        ("euler", |_| {
            let sem = Semantics::new(Aggregator::Sum, Influence::Euler).unwrap();
            (
                GraphSpec::default()
                    .with_max_indegree(4)
                    .with_edge_probability(0.5),
                sem,
            )
        }),
        ("direct", |rng| {
            let k = rng.random_range(0..=4usize);
            let delta = k as f64 + rng.random_range(0.1..2.0);
            let sem = Semantics::new(Aggregator::Sum, Influence::Linear { delta }).unwrap();
            let spec = GraphSpec::default()
                .with_max_indegree(k)
                .with_edge_probability(0.5)
                .with_weights(-1.0, 1.0, ValueDomain::reals());
            (spec, sem)
        }),
        ("damped-max", |rng| {
            let delta = rng.random_range(2.05..5.0);
            let sem = Semantics::new(Aggregator::Top, Influence::Linear { delta }).unwrap();
            let spec = GraphSpec::default()
                .with_edge_probability(0.5)
                .with_weights(-1.0, 1.0, ValueDomain::reals());
            (spec, sem)
        }),
        ("max-euler", |_| {
            let sem = Semantics::new(Aggregator::Top, Influence::Euler).unwrap();
            (GraphSpec::default().with_edge_probability(0.5), sem)
        }),
        ("qmax", |_| {
            let sem = Semantics::new(Aggregator::Sum, Influence::Qmax).unwrap();
            let spec = GraphSpec::default().with_max_indegree(1).with_weights(
                0.0,
                1.0,
                Influence::Qmax.value_domain(),
            );
            (spec, sem)
        }),
    ];
    for (f, (family, make)) in families.iter().enumerate() {
        let mut certified = 0;
        for t in 0..GRAPHS {
            let mut rng = trial_rng(5_000 + f as u64, t);
            let (spec, sem) = make(&mut rng);
            let wasa = random_wasa(&mut rng, &spec).unwrap();
            if !guarantee(&wasa, &sem).is_guaranteed() {
                continue;
            }
            certified += 1;
            match iterate(&wasa, &sem, &cfg) {
                Ok(o) if o.is_converged() => {}
                _ => failures.push(format!("{family} trial {t}")),
            }
        }
        if certified < GRAPHS {
            failures.push(format!("{family}: only {certified} of {GRAPHS} certified"));
        }
        total += certified;
    }
    Outcome::new(format!("{total} certified graphs"), failures)
}

fn closed_form() -> Outcome {
    let tight = IterationConfig::default().with_tolerance(1e-13);
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for t in 0..100u64 {
        let mut rng = trial_rng(6_000, t);
        let spec = GraphSpec::default()
            .with_max_indegree(4)
            .with_edge_probability(0.4)
            .with_weights(-1.0, 1.0, ValueDomain::reals());
        let wasa = random_wasa(&mut rng, &spec).unwrap();
        let delta = wasa.indegree() as f64 + rng.random_range(0.25..2.0);

        let sem = Semantics::new(Aggregator::Sum, Influence::Linear { delta }).unwrap();
        let it = iterate(&wasa, &sem, &tight).unwrap();
        let solved = solve_direct(&wasa, delta).unwrap();
        match it.degrees() {
            Some(d) if close(d, &solved, 1e-8) => {
                worst = worst.max(wasa::engine::max_distance(d, &solved))
            }
            _ => failures.push(format!("direct trial {t}")),
        }

        let sigma_spec = spec
            .clone()
            .with_weights(-0.95, 0.95, ValueDomain::symmetric_open());
        let wasa = random_wasa(&mut rng, &sigma_spec).unwrap();
        let delta = wasa.indegree() as f64 + rng.random_range(0.25..2.0);
        let sem = Semantics::new(Aggregator::SumSigma, Influence::Sigmoid { delta }).unwrap();
        let it = iterate(&wasa, &sem, &tight).unwrap();
        let solved = solve_sigmoid_direct(&wasa, delta).unwrap();
        match it.degrees() {
            Some(d) if close(d, &solved, 1e-8) => {
                worst = worst.max(wasa::engine::max_distance(d, &solved))
            }
            _ => failures.push(format!("sigmoid trial {t}")),
        }
    }
    Outcome::new(format!("largest gap {worst:.1e}"), failures)
}

fn acyclic_universality() -> Outcome {
    let cfg = IterationConfig::default().with_tolerance(1e-12);
    let sems: Vec<Semantics> = BIPOLAR
        .iter()
        .map(|n| registry(n, Some(2.0)).unwrap())
        .collect();
    let mut failures = Vec::new();
    let mut runs = 0;
    for t in 0..200u64 {
        let mut rng = trial_rng(7_000, t);
        let spec = GraphSpec::default()
            .acyclic()
            .with_size(1, 10)
            .with_edge_probability(0.4)
            .with_weights(0.0, 0.95, ValueDomain::unit_half_open());
        let wasa = random_wasa(&mut rng, &spec).unwrap();
        for sem in &sems {
            runs += 1;
            match iterate(&wasa, sem, &cfg).map(|o| o.status) {
                Ok(Status::Converged {
                    iterations,
                    residual,
                    ..
                }) if iterations <= wasa.len() && residual < 1e-12 => {}
                other => failures.push(format!("{} trial {t}: {other:?}", sem.label())),
            }
        }
    }
    Outcome::new(format!("{runs} evaluations"), failures)
}

fn axiom_matrix() -> Outcome {
    let (json, status) = cli_json(&["axioms", "--trials", "1000", "--seed", "42", "--n-max", "6"]);
    let mut failures = Vec::new();
    let mut cells = 0;
    let mut stored = 0;
    for row in json["rows"].as_array().unwrap() {
        for c in row["cells"].as_array().unwrap() {
            cells += 1;
            let ok_stored = c.get("stored_confirms").map(|v| v.as_bool().unwrap());
            stored += usize::from(ok_stored == Some(true));
            if c["expected"] != c["observed"] || ok_stored == Some(false) {
                failures.push(format!(
                    "{} {}",
                    row["subject"].as_str().unwrap(),
                    c["axiom"].as_str().unwrap()
                ));
            }
        }
    }
    if failures.is_empty() != (status == ExitStatus::Success) {
        failures.push(format!("exit {status:?}"));
    }
    Outcome::new(
        format!("{cells} cells, {stored} backed by stored counterexamples"),
        failures,
    )
}

fn independence_fixtures() -> Outcome {
    let (json, _) = cli_json(&[
        "axioms",
        "--fixtures",
        "--trials",
        "1000",
        "--seed",
        "42",
        "--n-max",
        "6",
    ]);
    let mut failures = Vec::new();
    let reports = json.as_array().unwrap();
    for r in reports {
        let name = r["fixture"].as_str().unwrap();
        if r["target_failed"] != true {
            failures.push(format!("{name} keeps its target"));
        }
        let also: Vec<&str> = r["collateral"]
            .as_array()
            .unwrap()
            .iter()
            .map(|a| a.as_str().unwrap())
            .collect();
        if !also.is_empty() {
            failures.push(format!("{name} also fails {}", also.join(",")));
        }
    }
    Outcome::new(format!("{} fixtures", reports.len()), failures)
}

fn entailments() -> Outcome {
    let (json, status) = cli_json(&[
        "axioms",
        "--entailments",
        "--trials",
        "1000",
        "--seed",
        "42",
        "--n-max",
        "6",
    ]);
    let checks = json["checks"].as_array().unwrap();
    let mut failures: Vec<String> = checks
        .iter()
        .filter(|c| c["premises_hold"] == true && c["conclusions_hold"] != true)
        .map(|c| format!("{} {}", c["subject"].as_str().unwrap(), c["premises"]))
        .collect();
    if status != ExitStatus::Success {
        failures.push(format!("exit {status:?}"));
    }
    Outcome::new(format!("{} implications checked", checks.len()), failures)
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        name: "comparison table on ex2",
        run: comparison_table,
        known: &[],
        reason: "",
        time_limit: Some(Duration::from_secs(1)),
    },
    Criterion {
        id: 2,
        name: "matrix exponential counterexample",
        run: matrix_exponential,
        known: &[],
        reason: "",
        time_limit: None,
    },
    Criterion {
        id: 3,
        name: "two-cycle oscillation",
        run: oscillation,
        known: &[],
        reason: "",
        time_limit: None,
    },
    Criterion {
        id: 4,
        name: "divergence witnesses",
        run: divergence_witnesses,
        known: &["sigmoid(3) inequality"],
        reason: "the divergence inequality is false for sigmoid(3) with k=2, v=2/3, w=3/5",
        time_limit: None,
    },
    Criterion {
        id: 5,
        name: "certificate soundness sweep",
        run: certificate_sweep,
        known: &[],
        reason: "",
        time_limit: Some(Duration::from_secs(60)),
    },
    Criterion {
        id: 6,
        name: "closed-form direct solutions",
        run: closed_form,
        known: &[],
        reason: "",
        time_limit: None,
    },
    Criterion {
        id: 7,
        name: "acyclic graphs settle",
        run: acyclic_universality,
        known: &[],
        reason: "",
        time_limit: None,
    },
    Criterion {
        id: 8,
        name: "axiom matrix",
        run: axiom_matrix,
        known: &["negative-fractional stickiness_min"],
        reason: "negative fractional is sticky at Min, so that cell cannot show a counterexample",
        time_limit: None,
    },
    Criterion {
        id: 9,
        name: "independence fixtures",
        run: independence_fixtures,
        known: &[
            "gd-unless-negative-attacker keeps its target",
            "gd-unless-negative-attacker also fails reinforcement_alpha,continuity_alpha",
            "gd-times-count also fails reinforcement_alpha,continuity_alpha,strengthening_alpha,weakening_alpha",
            "gd-plus-negatives also fails independence,reinforcement_alpha",
            "gd-with-jump also fails independence,reinforcement_alpha",
            "weight-times-s-plus-one also fails reinforcement_iota",
        ],
        reason: "five fixtures break more than their target on D=[-1,1]",
        time_limit: None,
    },
    Criterion {
        id: 10,
        name: "entailments",
        run: entailments,
        known: &[],
        reason: "",
        time_limit: None,
    },
];

fn main() -> ExitCode {
    let mut unexpected = 0;
    let mut known_red = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let mut out = (c.run)();
        let elapsed = start.elapsed();
        if let Some(limit) = c.time_limit {
            if elapsed > limit {
                out.failures.push(format!(
                    "took {:.2} s, limit {} s",
                    elapsed.as_secs_f64(),
                    limit.as_secs()
                ));
            }
        }
        let secs = elapsed.as_secs_f64();
        let got: BTreeSet<&str> = out.failures.iter().map(String::as_str).collect();
        let known: BTreeSet<&str> = c.known.iter().copied().collect();
        let verdict = if got.is_empty() {
            if known.is_empty() {
                "PASS".to_string()
            } else {
                "PASS (previously known red)".to_string()
            }
        } else if got == known {
            known_red += 1;
            format!("FAIL (known: {})", c.reason)
        } else {
            unexpected += 1;
            "FAIL".to_string()
        };
        println!(
            "criterion {:>2} {:<34} {verdict}  [{secs:.2} s] {}",
            c.id, c.name, out.detail
        );
        if got != known {
            for f in &out.failures {
                println!("    {f}");
            }
        }
    }
    println!(
        "{} criteria, {} known red, {unexpected} unexpected failures",
        CRITERIA.len(),
        known_red
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

use proptest::prelude::*;
use rand::Rng;
use wasa::random::{random_wasa, trial_rng, GraphSpec};
use wasa::{Polarity, ValueDomain};
use wasa_cli::document::{parse, serialize};

fn wasa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wasa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compare_prints_the_ex2_table() {
    let o = wasa(&["compare", "--builtin", "ex2", "--delta", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row = |name: &str| {
        out.lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .unwrap_or_else(|| panic!("no {name} row in\n{out}"))
            .split_whitespace()
            .skip(2)
            .map(String::from)
            .collect::<Vec<_>>()
    };
    assert_eq!(row("euler"), ["0.800", "0.894", "0.000", "0.604"]);
    assert_eq!(
        row("positive-direct"),
        ["0.800", "2.200", "-1.499", "-0.400"]
    );
    assert_eq!(
        row("sigmoid-damped-max"),
        ["0.800", "0.940", "-0.699", "0.000"]
    );
}

#[test]
fn compare_marks_divergent_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        wasa(&["witness", "--influence", "euler", "--out", p])
            .status
            .code(),
        Some(0)
    );
    let out = stdout(&wasa(&["compare", "--graph", p]));
    let euler = out.lines().find(|l| l.starts_with("euler ")).unwrap();
    assert!(euler.contains("div"), "{out}");
    let max_euler = out.lines().find(|l| l.starts_with("max-euler ")).unwrap();
    assert!(!max_euler.contains("div"), "{out}");
}

#[test]
fn edgeless_graph_keeps_its_weight_everywhere() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.json");
    std::fs::write(
        &path,
        r#"{"domain": {"lo": 0, "hi": 1}, "arguments": [{"id": "x", "weight": 0.3}], "edges": []}"#,
    )
    .unwrap();
    let out = stdout(&wasa(&[
        "compare",
        "--graph",
        path.to_str().unwrap(),
        "--all-bipolar",
        "--format",
        "csv",
    ]));
    assert_eq!(out.lines().count(), 9);
    for line in out.lines().skip(1) {
        let x: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        // tanh(atanh(w)) is only exact to an ulp
        assert!((x - 0.3).abs() < 1e-15, "{line}");
    }
}

#[test]
fn exit_codes_follow_the_outcome() {
    let ok = wasa(&["evaluate", "--builtin", "ex2", "--semantics", "euler"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("converged after"));

    let budget = wasa(&[
        "evaluate",
        "--builtin",
        "ex2",
        "--semantics",
        "euler",
        "--max-iter",
        "2",
    ]);
    assert_eq!(budget.status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycle.json");
    std::fs::write(
        &path,
        r#"{"domain": {"lo": 0, "hi": 1},
            "arguments": [{"id": "a", "weight": 0.75}, {"id": "b", "weight": 0.25}],
            "edges": [{"from": "a", "to": "a", "kind": "attack"}, {"from": "b", "to": "a", "kind": "support"},
                      {"from": "a", "to": "b", "kind": "support"}, {"from": "b", "to": "b", "kind": "attack"}]}"#,
    )
    .unwrap();
    let cyc = wasa(&[
        "evaluate",
        "--graph",
        path.to_str().unwrap(),
        "--semantics",
        "combined-h-categorizer",
    ]);
    assert_eq!(cyc.status.code(), Some(2));
    assert!(stdout(&cyc).contains("period 2"));

    assert_eq!(
        wasa(&["evaluate", "--builtin", "ex9", "--semantics", "euler"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wasa(&["evaluate", "--builtin", "ex2", "--semantics", "nope"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wasa(&["evaluate", "--builtin", "ex2", "--semantics", "direct"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wasa(&["evaluate", "--semantics", "euler"]).status.code(),
        Some(1)
    );
}

#[test]
fn malformed_document_reports_its_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        "{\n  \"domain\": \"R\",\n  \"arguments\": [{\"id\": \"a\"}]\n}\n",
    )
    .unwrap();
    let o = wasa(&[
        "evaluate",
        "--graph",
        path.to_str().unwrap(),
        "--semantics",
        "direct",
        "--delta",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn guarantee_names_the_certificate() {
    let out = stdout(&wasa(&[
        "guarantee",
        "--builtin",
        "ex2",
        "--semantics",
        "euler",
        "--format",
        "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "guaranteed");
    assert_eq!(v["certificate"], "euler-indegree");
    assert_eq!(v["indegree"], 3);
}

#[test]
fn linear_witness_for_delta_four() {
    let out = stdout(&wasa(&["witness", "--influence", "linear", "--delta", "4"]));
    let w = parse(&out).unwrap();
    assert_eq!(w.len(), 6);
    assert_eq!(w.indegree(), 6);
    assert!(w.weights()[..3]
        .iter()
        .all(|&x| (x - 2.0 / 3.0).abs() < 1e-15));
    assert!(w.weights()[3..].iter().all(|&x| (x - 0.6).abs() < 1e-15));
}

#[test]
fn axioms_exit_code_tracks_the_pattern() {
    let agg = wasa(&["axioms", "--target", "AGG", "--trials", "100"]);
    assert_eq!(agg.status.code(), Some(0), "{}", stdout(&agg));
    let inf = wasa(&["axioms", "--target", "INF", "--trials", "1"]);
    assert_eq!(inf.status.code(), Some(4));
    assert!(stdout(&inf).contains("negative-fractional stickiness_min"));
    let one = wasa(&["axioms", "--target", "euler", "--trials", "50"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(
        stdout(&one)
            .lines()
            .filter(|l| l.starts_with("euler"))
            .count(),
        1
    );
}

#[test]
fn output_is_stable_across_runs() {
    let args = [
        "axioms", "--target", "AGG", "--trials", "50", "--seed", "7", "--format", "json",
    ];
    assert_eq!(wasa(&args).stdout, wasa(&args).stdout);
    let args = ["compare", "--builtin", "ex2", "--format", "csv"];
    assert_eq!(wasa(&args).stdout, wasa(&args).stdout);
}

#[test]
fn trace_lists_every_iterate() {
    let out = stdout(&wasa(&[
        "trace",
        "--builtin",
        "exp-counter",
        "--semantics",
        "direct",
        "--delta",
        "2",
    ]));
    assert!(out.starts_with("trace\n"));
    assert!(out.lines().any(|l| l.starts_with("3 ")), "{out}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 0);
        let domain = [ValueDomain::unit(), ValueDomain::symmetric(), ValueDomain::reals(), ValueDomain::unit_half_open()]
            [rng.random_range(0..4)];
        let spec = GraphSpec::default()
            .with_polarity(Polarity::Any)
            .with_size(1, 9)
            .with_weights(-1.0, 1.0, domain);
        let w = random_wasa(&mut rng, &spec).unwrap();
        let text = serialize(&w);
        prop_assert_eq!(parse(&text).unwrap(), w);
        prop_assert_eq!(serialize(&parse(&text).unwrap()), text);
    }
}

// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;
use wasa::axioms::{
    axiom_matrix, entailment_checks, fixture_reports, AxiomMatrix, Target, ALPHA_COLUMNS,
    IOTA_COLUMNS,
};
use wasa::engine::{
    build_divergence_witness, divergence_inequality, divergence_params, guarantee, registry,
    witness_semantics, Status, Verdict, BIPOLAR, COMPARISON_ROWS, REGISTRY,
};
use wasa::graph::builtin;
use wasa::{
    iterate, Aggregator, AxiomError, EngineError, GraphError, Influence, IterationConfig,
    Semantics, Wasa,
};

use crate::args::{Cli, Command, GraphSource, SemanticsArgs};
use crate::document::{self, DocumentError};
use crate::report::{Cell, Report, Section};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    InputError = 1,
    Diverged = 2,
    BudgetExhausted = 3,
    Mismatch = 4,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub report: Report,
    pub status: ExitStatus,
}

impl Output {
    fn new(report: Report, status: ExitStatus) -> Self {
        Output { report, status }
    }
}

/// What a command printed, already rendered.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub stdout: String,
    pub status: ExitStatus,
}

pub fn run(cli: &Cli) -> Result<Rendered, CliError> {
    if let Command::Witness { out: None, .. } = &cli.command {
        // The document itself is the output.
        let (wasa, _) = witness_graph(&cli.command)?;
        return Ok(Rendered {
            stdout: document::serialize(&wasa),
            status: ExitStatus::Success,
        });
    }
    let out = dispatch(cli)?;
    Ok(Rendered {
        stdout: out.report.render(cli.format),
        status: out.status,
    })
}

pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Evaluate { source, semantics } => evaluate(cli, source, semantics, false),
        Command::Trace { source, semantics } => evaluate(cli, source, semantics, true),
        Command::Compare {
            source,
            all_bipolar,
            delta,
        } => compare(cli, source, *all_bipolar, *delta),
        Command::Axioms {
            target,
            trials,
            n_max,
            delta,
            fixtures,
            entailments,
        } => {
            let target = AxiomTarget::parse(target, *delta)?;
            if *fixtures {
                fixtures_report(&target, *trials, cli.seed, *n_max)
            } else if *entailments {
                entailments_report(&target, *trials, cli.seed, *n_max, *delta)
            } else {
                matrix_report(&target, *trials, cli.seed, *n_max, *delta)
            }
        }
        Command::Guarantee { source, semantics } => guarantee_report(source, semantics),
        Command::Witness {
            out: Some(path), ..
        } => {
            let (wasa, summary) = witness_graph(&cli.command)?;
            let path_str = path.display().to_string();
            fs::write(path, document::serialize(&wasa)).map_err(|source| CliError::Io {
                path: path_str.clone(),
                source,
            })?;
            Ok(Output::new(
                summary.note(format!("wrote {path_str}")),
                ExitStatus::Success,
            ))
        }
        Command::Witness { out: None, .. } => {
            let (_, summary) = witness_graph(&cli.command)?;
            Ok(Output::new(summary, ExitStatus::Success))
        }
    }
}

pub fn load_graph(source: &GraphSource) -> Result<Wasa, CliError> {
    match (&source.graph, &source.builtin) {
        (Some(path), _) => read_graph(path),
        (None, Some(name)) => Ok(builtin(name)?),
        (None, None) => Err(CliError::Usage(
            "give --graph PATH or --builtin NAME".into(),
        )),
    }
}

pub fn read_graph(path: &Path) -> Result<Wasa, CliError> {
    let p = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: p.clone(),
        source,
    })?;
    document::parse(&text).map_err(|source| CliError::Document { path: p, source })
}

/// A registered name, or `AGGREGATOR+INFLUENCE`.
pub fn resolve_semantics(name: &str, delta: Option<f64>) -> Result<Semantics, CliError> {
    let Some((agg, inf)) = name.split_once('+') else {
        return Ok(registry(name, delta)?);
    };
    let aggregator = Aggregator::from_name(agg)
        .ok_or_else(|| CliError::Usage(format!("unknown aggregation function '{agg}'")))?;
    let influence = Influence::from_name(inf, delta).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Semantics::new(aggregator, influence)?)
}

fn config(cli: &Cli) -> IterationConfig {
    IterationConfig::default()
        .with_tolerance(cli.tol)
        .with_max_iterations(cli.max_iter)
}

/// Failures that happen while iterating rather than on the inputs.
fn is_divergence(err: &EngineError) -> bool {
    matches!(
        err,
        EngineError::NonFinite { .. }
            | EngineError::LeftDomain { .. }
            | EngineError::Aggregation { .. }
            | EngineError::Influence { .. }
    )
}

fn exp(x: f64) -> String {
    format!("{x:.3e}")
}

fn degree_rows(section: &mut Section, wasa: &Wasa, values: &[f64]) {
    for ((label, &w), &d) in wasa.labels().iter().zip(wasa.weights()).zip(values) {
        section.push(vec![Cell::text(label), Cell::Num(w), Cell::Num(d)]);
    }
}

fn state_section(title: &str, first: &str, wasa: &Wasa, states: &[Vec<f64>]) -> Section {
    let headers = std::iter::once(first.to_string()).chain(wasa.labels().iter().cloned());
    let mut s = Section::new(headers).titled(title);
    for (i, row) in states.iter().enumerate() {
        s.push(
            std::iter::once(Cell::text(i.to_string()))
                .chain(row.iter().map(|&x| Cell::Num(x)))
                .collect(),
        );
    }
    s
}

fn evaluate(
    cli: &Cli,
    source: &GraphSource,
    args: &SemanticsArgs,
    trace: bool,
) -> Result<Output, CliError> {
    let wasa = load_graph(source)?;
    let sem = resolve_semantics(&args.semantics, args.delta)?;
    let mut cfg = config(cli);
    if trace {
        cfg = cfg.with_trace();
    }
    let head = json!({
        "semantics": sem.label(),
        "delta": sem.influence.delta(),
        "arguments": wasa.labels(),
        "weights": wasa.weights(),
    });
    let outcome = match iterate(&wasa, &sem, &cfg) {
        Ok(o) => o,
        Err(e) if is_divergence(&e) => {
            let mut json = head;
            json["status"] = json!("diverged");
            json["error"] = json!(e.to_string());
            let report = Report::new(json).note(format!("{}: diverged: {e}", sem.label()));
            return Ok(Output::new(report, ExitStatus::Diverged));
        }
        Err(e) => return Err(e.into()),
    };
    let mut json = head;
    if let (Value::Object(m), Value::Object(o)) = (
        &mut json,
        serde_json::to_value(&outcome).expect("finite outcome"),
    ) {
        m.extend(o);
    }
    let mut report = Report::new(json);
    if let Some(t) = &outcome.trace {
        report = report.section(state_section("trace", "iteration", &wasa, t));
    }
    let title = sem.label();
    let status = match &outcome.status {
        Status::Converged {
            degrees,
            iterations,
            residual,
        } => {
            let mut s = Section::new(["argument", "weight", "degree"]).titled(title);
            degree_rows(&mut s, &wasa, degrees);
            report = report.section(s).note(format!(
                "converged after {iterations} iterations, residual {}",
                exp(*residual)
            ));
            ExitStatus::Success
        }
        Status::Oscillating {
            period,
            cycle,
            detected_at,
        } => {
            report = report
                .section(state_section(&title, "state", &wasa, cycle))
                .note(format!(
                    "oscillating with period {period}, detected at iteration {detected_at}"
                ));
            ExitStatus::Diverged
        }
        Status::BudgetExhausted { last, residual } => {
            let mut s = Section::new(["argument", "weight", "last"]).titled(title);
            degree_rows(&mut s, &wasa, last);
            report = report.section(s).note(format!(
                "no convergence within {} iterations, last step {}",
                cfg.max_iterations,
                exp(*residual)
            ));
            ExitStatus::BudgetExhausted
        }
    };
    Ok(Output::new(report, status))
}

fn compare(
    cli: &Cli,
    source: &GraphSource,
    all_bipolar: bool,
    delta: f64,
) -> Result<Output, CliError> {
    let wasa = load_graph(source)?;
    let names: &[&str] = if all_bipolar {
        &BIPOLAR
    } else {
        &COMPARISON_ROWS
    };
    let cfg = config(cli);
    let headers = ["semantics", "delta"]
        .into_iter()
        .map(String::from)
        .chain(wasa.labels().iter().cloned());
    let mut section = Section::new(headers);
    let mut rows = Vec::new();
    for &name in names {
        let needs_delta = REGISTRY.iter().any(|e| e.name == name && e.needs_delta);
        let sem = registry(name, Some(delta))?;
        let (status, degrees, error) = match iterate(&wasa, &sem, &cfg) {
            Ok(o) => match o.status {
                Status::Converged { degrees, .. } => ("converged", Some(degrees), None),
                Status::Oscillating { .. } => ("oscillating", None, None),
                Status::BudgetExhausted { .. } => ("budget-exhausted", None, None),
            },
            Err(e) if is_divergence(&e) => ("diverged", None, Some(e.to_string())),
            Err(e) => ("rejected", None, Some(e.to_string())),
        };
        let mut row = vec![
            Cell::text(name),
            if needs_delta {
                Cell::text(delta.to_string())
            } else {
                Cell::text("-")
            },
        ];
        row.extend((0..wasa.len()).map(|i| match (&degrees, status) {
            (Some(d), _) => Cell::Num(d[i]),
            (None, "rejected") => Cell::text("n/a"),
            (None, _) => Cell::Div,
        }));
        section.push(row);
        rows.push(json!({
            "semantics": name,
            "delta": needs_delta.then_some(delta),
            "status": status,
            "degrees": degrees,
            "error": error,
        }));
    }
    let json = json!({ "arguments": wasa.labels(), "rows": rows });
    Ok(Output::new(
        Report::new(json).section(section),
        ExitStatus::Success,
    ))
}

fn guarantee_report(source: &GraphSource, args: &SemanticsArgs) -> Result<Output, CliError> {
    let wasa = load_graph(source)?;
    let sem = resolve_semantics(&args.semantics, args.delta)?;
    let g = guarantee(&wasa, &sem);
    let mut s = Section::new(["field", "value"]).titled(sem.label());
    let mut row = |k: &str, v: String| s.push(vec![Cell::text(k), Cell::text(v)]);
    match &g.verdict {
        Verdict::Guaranteed {
            certificate,
            details,
        } => {
            row("verdict", "guaranteed".into());
            row("certificate", certificate.to_string());
            row("details", details.clone());
        }
        Verdict::NoGuarantee { reason } => {
            row("verdict", "no guarantee".into());
            row("reason", reason.clone());
        }
    }
    row("indegree", g.indegree.to_string());
    if let Some(m) = g.m {
        row("lipschitz bound", m.to_string());
    }
    if let Some(d) = g.delta {
        row("delta", d.to_string());
    }
    let mut json = serde_json::to_value(&g).expect("finite report");
    json["semantics"] = json!(sem.label());
    Ok(Output::new(
        Report::new(json).section(s),
        ExitStatus::Success,
    ))
}

fn witness_graph(command: &Command) -> Result<(Wasa, Report), CliError> {
    let Command::Witness {
        influence, delta, ..
    } = command
    else {
        unreachable!("called for the witness command only");
    };
    let inf =
        Influence::from_name(influence, *delta).map_err(|e| CliError::Usage(e.to_string()))?;
    let p = divergence_params(inf)?;
    let wasa = build_divergence_witness(p.k, p.v, p.w, inf.value_domain())?;
    let sem = witness_semantics(inf)?;
    let (lhs, rhs) = divergence_inequality(inf, p);
    let mut s = Section::new(["field", "value"]).titled(format!("witness for {inf}"));
    for (k, v) in [
        ("semantics", Cell::text(sem.label())),
        ("k", Cell::text(p.k.to_string())),
        ("arguments", Cell::text(wasa.len().to_string())),
        ("v", Cell::Num(p.v)),
        ("w", Cell::Num(p.w)),
        ("iota(k(v-w), w)", Cell::Num(lhs)),
        ("iota(k(w-v), v)", Cell::Num(rhs)),
        (
            "inequality holds",
            Cell::text(if lhs >= rhs { "yes" } else { "no" }),
        ),
    ] {
        s.push(vec![Cell::text(k), v]);
    }
    let json = json!({
        "influence": inf.to_string(),
        "semantics": sem.label(),
        "params": p,
        "arguments": wasa.len(),
        "inequality": { "lhs": lhs, "rhs": rhs, "holds": lhs >= rhs },
        "graph": document::GraphDocument::from_wasa(&wasa),
    });
    Ok((wasa, Report::new(json).section(s)))
}

/// Which functions an `axioms` run covers.
#[derive(Debug, Clone, PartialEq)]
pub enum AxiomTarget {
    All,
    Half(Target),
    /// One function, by row subject.
    Function(Target, String),
}

impl AxiomTarget {
    pub fn parse(s: &str, delta: f64) -> Result<Self, CliError> {
        match s {
            "all" | "ALL" => return Ok(AxiomTarget::All),
            "alpha" | "AGG" | "agg" => return Ok(AxiomTarget::Half(Target::Alpha)),
            "iota" | "INF" | "inf" => return Ok(AxiomTarget::Half(Target::Iota)),
            _ => {}
        }
        if let Some(a) = Aggregator::from_name(s) {
            return Ok(AxiomTarget::Function(Target::Alpha, a.name().to_string()));
        }
        match Influence::from_name(s, Some(delta)) {
            Ok(i) => Ok(AxiomTarget::Function(Target::Iota, i.to_string())),
            Err(_) => Err(CliError::Usage(format!(
                "unknown axiom target '{s}' (expected all, AGG, INF or a function name)"
            ))),
        }
    }

    fn half(&self) -> Option<Target> {
        match self {
            AxiomTarget::All => None,
            AxiomTarget::Half(t) | AxiomTarget::Function(t, _) => Some(*t),
        }
    }

    fn admits(&self, subject: &str, target: Target) -> bool {
        match self {
            AxiomTarget::All => true,
            AxiomTarget::Half(t) => *t == target,
            AxiomTarget::Function(t, s) => *t == target && s == subject,
        }
    }
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "✓"
    } else {
        "-"
    }
}

fn matrix_report(
    target: &AxiomTarget,
    trials: usize,
    seed: u64,
    n_max: usize,
    delta: f64,
) -> Result<Output, CliError> {
    let mut m: AxiomMatrix = axiom_matrix(target.half(), trials, seed, n_max, delta)?;
    m.rows.retain(|r| target.admits(&r.subject, r.target));
    let mut report = Report::new(serde_json::to_value(&m).expect("finite matrix"));
    for (t, first, columns) in [
        (Target::Alpha, "aggregation", &ALPHA_COLUMNS[..]),
        (Target::Iota, "influence", &IOTA_COLUMNS[..]),
    ] {
        let rows: Vec<_> = m.rows.iter().filter(|r| r.target == t).collect();
        if rows.is_empty() {
            continue;
        }
        let headers = std::iter::once(first).chain(columns.iter().map(|a| a.heading()));
        let mut s = Section::new(headers);
        for r in rows {
            let mut row = vec![Cell::text(&r.subject)];
            row.extend(r.cells.iter().map(|c| {
                let flag = if c.matches() { "" } else { "*" };
                Cell::text(format!("{}{flag}", mark(c.observed)))
            }));
            s.push(row);
        }
        report = report.section(s);
    }
    let mismatches = m.mismatches();
    for (subject, c) in &mismatches {
        let why = match c.stored_confirms {
            Some(false) if c.observed => ", and no stored counterexample violates it",
            Some(false) => ", stored counterexample no longer violates it",
            _ => "",
        };
        report = report.note(format!(
            "* {subject} {}: expected {}, observed {}{why}",
            c.axiom,
            mark(c.expected),
            mark(c.observed)
        ));
    }
    let status = if mismatches.is_empty() {
        report = report.note(format!(
            "all cells match the expected pattern ({trials} trials, seed {seed})"
        ));
        ExitStatus::Success
    } else {
        report = report.note(format!(
            "{} cell(s) differ from the expected pattern ({trials} trials, seed {seed})",
            mismatches.len()
        ));
        ExitStatus::Mismatch
    };
    Ok(Output::new(report, status))
}

fn names(ids: &[wasa::axioms::AxiomId]) -> String {
    if ids.is_empty() {
        return "-".into();
    }
    ids.iter().map(|a| a.name()).collect::<Vec<_>>().join(" ")
}

fn fixtures_report(
    target: &AxiomTarget,
    trials: usize,
    seed: u64,
    n_max: usize,
) -> Result<Output, CliError> {
    let mut reports = fixture_reports(trials, seed, n_max)?;
    reports.retain(|r| match target.half() {
        None => true,
        Some(t) => r.targets.iter().all(|a| a.target() == t),
    });
    let mut s = Section::new(["fixture", "target", "target fails", "also fails", "verdict"]);
    let mut bad = 0;
    for r in &reports {
        let verdict = if r.isolated() {
            "isolated"
        } else if r.advisory {
            "advisory"
        } else {
            bad += 1;
            "not isolated"
        };
        s.push(vec![
            Cell::text(r.fixture),
            Cell::text(names(&r.targets)),
            Cell::text(if r.target_failed { "yes" } else { "no" }),
            Cell::text(names(&r.collateral)),
            Cell::text(verdict),
        ]);
    }
    let json = serde_json::to_value(&reports).expect("finite reports");
    let mut report = Report::new(json).section(s);
    let status = if bad == 0 {
        ExitStatus::Success
    } else {
        report = report.note(format!("{bad} fixture(s) fail more than their target"));
        ExitStatus::Mismatch
    };
    Ok(Output::new(report, status))
}

fn entailments_report(
    target: &AxiomTarget,
    trials: usize,
    seed: u64,
    n_max: usize,
    delta: f64,
) -> Result<Output, CliError> {
    let mut checks = entailment_checks(trials, seed, n_max, delta)?;
    checks.retain(|c| {
        let t = c.premises[0].target();
        target.admits(&c.subject, t) || matches!(target, AxiomTarget::Half(h) if *h == t)
    });
    let mut s = Section::new([
        "function",
        "premises",
        "conclusions",
        "premises hold",
        "conclusions hold",
    ]);
    for c in &checks {
        s.push(vec![
            Cell::text(&c.subject),
            Cell::text(names(&c.premises)),
            Cell::text(names(&c.conclusions)),
            Cell::text(mark(c.premises_hold)),
            Cell::text(mark(c.conclusions_hold)),
        ]);
    }
    let failed = checks.iter().filter(|c| !c.holds()).count();
    let json = json!({
        "checks": checks,
        "failed": failed,
    });
    let mut report = Report::new(json).section(s);
    let status = if failed == 0 {
        report = report.note("every entailment holds");
        ExitStatus::Success
    } else {
        report = report.note(format!("{failed} entailment(s) violated"));
        ExitStatus::Mismatch
    };
    Ok(Output::new(report, status))
}

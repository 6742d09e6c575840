// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! End-to-end checks on evaluated degrees rather than on α and ι alone.

use rand::Rng;
use serde::Serialize;

use crate::aggregators::Polarity;
use crate::engine::{iterate, IterationConfig, Semantics};
use crate::graph::{Wasa, WasaParts};
use crate::random::{random_wasa, trial_rng, GraphSpec};

/// Degrees are compared at this absolute tolerance.
const DEGREE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemanticsCheck {
    /// Unparented arguments keep their weight.
    Stability,
    /// A copy of an argument, with the same weight and parents, gets the
    /// same degree.
    Equivalence,
    /// A new edge into `b` leaves `x` alone when `b` does not reach `x`.
    Directionality,
    /// Evaluating a disjoint union gives the two evaluations side by side.
    Independence,
}

impl SemanticsCheck {
    pub const ALL: [SemanticsCheck; 4] = [
        SemanticsCheck::Stability,
        SemanticsCheck::Equivalence,
        SemanticsCheck::Directionality,
        SemanticsCheck::Independence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemanticsCheck::Stability => "stability",
            SemanticsCheck::Equivalence => "equivalence",
            SemanticsCheck::Directionality => "directionality",
            SemanticsCheck::Independence => "independence",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SemanticsFailure {
    pub trial: u64,
    pub graph: WasaParts,
    pub argument: usize,
    pub expected: f64,
    pub actual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SemanticsVerdict {
    pub check: SemanticsCheck,
    pub semantics: String,
    pub trials: usize,
    pub checked: usize,
    /// Trials dropped because some evaluation did not converge.
    pub skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<SemanticsFailure>,
}

impl SemanticsVerdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn evaluate(wasa: &Wasa, sem: &Semantics, cfg: &IterationConfig) -> Option<Vec<f64>> {
    iterate(wasa, sem, cfg)
        .ok()
        .and_then(|o| o.degrees().map(<[f64]>::to_vec))
}

fn sign_for(polarity: Polarity, rng: &mut impl Rng) -> i8 {
    match polarity {
        Polarity::SupportsOnly => 1,
        Polarity::AttacksOnly => -1,
        Polarity::Any => {
            if rng.random_bool(0.5) {
                1
            } else {
                -1
            }
        }
    }
}

enum Trial {
    Checked(Option<(usize, f64, f64)>, WasaParts),
    Skipped,
}

fn first_mismatch(pairs: impl IntoIterator<Item = (usize, f64, f64)>) -> Option<(usize, f64, f64)> {
    pairs
        .into_iter()
        .find(|&(_, e, a)| !((e - a).abs() <= DEGREE_TOL))
}

fn run_trial(
    check: SemanticsCheck,
    wasa: &Wasa,
    sem: &Semantics,
    cfg: &IterationConfig,
    rng: &mut impl Rng,
    spec: &GraphSpec,
) -> Trial {
    let Some(d) = evaluate(wasa, sem, cfg) else {
        return Trial::Skipped;
    };
    let n = wasa.len();
    let g = wasa.matrix();
    let w = wasa.weights();
    match check {
        SemanticsCheck::Stability => {
            let bad = first_mismatch(
                (0..n)
                    .filter(|&i| g.row_norm(i) == 0)
                    .map(|i| (i, w[i], d[i])),
            );
            Trial::Checked(bad, wasa.to_parts())
        }
        SemanticsCheck::Equivalence => {
            let x = rng.random_range(0..n);
            let mut parts = wasa.to_parts();
            for row in parts.g.iter_mut() {
                row.push(0);
            }
            let mut copy = parts.g[x].clone();
            copy[n] = 0;
            parts.g.push(copy);
            parts.w.push(w[x]);
            parts.labels.push(format!("{}'", parts.labels[x]));
            let Ok(bigger) = Wasa::from_parts(parts.clone()) else {
                return Trial::Skipped;
            };
            let Some(e) = evaluate(&bigger, sem, cfg) else {
                return Trial::Skipped;
            };
            Trial::Checked(first_mismatch([(n, e[x], e[n])]), parts)
        }
        SemanticsCheck::Directionality => {
            let x = rng.random_range(0..n);
            // (b, a) pairs where an edge a→b keeps the graph acyclic and b
            // cannot reach x.
            let candidates: Vec<(usize, usize)> = (0..n)
                .filter(|&b| b != x && !g.reaches(b, x))
                .flat_map(|b| (0..n).map(move |a| (b, a)))
                .filter(|&(b, a)| a != b && g.get(b, a) == 0 && !g.reaches(b, a))
                .collect();
            if candidates.is_empty() {
                return Trial::Checked(None, wasa.to_parts());
            }
            let (b, a) = candidates[rng.random_range(0..candidates.len())];
            let mut parts = wasa.to_parts();
            parts.g[b][a] = sign_for(spec.polarity, rng);
            let Ok(changed) = Wasa::from_parts(parts.clone()) else {
                return Trial::Skipped;
            };
            let Some(e) = evaluate(&changed, sem, cfg) else {
                return Trial::Skipped;
            };
            Trial::Checked(first_mismatch([(x, d[x], e[x])]), parts)
        }
        SemanticsCheck::Independence => {
            let Ok(other) = random_wasa(rng, spec) else {
                return Trial::Skipped;
            };
            let (Ok(union), Some(d2)) = (wasa.disjoint_union(&other), evaluate(&other, sem, cfg))
            else {
                return Trial::Skipped;
            };
            let Some(e) = evaluate(&union, sem, cfg) else {
                return Trial::Skipped;
            };
            let side_by_side = d.iter().chain(&d2).copied();
            let bad = first_mismatch(
                side_by_side
                    .zip(e.iter().copied())
                    .enumerate()
                    .map(|(i, (a, b))| (i, a, b)),
            );
            Trial::Checked(bad, union.to_parts())
        }
    }
}

/// Runs every [`SemanticsCheck`] on graphs drawn from `spec`. The family
/// should be one `sem` converges on; trials that do not converge are
/// counted as skipped rather than failed.
pub fn check_semantics_level(
    spec: &GraphSpec,
    sem: &Semantics,
    trials: usize,
    seed: u64,
) -> Vec<SemanticsVerdict> {
    let cfg = IterationConfig::default().with_tolerance(1e-12);
    SemanticsCheck::ALL
        .iter()
        .enumerate()
        .map(|(k, &check)| {
            let mut verdict = SemanticsVerdict {
                check,
                semantics: sem.label(),
                trials,
                checked: 0,
                skipped: 0,
                failure: None,
            };
            for t in 0..trials as u64 {
                let mut rng = trial_rng(seed ^ ((k as u64 + 1) << 48), t);
                let Ok(wasa) = random_wasa(&mut rng, spec) else {
                    verdict.skipped += 1;
                    continue;
                };
                match run_trial(check, &wasa, sem, &cfg, &mut rng, spec) {
                    Trial::Skipped => verdict.skipped += 1,
                    Trial::Checked(None, _) => verdict.checked += 1,
                    Trial::Checked(Some((argument, expected, actual)), graph) => {
                        verdict.checked += 1;
                        verdict.failure = Some(SemanticsFailure {
                            trial: t,
                            graph,
                            argument,
                            expected,
                            actual,
                        });
                        break;
                    }
                }
            }
            verdict
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggregators::Aggregator;
    use crate::influences::Influence;

    #[test]
    fn modular_semantics_pass_on_acyclic_graphs() {
        let spec = GraphSpec::default().acyclic().with_size(1, 6);
        for (agg, inf) in [
            (Aggregator::Sum, Influence::Euler),
            (Aggregator::Top, Influence::Linear { delta: 2.0 }),
            (Aggregator::Sum, Influence::Multilinear),
        ] {
            let sem = Semantics::new(agg, inf).unwrap();
            let spec = spec.clone().with_weights(0.0, 1.0, inf.value_domain());
            for v in check_semantics_level(&spec, &sem, 100, 7) {
                assert!(v.passed(), "{} {:?}", sem.label(), v);
                assert!(v.checked > 0);
            }
        }
    }

    #[test]
    fn unattacked_arguments_keep_their_weight() {
        let wasa = crate::graph::builtin("ex1").unwrap();
        let sem = Semantics::new(Aggregator::Sum, Influence::Linear { delta: 3.0 }).unwrap();
        let cfg = IterationConfig::default().with_tolerance(1e-13);
        let d = evaluate(&wasa, &sem, &cfg).unwrap();
        assert!(d[0].abs() < 1e-12 && (d[1] - 1.0).abs() < 1e-12);
        // a zero-degree attacker has no effect
        assert!((d[2] - 0.4).abs() < 1e-12);
    }
}

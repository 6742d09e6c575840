// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::Serialize;

use super::semantics::Semantics;
use crate::aggregators::Aggregator;
use crate::graph::Wasa;
use crate::influences::Influence;

/// The convergence result a guaranteed verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Acyclic graphs stabilise after at most `n` steps.
    Acyclic,
    /// Sum aggregation with `m · indegree < 1`.
    SumContraction,
    /// Sum with Euler influence, `indegree < 4/(1 − min w²)` on the
    /// arguments of nonzero weight.
    EulerIndegree,
    /// Sum with the quadratic-energy influence and `indegree ≤ 1`.
    QuadraticIndegree,
    /// Sum with `linear(δ)` and `indegree < δ`.
    DirectDamping,
    /// σ-sum with `sigmoid(δ)` and `indegree < δ`.
    SigmoidDirectDamping,
    /// Top aggregation with `2m < 1`.
    TopContraction,
    /// Top with Euler influence: `2 · 1/4 < 1` always.
    MaxEuler,
    /// Top with `linear(δ)` and `δ > 2`.
    DampedMax,
    /// σ-top with `sigmoid(δ)` and `δ > 2`.
    SigmoidDampedMax,
}

impl Certificate {
    pub fn id(self) -> &'static str {
        match self {
            Certificate::Acyclic => "acyclic",
            Certificate::SumContraction => "sum-contraction",
            Certificate::EulerIndegree => "euler-indegree",
            Certificate::QuadraticIndegree => "quadratic-indegree",
            Certificate::DirectDamping => "direct-damping",
            Certificate::SigmoidDirectDamping => "sigmoid-direct-damping",
            Certificate::TopContraction => "top-contraction",
            Certificate::MaxEuler => "max-euler",
            Certificate::DampedMax => "damped-max",
            Certificate::SigmoidDampedMax => "sigmoid-damped-max",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Guaranteed {
        certificate: Certificate,
        details: String,
    },
    NoGuarantee {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GuaranteeReport {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub indegree: usize,
    /// Derivative supremum of ι over the weight range, where defined.
    pub m: Option<f64>,
    pub delta: Option<f64>,
}

impl GuaranteeReport {
    pub fn is_guaranteed(&self) -> bool {
        matches!(self.verdict, Verdict::Guaranteed { .. })
    }

    pub fn certificate(&self) -> Option<Certificate> {
        match self.verdict {
            Verdict::Guaranteed { certificate, .. } => Some(certificate),
            Verdict::NoGuarantee { .. } => None,
        }
    }
}

fn yes(certificate: Certificate, details: String) -> Verdict {
    Verdict::Guaranteed {
        certificate,
        details,
    }
}

fn no(reason: impl Into<String>) -> Verdict {
    Verdict::NoGuarantee {
        reason: reason.into(),
    }
}

/// Indegree and least weight once zero-weight arguments are dropped. Under
/// Euler influence those stay at 0 forever and so contribute nothing.
fn euler_reduced(wasa: &Wasa) -> (usize, Option<f64>) {
    let w = wasa.weights();
    let live: Vec<usize> = (0..wasa.len()).filter(|&i| w[i] != 0.0).collect();
    let g = wasa.matrix();
    let indegree = live
        .iter()
        .map(|&i| live.iter().filter(|&&j| g.get(i, j) != 0).count())
        .max()
        .unwrap_or(0);
    let w_min = live.iter().map(|&i| w[i]).reduce(f64::min);
    (indegree, w_min)
}

/// Checks the premises of the convergence certificates that apply to `sem` and
/// reports the first one that holds exactly.
pub fn guarantee(wasa: &Wasa, sem: &Semantics) -> GuaranteeReport {
    let indegree = wasa.indegree();
    let delta = sem.influence.delta();
    let w = wasa.weights();
    let m = match (
        w.iter().copied().reduce(f64::min),
        w.iter().copied().reduce(f64::max),
    ) {
        (Some(lo), Some(hi)) => sem.influence.derivative_sup(lo, hi).ok(),
        _ => None,
    };
    let report = |verdict| GuaranteeReport {
        verdict,
        indegree,
        m,
        delta,
    };

    if let Err(e) = sem.check_inputs(wasa) {
        return report(no(format!("inputs rejected: {e}")));
    }
    if let Some(len) = wasa.matrix().longest_path() {
        return report(yes(
            Certificate::Acyclic,
            format!("acyclic, longest path {len}"),
        ));
    }

    let verdict = match (sem.aggregator, sem.influence) {
        (Aggregator::Sum | Aggregator::SumPos, Influence::Euler) => {
            let (k, w_min) = euler_reduced(wasa);
            let w_min = w_min.unwrap_or(1.0);
            // k < 4/(1 − w²); at k ≤ 4 this holds for every nonzero weight
            let holds = k <= 4 || w_min * w_min > 1.0 - 4.0 / k as f64;
            let details = format!("indegree {k} without zero-weight arguments, min weight {w_min}");
            if holds {
                yes(Certificate::EulerIndegree, details)
            } else {
                no(format!("{details}: need indegree < 4/(1 − w²)"))
            }
        }
        (Aggregator::Sum | Aggregator::SumPos, Influence::Linear { delta }) => {
            if (indegree as f64) < delta {
                yes(
                    Certificate::DirectDamping,
                    format!("indegree {indegree} < δ = {delta}"),
                )
            } else {
                no(format!("indegree {indegree} ≥ δ = {delta}"))
            }
        }
        (Aggregator::Sum, Influence::Qmax) => {
            if indegree <= 1 {
                yes(
                    Certificate::QuadraticIndegree,
                    format!("indegree {indegree} ≤ 1"),
                )
            } else {
                no(format!("indegree {indegree} > 1"))
            }
        }
        (Aggregator::Sum | Aggregator::SumPos, _) => match m {
            Some(m) if m * (indegree as f64) < 1.0 => yes(
                Certificate::SumContraction,
                format!("m·indegree = {m}·{indegree} < 1"),
            ),
            Some(m) => no(format!("m·indegree = {m}·{indegree} ≥ 1")),
            None => no("derivative bound unavailable"),
        },
        (Aggregator::SumSigma, Influence::Sigmoid { delta }) => {
            if (indegree as f64) < delta {
                yes(
                    Certificate::SigmoidDirectDamping,
                    format!("indegree {indegree} < δ = {delta}"),
                )
            } else {
                no(format!("indegree {indegree} ≥ δ = {delta}"))
            }
        }
        (Aggregator::Top, Influence::Euler) => {
            yes(Certificate::MaxEuler, "2 · 1/4 < 1".to_string())
        }
        (Aggregator::Top, Influence::Linear { delta }) => {
            if delta > 2.0 {
                yes(Certificate::DampedMax, format!("δ = {delta} > 2"))
            } else {
                no(format!("δ = {delta} ≤ 2"))
            }
        }
        (Aggregator::Top, _) => match m {
            Some(m) if 2.0 * m < 1.0 => {
                yes(Certificate::TopContraction, format!("2m = {} < 1", 2.0 * m))
            }
            Some(m) => no(format!("2m = {} ≥ 1", 2.0 * m)),
            None => no("derivative bound unavailable"),
        },
        (Aggregator::TopSigma, Influence::Sigmoid { delta }) => {
            if delta > 2.0 {
                yes(Certificate::SigmoidDampedMax, format!("δ = {delta} > 2"))
            } else {
                no(format!("δ = {delta} ≤ 2"))
            }
        }
        (agg, inf) => no(format!("no convergence result covers {agg} with {inf}")),
    };
    report(verdict)
}

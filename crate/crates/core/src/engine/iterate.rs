// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::VecDeque;

use serde::Serialize;

use super::semantics::Semantics;
use crate::error::EngineError;
use crate::graph::Wasa;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CycleDetection {
    pub max_period: usize,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IterationConfig {
    /// Stop once the max-norm step falls below this.
    pub tolerance: f64,
    pub max_iterations: usize,
    pub cycle_detection: Option<CycleDetection>,
    pub record_trace: bool,
}

impl Default for IterationConfig {
    fn default() -> Self {
        IterationConfig {
            tolerance: 1e-9,
            max_iterations: 10_000,
            cycle_detection: Some(CycleDetection {
                max_period: 64,
                tolerance: 1e-7,
            }),
            record_trace: false,
        }
    }
}

impl IterationConfig {
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_trace(mut self) -> Self {
        self.record_trace = true;
        self
    }

    pub fn without_cycle_detection(mut self) -> Self {
        self.cycle_detection = None;
        self
    }

    fn validate(&self) -> Result<(), EngineError> {
        if !(self.tolerance > 0.0) {
            return Err(EngineError::Parameter(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(EngineError::Parameter(
                "max_iterations must be at least 1".into(),
            ));
        }
        if let Some(c) = self.cycle_detection {
            if c.max_period < 2 || !(c.tolerance > 0.0) {
                return Err(EngineError::Parameter(
                    "cycle detection needs a period cap of at least 2 and a positive tolerance"
                        .into(),
                ));
            }
        }
        Ok(())
    }
}

/// A reported cycle must move by at least this many cycle tolerances per
/// step, which keeps alternating contractions from passing as cycles.
const CYCLE_STEP_FACTOR: f64 = 100.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    Converged {
        degrees: Vec<f64>,
        iterations: usize,
        /// `‖D − ι(α(G,D),w)‖∞`
        residual: f64,
    },
    Oscillating {
        period: usize,
        cycle: Vec<Vec<f64>>,
        detected_at: usize,
    },
    BudgetExhausted {
        last: Vec<f64>,
        /// Size of the final step.
        residual: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationOutcome {
    #[serde(flatten)]
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Vec<f64>>>,
}

impl IterationOutcome {
    pub fn is_converged(&self) -> bool {
        matches!(self.status, Status::Converged { .. })
    }

    pub fn degrees(&self) -> Option<&[f64]> {
        match &self.status {
            Status::Converged { degrees, .. } => Some(degrees),
            _ => None,
        }
    }
}

pub fn max_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Runs `f⁰ = w`, `fⁱ⁺¹ = ι(α(G, fⁱ), w)` until the step is below the
/// tolerance, a cycle of period `2..=P` shows up, or the budget runs out.
pub fn iterate(
    wasa: &Wasa,
    sem: &Semantics,
    cfg: &IterationConfig,
) -> Result<IterationOutcome, EngineError> {
    cfg.validate()?;
    sem.check_inputs(wasa)?;
    let g = wasa.matrix();
    let w = wasa.weights();
    let window = cfg.cycle_detection.map_or(1, |c| c.max_period);
    // most recent first: history[0] = fⁱ⁻¹
    let mut history: VecDeque<Vec<f64>> = VecDeque::with_capacity(window + 1);
    let mut trace = cfg.record_trace.then(|| vec![w.to_vec()]);
    let mut f = w.to_vec();
    let mut step = f64::INFINITY;

    for i in 1..=cfg.max_iterations {
        let next = sem.step(g, &f, w, i)?;
        if let Some(t) = trace.as_mut() {
            t.push(next.clone());
        }
        step = max_distance(&next, &f);
        if step < cfg.tolerance {
            let residual = max_distance(&next, &sem.step(g, &next, w, i + 1)?);
            return Ok(IterationOutcome {
                status: Status::Converged {
                    degrees: next,
                    iterations: i,
                    residual,
                },
                trace,
            });
        }
        history.push_front(f);
        history.truncate(window);
        if let Some(c) = cfg.cycle_detection {
            if let Some(cycle) = find_cycle(&next, &history, c) {
                return Ok(IterationOutcome {
                    status: Status::Oscillating {
                        period: cycle.len(),
                        cycle,
                        detected_at: i,
                    },
                    trace,
                });
            }
        }
        f = next;
    }
    Ok(IterationOutcome {
        status: Status::BudgetExhausted {
            last: f,
            residual: step,
        },
        trace,
    })
}

/// `history[k]` is `fⁱ⁻¹⁻ᵏ`. Returns `fⁱ⁻ᵖ, …, fⁱ⁻¹` for the smallest `p`
/// with `‖fⁱ − fⁱ⁻ᵖ‖ < tol`, if that `p` is at least 2 and the cycle is
/// non-degenerate.
fn find_cycle(
    current: &[f64],
    history: &VecDeque<Vec<f64>>,
    c: CycleDetection,
) -> Option<Vec<Vec<f64>>> {
    let p = 1 + history
        .iter()
        .position(|h| max_distance(current, h) < c.tolerance)?;
    if p < 2 {
        return None;
    }
    let cycle: Vec<Vec<f64>> = history.iter().take(p).rev().cloned().collect();
    let min_step = c.tolerance * CYCLE_STEP_FACTOR;
    for k in 0..p {
        if max_distance(&cycle[k], &cycle[(k + 1) % p]) < min_step {
            return None;
        }
        for l in k + 1..p {
            if max_distance(&cycle[k], &cycle[l]) < c.tolerance {
                return None;
            }
        }
    }
    Some(cycle)
}

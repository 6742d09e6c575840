// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::functions::{AlphaFn, IotaFn};
use super::generate::{alpha_instances, iota_instances};
use super::instances::{Instance, Outcome, Violation};
use super::stored::{stored_alpha, stored_iota};
use super::{AxiomId, Target};
use crate::error::AxiomError;
use crate::random::trial_rng;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub instance: Instance,
    pub violation: Violation,
    /// Taken from the list of known counterexamples rather than found by
    /// the random search.
    pub stored: bool,
    pub unrestricted: bool,
}

impl Counterexample {
    /// Whether the instance still violates the axiom for `f`.
    pub fn recheck_alpha(&self, f: &AlphaFn) -> bool {
        match &self.instance {
            Instance::Alpha(i) => i.evaluate(f, self.unrestricted).is_violated(),
            Instance::Iota(_) => false,
        }
    }

    pub fn recheck_iota(&self, f: &IotaFn) -> bool {
        match &self.instance {
            Instance::Iota(i) => i.evaluate(f).is_violated(),
            Instance::Alpha(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum AxiomResult {
    Pass,
    Fail { counterexample: Box<Counterexample> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    pub subject: String,
    pub trials: usize,
    /// Instances whose premise held and whose conclusion was checked.
    pub checked: usize,
    pub vacuous: usize,
    /// Instances the function refused, e.g. outside its sign range.
    pub rejected: usize,
    #[serde(flatten)]
    pub result: AxiomResult,
}

impl AxiomVerdict {
    pub fn passed(&self) -> bool {
        matches!(self.result, AxiomResult::Pass)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.result {
            AxiomResult::Pass => None,
            AxiomResult::Fail { counterexample } => Some(counterexample),
        }
    }
}

struct Tally {
    checked: usize,
    vacuous: usize,
    rejected: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            vacuous: 0,
            rejected: 0,
        }
    }

    /// Records an outcome; returns the violation if there is one.
    fn record(&mut self, out: Outcome) -> Option<Violation> {
        match out {
            Outcome::Holds => self.checked += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Inapplicable { .. } => self.rejected += 1,
            Outcome::Violated(v) => {
                self.checked += 1;
                return Some(v);
            }
        }
        None
    }

    fn verdict(
        self,
        axiom: AxiomId,
        subject: String,
        trials: usize,
        result: AxiomResult,
    ) -> AxiomVerdict {
        AxiomVerdict {
            axiom,
            subject,
            trials,
            checked: self.checked,
            vacuous: self.vacuous,
            rejected: self.rejected,
            result,
        }
    }
}

fn expect_target(axiom: AxiomId, requested: Target) -> Result<(), AxiomError> {
    if axiom.target() == requested {
        Ok(())
    } else {
        Err(AxiomError::TargetMismatch {
            axiom: axiom.name(),
            target: axiom.target().as_str(),
            requested: requested.as_str(),
        })
    }
}

fn fail(instance: Instance, violation: Violation, stored: bool, unrestricted: bool) -> AxiomResult {
    AxiomResult::Fail {
        counterexample: Box::new(Counterexample {
            instance,
            violation,
            stored,
            unrestricted,
        }),
    }
}

/// Runs `trials` seeded random instances of an α-characteristic, then the
/// known counterexamples for the cell.
pub fn check_alpha(
    axiom: AxiomId,
    f: &AlphaFn,
    trials: usize,
    seed: u64,
    n_max: usize,
) -> Result<AxiomVerdict, AxiomError> {
    expect_target(axiom, Target::Alpha)?;
    if n_max == 0 {
        return Err(AxiomError::Parameter("n_max must be at least 1".into()));
    }
    let mut tally = Tally::new();
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        for inst in alpha_instances(axiom, f, &mut rng, n_max) {
            if let Some(v) = tally.record(inst.evaluate(f, false)) {
                let result = fail(Instance::Alpha(inst), v, false, false);
                return Ok(tally.verdict(axiom, f.name().into(), trials, result));
            }
        }
    }
    for s in stored_alpha(f, axiom) {
        if let Outcome::Violated(v) = s.instance.evaluate(f, s.unrestricted) {
            let result = fail(Instance::Alpha(s.instance), v, true, s.unrestricted);
            return Ok(tally.verdict(axiom, f.name().into(), trials, result));
        }
    }
    Ok(tally.verdict(axiom, f.name().into(), trials, AxiomResult::Pass))
}

/// Runs `trials` seeded random instances of an ι-characteristic, then the
/// known counterexamples for the cell.
pub fn check_iota(
    axiom: AxiomId,
    f: &IotaFn,
    trials: usize,
    seed: u64,
) -> Result<AxiomVerdict, AxiomError> {
    expect_target(axiom, Target::Iota)?;
    let mut tally = Tally::new();
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        for inst in iota_instances(axiom, f, &mut rng) {
            if let Some(v) = tally.record(inst.evaluate(f)) {
                let result = fail(Instance::Iota(inst), v, false, false);
                return Ok(tally.verdict(axiom, f.name(), trials, result));
            }
        }
    }
    for inst in stored_iota(f, axiom) {
        if let Outcome::Violated(v) = inst.evaluate(f) {
            let result = fail(Instance::Iota(inst), v, true, false);
            return Ok(tally.verdict(axiom, f.name(), trials, result));
        }
    }
    Ok(tally.verdict(axiom, f.name(), trials, AxiomResult::Pass))
}

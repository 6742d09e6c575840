// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Batteries built from the single-axiom checkers: the characteristics
//! matrix, the independence fixtures and the entailment checks.

use serde::Serialize;

use super::check::{check_alpha, check_iota, AxiomVerdict};
use super::functions::{AlphaFixture, AlphaFn, IotaFixture, IotaFn};
use super::stored::{stored_alpha, stored_iota};
use super::{AxiomId, Target};
use crate::aggregators::Aggregator;
use crate::error::AxiomError;
use crate::influences::Influence;

pub const ALPHA_COLUMNS: [AxiomId; 6] = [
    AxiomId::ContinuityAlpha,
    AxiomId::Neutrality,
    AxiomId::Directionality,
    AxiomId::Franklin,
    AxiomId::Counting,
    AxiomId::Symmetry,
];

pub const IOTA_COLUMNS: [AxiomId; 4] = [
    AxiomId::Compactness,
    AxiomId::Resilience,
    AxiomId::StickinessMin,
    AxiomId::StickinessMax,
];

pub const ESSENTIAL_ALPHA: [AxiomId; 9] = [
    AxiomId::Anonymity2,
    AxiomId::Independence,
    AxiomId::ReinforcementAlpha,
    AxiomId::ParentMonotonicityAlpha,
    AxiomId::StabilityAlpha,
    AxiomId::ContinuityAlpha,
    AxiomId::Neutrality,
    AxiomId::StrengtheningAlpha,
    AxiomId::WeakeningAlpha,
];

pub const ESSENTIAL_IOTA: [AxiomId; 4] = [
    AxiomId::ReinforcementIota,
    AxiomId::InitialMonotonicity,
    AxiomId::StabilityIota,
    AxiomId::ContinuityIota,
];

/// Expected pattern for the α columns, in [`ALPHA_COLUMNS`] order.
pub fn expected_alpha(agg: Aggregator) -> [bool; 6] {
    match agg {
        Aggregator::Reward | Aggregator::Card => [true, true, true, true, false, false],
        Aggregator::Sum | Aggregator::SumSigma => [true; 6],
        Aggregator::SumPos => [true, true, true, true, true, false],
        Aggregator::Top | Aggregator::TopSigma => [true, true, true, false, false, false],
    }
}

/// Expected pattern for the ι columns, in [`IOTA_COLUMNS`] order.
pub fn expected_iota(inf: Influence) -> [bool; 4] {
    match inf {
        Influence::Multilinear => [true, false, false, true],
        Influence::PositiveFractional => [true, true, false, true],
        Influence::NegativeFractional | Influence::CombinedFractional | Influence::Qmax => {
            [true, true, false, false]
        }
        Influence::Euler => [false, true, true, false],
        Influence::Linear { .. } | Influence::Sigmoid { .. } => [false, true, false, false],
    }
}

/// The eight shipped influences, with `delta` for the damped ones.
pub fn shipped_influences(delta: f64) -> Vec<Influence> {
    vec![
        Influence::Multilinear,
        Influence::PositiveFractional,
        Influence::NegativeFractional,
        Influence::CombinedFractional,
        Influence::Euler,
        Influence::Linear { delta },
        Influence::Sigmoid { delta },
        Influence::Qmax,
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixCell {
    pub axiom: AxiomId,
    pub expected: bool,
    pub observed: bool,
    /// For cells expected to fail: whether a known counterexample exists
    /// and still violates the axiom.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stored_confirms: Option<bool>,
    pub verdict: AxiomVerdict,
}

impl MatrixCell {
    pub fn matches(&self) -> bool {
        self.expected == self.observed && self.stored_confirms != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixRow {
    pub subject: String,
    pub target: Target,
    pub cells: Vec<MatrixCell>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomMatrix {
    pub trials: usize,
    pub seed: u64,
    pub n_max: usize,
    pub rows: Vec<MatrixRow>,
}

impl AxiomMatrix {
    pub fn mismatches(&self) -> Vec<(&str, &MatrixCell)> {
        self.rows
            .iter()
            .flat_map(|r| r.cells.iter().map(move |c| (r.subject.as_str(), c)))
            .filter(|(_, c)| !c.matches())
            .collect()
    }

    pub fn all_match(&self) -> bool {
        self.mismatches().is_empty()
    }
}

/// Runs the optional characteristic columns for every shipped function.
/// `target` restricts the run to one half; `None` runs both.
pub fn axiom_matrix(
    target: Option<Target>,
    trials: usize,
    seed: u64,
    n_max: usize,
    delta: f64,
) -> Result<AxiomMatrix, AxiomError> {
    let mut rows = Vec::new();
    if target != Some(Target::Iota) {
        for agg in Aggregator::ALL {
            let f = AlphaFn::Shipped(agg);
            let mut cells = Vec::new();
            for (axiom, expected) in ALPHA_COLUMNS.into_iter().zip(expected_alpha(agg)) {
                let verdict = check_alpha(axiom, &f, trials, seed, n_max)?;
                let stored_confirms = (!expected).then(|| {
                    stored_alpha(&f, axiom)
                        .iter()
                        .any(|s| s.instance.evaluate(&f, s.unrestricted).is_violated())
                });
                cells.push(MatrixCell {
                    axiom,
                    expected,
                    observed: verdict.passed(),
                    stored_confirms,
                    verdict,
                });
            }
            rows.push(MatrixRow {
                subject: agg.name().to_string(),
                target: Target::Alpha,
                cells,
            });
        }
    }
    if target != Some(Target::Alpha) {
        for inf in shipped_influences(delta) {
            let f = IotaFn::Shipped(inf);
            let mut cells = Vec::new();
            for (axiom, expected) in IOTA_COLUMNS.into_iter().zip(expected_iota(inf)) {
                let verdict = check_iota(axiom, &f, trials, seed)?;
                let stored_confirms = (!expected).then(|| {
                    stored_iota(&f, axiom)
                        .iter()
                        .any(|s| s.evaluate(&f).is_violated())
                });
                cells.push(MatrixCell {
                    axiom,
                    expected,
                    observed: verdict.passed(),
                    stored_confirms,
                    verdict,
                });
            }
            rows.push(MatrixRow {
                subject: inf.to_string(),
                target: Target::Iota,
                cells,
            });
        }
    }
    Ok(AxiomMatrix {
        trials,
        seed,
        n_max,
        rows,
    })
}

/// A deliberately broken α or ι.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Fixture {
    Alpha(AlphaFixture),
    Iota(IotaFixture),
}

impl Fixture {
    pub fn all() -> Vec<Fixture> {
        AlphaFixture::ALL
            .into_iter()
            .map(Fixture::Alpha)
            .chain(IotaFixture::ALL.into_iter().map(Fixture::Iota))
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Alpha(f) => f.name(),
            Fixture::Iota(f) => f.name(),
        }
    }

    /// The essential axioms the fixture is built to break. Strengthening and
    /// weakening share one fixture, which only has to break one of them.
    pub fn targets(self) -> Vec<AxiomId> {
        match self {
            Fixture::Alpha(f) => match f {
                AlphaFixture::Anonymity => vec![AxiomId::Anonymity2],
                AlphaFixture::Independence => vec![AxiomId::Independence],
                AlphaFixture::Reinforcement => vec![AxiomId::ReinforcementAlpha],
                AlphaFixture::ParentMonotonicity => vec![AxiomId::ParentMonotonicityAlpha],
                AlphaFixture::Stability => vec![AxiomId::StabilityAlpha],
                AlphaFixture::Continuity => vec![AxiomId::ContinuityAlpha],
                AlphaFixture::Neutrality => vec![AxiomId::Neutrality],
                AlphaFixture::StrengtheningWeakening => {
                    vec![AxiomId::StrengtheningAlpha, AxiomId::WeakeningAlpha]
                }
            },
            Fixture::Iota(f) => match f {
                IotaFixture::Constant => vec![AxiomId::ReinforcementIota],
                IotaFixture::WeightScaled => vec![AxiomId::InitialMonotonicity],
                IotaFixture::Shifted => vec![AxiomId::StabilityIota],
                IotaFixture::Jump => vec![AxiomId::ContinuityIota],
            },
        }
    }

    /// The anonymity fixture is reported but not counted: its selector is
    /// itself permutation invariant.
    pub fn advisory(self) -> bool {
        self == Fixture::Alpha(AlphaFixture::Anonymity)
    }

    fn essential_suite(self) -> &'static [AxiomId] {
        match self {
            Fixture::Alpha(_) => &ESSENTIAL_ALPHA,
            Fixture::Iota(_) => &ESSENTIAL_IOTA,
        }
    }

    pub fn check(
        self,
        axiom: AxiomId,
        trials: usize,
        seed: u64,
        n_max: usize,
    ) -> Result<AxiomVerdict, AxiomError> {
        match self {
            Fixture::Alpha(f) => check_alpha(axiom, &AlphaFn::Fixture(f), trials, seed, n_max),
            Fixture::Iota(f) => check_iota(axiom, &IotaFn::Fixture(f), trials, seed),
        }
    }
}

pub fn independence_fixture(axiom: AxiomId) -> Result<Fixture, AxiomError> {
    Fixture::all()
        .into_iter()
        .find(|f| f.targets().contains(&axiom))
        .ok_or(AxiomError::NoFixture(axiom.name()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureReport {
    pub fixture: &'static str,
    pub targets: Vec<AxiomId>,
    pub advisory: bool,
    pub target_failed: bool,
    /// Essential axioms outside the target that also fail.
    pub collateral: Vec<AxiomId>,
    pub verdicts: Vec<AxiomVerdict>,
}

impl FixtureReport {
    /// Fails its target and nothing else.
    pub fn isolated(&self) -> bool {
        self.target_failed && self.collateral.is_empty()
    }
}

pub fn fixture_report(
    fixture: Fixture,
    trials: usize,
    seed: u64,
    n_max: usize,
) -> Result<FixtureReport, AxiomError> {
    let targets = fixture.targets();
    let mut verdicts = Vec::new();
    for &axiom in fixture.essential_suite() {
        verdicts.push(fixture.check(axiom, trials, seed, n_max)?);
    }
    let target_failed = verdicts
        .iter()
        .any(|v| targets.contains(&v.axiom) && !v.passed());
    let collateral = verdicts
        .iter()
        .filter(|v| !targets.contains(&v.axiom) && !v.passed())
        .map(|v| v.axiom)
        .collect();
    Ok(FixtureReport {
        fixture: fixture.name(),
        targets,
        advisory: fixture.advisory(),
        target_failed,
        collateral,
        verdicts,
    })
}

pub fn fixture_reports(
    trials: usize,
    seed: u64,
    n_max: usize,
) -> Result<Vec<FixtureReport>, AxiomError> {
    Fixture::all()
        .into_iter()
        .map(|f| fixture_report(f, trials, seed, n_max))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntailmentCheck {
    pub subject: String,
    pub premises: Vec<AxiomId>,
    pub conclusions: Vec<AxiomId>,
    pub premises_hold: bool,
    pub conclusions_hold: bool,
}

impl EntailmentCheck {
    pub fn holds(&self) -> bool {
        !self.premises_hold || self.conclusions_hold
    }
}

const IOTA_ENTAILMENTS: [(&[AxiomId], &[AxiomId]); 3] = [
    (
        &[AxiomId::ReinforcementIota],
        &[AxiomId::ParentMonotonicityIota],
    ),
    (&[AxiomId::StabilityIota], &[AxiomId::Soundness]),
    (
        &[AxiomId::ReinforcementIota, AxiomId::StabilityIota],
        &[AxiomId::StrengtheningIota, AxiomId::WeakeningIota],
    ),
];

const ALPHA_ENTAILMENTS: [(&[AxiomId], &[AxiomId]); 1] =
    [(&[AxiomId::ReinforcementAlpha], &[AxiomId::Directionality])];

/// Checks that observed verdicts respect the entailments between
/// characteristics, for every shipped function and every fixture.
pub fn entailment_checks(
    trials: usize,
    seed: u64,
    n_max: usize,
    delta: f64,
) -> Result<Vec<EntailmentCheck>, AxiomError> {
    let mut out = Vec::new();
    let mut run = |subject: String,
                   rules: &[(&[AxiomId], &[AxiomId])],
                   check: &dyn Fn(AxiomId) -> Result<bool, AxiomError>|
     -> Result<(), AxiomError> {
        for (premises, conclusions) in rules {
            let mut premises_hold = true;
            for &a in premises.iter() {
                premises_hold &= check(a)?;
            }
            let mut conclusions_hold = true;
            for &a in conclusions.iter() {
                conclusions_hold &= check(a)?;
            }
            out.push(EntailmentCheck {
                subject: subject.clone(),
                premises: premises.to_vec(),
                conclusions: conclusions.to_vec(),
                premises_hold,
                conclusions_hold,
            });
        }
        Ok(())
    };
    let iotas: Vec<IotaFn> = shipped_influences(delta)
        .into_iter()
        .map(IotaFn::Shipped)
        .chain(IotaFixture::ALL.into_iter().map(IotaFn::Fixture))
        .collect();
    for f in iotas {
        run(f.name(), &IOTA_ENTAILMENTS, &|a| {
            Ok(check_iota(a, &f, trials, seed)?.passed())
        })?;
    }
    let alphas: Vec<AlphaFn> = Aggregator::ALL
        .into_iter()
        .map(AlphaFn::Shipped)
        .chain(AlphaFixture::ALL.into_iter().map(AlphaFn::Fixture))
        .collect();
    for f in alphas {
        run(f.name().to_string(), &ALPHA_ENTAILMENTS, &|a| {
            Ok(check_alpha(a, &f, trials, seed, n_max)?.passed())
        })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_essential_axiom_has_a_fixture() {
        for a in ESSENTIAL_ALPHA.iter().chain(&ESSENTIAL_IOTA) {
            assert!(independence_fixture(*a).is_ok(), "{a}");
        }
        assert!(independence_fixture(AxiomId::Franklin).is_err());
    }

    #[test]
    fn constant_influence_is_isolated() {
        let r = fixture_report(Fixture::Iota(IotaFixture::Constant), 300, 42, 6).unwrap();
        assert!(r.isolated(), "{:?}", r.collateral);
    }

    #[test]
    fn zero_aggregation_is_isolated() {
        let r = fixture_report(
            Fixture::Alpha(AlphaFixture::StrengtheningWeakening),
            300,
            42,
            6,
        )
        .unwrap();
        assert!(r.isolated(), "{:?}", r.collateral);
    }

    #[test]
    fn expected_patterns_have_both_marks() {
        assert!(expected_alpha(Aggregator::Sum).iter().all(|&b| b));
        assert_eq!(expected_iota(Influence::Euler), [false, true, true, false]);
    }
}

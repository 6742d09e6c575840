// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Randomised oracles for the characteristics of aggregation and influence
//! functions.
//!
//! Each characteristic is a quantified implication. The checkers draw seeded
//! instances, evaluate both sides and report the first violation. Where the
//! random search comes up empty, known counterexamples for the cell are
//! re-evaluated, so a failing verdict always carries concrete inputs.

mod check;
mod functions;
mod generate;
mod instances;
mod semantics_level;
mod stored;
mod suite;

use std::fmt;

use serde::Serialize;

pub use check::{check_alpha, check_iota, AxiomResult, AxiomVerdict, Counterexample};
pub use functions::{AlphaFixture, AlphaFn, IotaFixture, IotaFn, POSITIVE_EDGE, SIGMA_BOX, S_SPAN};
pub use instances::{AlphaInstance, Instance, IotaInstance, Outcome, Violation};
pub use semantics_level::{check_semantics_level, SemanticsCheck, SemanticsVerdict};
pub use stored::{stored_alpha, stored_iota, StoredAlpha};
pub use suite::{
    axiom_matrix, entailment_checks, expected_alpha, expected_iota, fixture_reports,
    independence_fixture, AxiomMatrix, EntailmentCheck, Fixture, FixtureReport, MatrixCell,
    MatrixRow, ALPHA_COLUMNS, ESSENTIAL_ALPHA, ESSENTIAL_IOTA, IOTA_COLUMNS,
};

/// Which half of a semantics a characteristic constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Alpha,
    Iota,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Alpha => "alpha",
            Target::Iota => "iota",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Essential,
    Entailed,
    Optional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomId {
    Anonymity2,
    Independence,
    ReinforcementAlpha,
    ParentMonotonicityAlpha,
    StabilityAlpha,
    ContinuityAlpha,
    Neutrality,
    StrengtheningAlpha,
    WeakeningAlpha,
    Directionality,
    Franklin,
    Counting,
    Symmetry,
    ReinforcementIota,
    InitialMonotonicity,
    StabilityIota,
    ContinuityIota,
    ParentMonotonicityIota,
    Soundness,
    StrengtheningIota,
    WeakeningIota,
    Compactness,
    Resilience,
    StickinessMin,
    StickinessMax,
}

impl AxiomId {
    pub const ALL: [AxiomId; 25] = [
        AxiomId::Anonymity2,
        AxiomId::Independence,
        AxiomId::ReinforcementAlpha,
        AxiomId::ParentMonotonicityAlpha,
        AxiomId::StabilityAlpha,
        AxiomId::ContinuityAlpha,
        AxiomId::Neutrality,
        AxiomId::StrengtheningAlpha,
        AxiomId::WeakeningAlpha,
        AxiomId::Directionality,
        AxiomId::Franklin,
        AxiomId::Counting,
        AxiomId::Symmetry,
        AxiomId::ReinforcementIota,
        AxiomId::InitialMonotonicity,
        AxiomId::StabilityIota,
        AxiomId::ContinuityIota,
        AxiomId::ParentMonotonicityIota,
        AxiomId::Soundness,
        AxiomId::StrengtheningIota,
        AxiomId::WeakeningIota,
        AxiomId::Compactness,
        AxiomId::Resilience,
        AxiomId::StickinessMin,
        AxiomId::StickinessMax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Anonymity2 => "anonymity2",
            AxiomId::Independence => "independence",
            AxiomId::ReinforcementAlpha => "reinforcement_alpha",
            AxiomId::ParentMonotonicityAlpha => "parent_monotonicity_alpha",
            AxiomId::StabilityAlpha => "stability_alpha",
            AxiomId::ContinuityAlpha => "continuity_alpha",
            AxiomId::Neutrality => "neutrality",
            AxiomId::StrengtheningAlpha => "strengthening_alpha",
            AxiomId::WeakeningAlpha => "weakening_alpha",
            AxiomId::Directionality => "directionality",
            AxiomId::Franklin => "franklin",
            AxiomId::Counting => "counting",
            AxiomId::Symmetry => "symmetry",
            AxiomId::ReinforcementIota => "reinforcement_iota",
            AxiomId::InitialMonotonicity => "initial_monotonicity",
            AxiomId::StabilityIota => "stability_iota",
            AxiomId::ContinuityIota => "continuity_iota",
            AxiomId::ParentMonotonicityIota => "parent_monotonicity_iota",
            AxiomId::Soundness => "soundness",
            AxiomId::StrengtheningIota => "strengthening_iota",
            AxiomId::WeakeningIota => "weakening_iota",
            AxiomId::Compactness => "compactness",
            AxiomId::Resilience => "resilience",
            AxiomId::StickinessMin => "stickiness_min",
            AxiomId::StickinessMax => "stickiness_max",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == name)
    }

    pub fn target(self) -> Target {
        if (self as usize) < (AxiomId::ReinforcementIota as usize) {
            Target::Alpha
        } else {
            Target::Iota
        }
    }

    pub fn category(self) -> Category {
        use AxiomId::*;
        match self {
            Anonymity2
            | Independence
            | ReinforcementAlpha
            | ParentMonotonicityAlpha
            | StabilityAlpha
            | ContinuityAlpha
            | Neutrality
            | StrengtheningAlpha
            | WeakeningAlpha
            | ReinforcementIota
            | InitialMonotonicity
            | StabilityIota
            | ContinuityIota => Category::Essential,
            Directionality
            | ParentMonotonicityIota
            | Soundness
            | StrengtheningIota
            | WeakeningIota => Category::Entailed,
            Franklin | Counting | Symmetry | Compactness | Resilience | StickinessMin
            | StickinessMax => Category::Optional,
        }
    }

    /// Short column heading.
    pub fn heading(self) -> &'static str {
        match self {
            AxiomId::ContinuityAlpha | AxiomId::ContinuityIota => "continuity",
            AxiomId::ReinforcementAlpha | AxiomId::ReinforcementIota => "reinforcement",
            AxiomId::StabilityAlpha | AxiomId::StabilityIota => "stability",
            AxiomId::ParentMonotonicityAlpha | AxiomId::ParentMonotonicityIota => {
                "parent-monotonicity"
            }
            AxiomId::StrengtheningAlpha | AxiomId::StrengtheningIota => "strengthening",
            AxiomId::WeakeningAlpha | AxiomId::WeakeningIota => "weakening",
            AxiomId::StickinessMin => "stickiness-min",
            AxiomId::StickinessMax => "stickiness-max",
            AxiomId::InitialMonotonicity => "initial-monotonicity",
            other => other.name(),
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

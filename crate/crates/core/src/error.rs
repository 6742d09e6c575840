// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::graph::ValidationReport;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("domain endpoint {0} is not finite")]
    NonFiniteEndpoint(f64),
    #[error("empty domain: lower endpoint {lo} is not below upper endpoint {hi}")]
    Empty { lo: f64, hi: f64 },
    #[error("domain {0} does not contain the neutral degree 0")]
    MissingNeutral(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("invalid graph: {0}")]
    Invalid(ValidationReport),
    #[error("permutation of size {found} applied to a graph of {expected} arguments")]
    SizeMismatch { expected: usize, found: usize },
    #[error("domains differ: {left} vs {right}")]
    DomainMismatch { left: String, right: String },
    #[error("not a permutation: {0:?}")]
    NotBijective(Vec<usize>),
    #[error("unknown builtin graph '{0}' (expected ex1, ex2 or exp-counter)")]
    UnknownBuiltin(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AggregationError {
    #[error("row has {g} entries but {d} degrees were given")]
    LengthMismatch { g: usize, d: usize },
    #[error("degree {value} at index {index} is outside (-1,1)")]
    OutsideSigmaDomain { index: usize, value: f64 },
    #[error("{kind} accepts only {allowed} but index {index} has sign {sign}")]
    Polarity {
        kind: &'static str,
        allowed: &'static str,
        index: usize,
        sign: i8,
    },
    #[error("{kind} requires degrees in [0,1] but index {index} has {value}")]
    OutsideUnitInterval {
        kind: &'static str,
        index: usize,
        value: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InfluenceError {
    #[error("weight {weight} is outside {domain}")]
    WeightOutsideDomain { weight: f64, domain: String },
    #[error("aggregate {s} is outside the admissible range {range}")]
    AggregateOutsideRange { s: f64, range: &'static str },
    #[error("aggregate {0} is not finite")]
    NonFiniteAggregate(f64),
    #[error("damping factor must be positive and finite, got {0}")]
    InvalidDamping(f64),
    #[error("empty weight interval [{w_min}, {w_max}]")]
    EmptyWeightInterval { w_min: f64, w_max: f64 },
    #[error("{0} is outside (-1,1)")]
    OutsideSigmaDomain(f64),
    #[error("unknown influence '{0}'")]
    Unknown(String),
    #[error("influence '{0}' needs a damping factor δ")]
    MissingDelta(&'static str),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("weight of argument {index} ({weight}) is outside the influence domain {domain}")]
    WeightOutsideDomain {
        index: usize,
        weight: f64,
        domain: String,
    },
    #[error("{semantics} needs {required} but argument {index} has a parent with sign {sign}")]
    Polarity {
        semantics: String,
        required: &'static str,
        index: usize,
        sign: i8,
    },
    #[error("{aggregator} cannot be paired with {influence}: {reason}")]
    Incompatible {
        aggregator: String,
        influence: String,
        reason: &'static str,
    },
    #[error("non-finite degree for argument {index} at iteration {iteration}")]
    NonFinite { iteration: usize, index: usize },
    #[error("degree {value} of argument {index} left {domain} at iteration {iteration}")]
    LeftDomain {
        iteration: usize,
        index: usize,
        value: f64,
        domain: String,
    },
    #[error("aggregation failed for argument {index} at iteration {iteration}: {source}")]
    Aggregation {
        iteration: usize,
        index: usize,
        source: AggregationError,
    },
    #[error("influence failed for argument {index} at iteration {iteration}: {source}")]
    Influence {
        iteration: usize,
        index: usize,
        source: InfluenceError,
    },
    #[error("singular system: pivot {pivot:e} in column {column}")]
    Singular { column: usize, pivot: f64 },
    #[error("weight {weight} of argument {index} is not inside (-1,1)")]
    SigmaWeight { index: usize, weight: f64 },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("unknown semantics '{0}'")]
    UnknownSemantics(String),
    #[error("semantics '{0}' needs a damping factor δ")]
    MissingDelta(String),
}

impl EngineError {
    /// The iteration index for failures that occur while iterating, as
    /// opposed to rejected inputs.
    pub fn iteration(&self) -> Option<usize> {
        match self {
            EngineError::NonFinite { iteration, .. }
            | EngineError::LeftDomain { iteration, .. }
            | EngineError::Aggregation { iteration, .. }
            | EngineError::Influence { iteration, .. } => Some(*iteration),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AxiomError {
    #[error("{axiom} is a condition on {target}, not on {requested}")]
    TargetMismatch {
        axiom: &'static str,
        target: &'static str,
        requested: &'static str,
    },
    #[error("{0} has no independence fixture")]
    NoFixture(&'static str),
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

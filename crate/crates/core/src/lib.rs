// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Modular acceptability semantics for weighted attack/support graphs.
//!
//! A semantics is a pair of an aggregation function α, which folds the
//! signed parent row and the current degrees into one number, and an
//! influence function ι, which combines that number with the initial
//! weight. Degrees are the limit of `f⁰ = w`, `fⁱ⁺¹ = ι(α(G, fⁱ), w)`.

// `!(a < b)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod aggregators;
pub mod axioms;
pub mod domain;
pub mod engine;
pub mod error;
pub mod graph;
pub mod influences;
pub mod random;

pub use aggregators::{Aggregator, Polarity};
pub use domain::{Bound, ValueDomain};
pub use engine::{iterate, GuaranteeReport, IterationConfig, IterationOutcome, Semantics};
pub use error::{
    AggregationError, AxiomError, DomainError, EngineError, GraphError, InfluenceError,
};
pub use graph::{Permutation, SignMatrix, Wasa};
pub use influences::{Influence, SRange};

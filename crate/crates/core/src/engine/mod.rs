// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Fixpoint iteration, closed-form solvers, convergence certificates and
//! divergence witnesses.

mod guarantee;
mod iterate;
mod semantics;
mod solve;
mod witness;

pub use guarantee::{guarantee, Certificate, GuaranteeReport, Verdict};
pub use iterate::{
    iterate, max_distance, CycleDetection, IterationConfig, IterationOutcome, Status,
};
pub use semantics::{
    registry, RegistryEntry, Semantics, BIPOLAR, COMPARISON_ROWS, REGISTRY, UNIPOLAR,
};
pub use solve::{matrix_exponential_degrees, solve_direct, solve_linear, solve_sigmoid_direct};
pub use witness::{
    build_divergence_witness, constructive_divergence_params, divergence_inequality,
    divergence_params, witness_semantics, DivergenceParams,
};

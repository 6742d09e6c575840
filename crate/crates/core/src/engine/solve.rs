// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, DVector};

use crate::error::EngineError;
use crate::graph::Wasa;
use crate::influences::{sigma, sigma_inv};

/// Pivots below this magnitude mark the system as singular.
pub const PIVOT_THRESHOLD: f64 = 1e-12;

/// Series cap for the matrix exponential.
pub const MAX_SERIES_TERMS: usize = 100;

/// Solves `(I − G/δ)·x = b` with partial pivoting.
pub fn solve_linear(wasa: &Wasa, delta: f64, b: &[f64]) -> Result<Vec<f64>, EngineError> {
    if !(delta.is_finite() && delta > 0.0) {
        return Err(EngineError::Parameter(format!(
            "δ must be positive, got {delta}"
        )));
    }
    let n = wasa.len();
    if b.len() != n {
        return Err(EngineError::Parameter(format!(
            "right-hand side has {} entries, graph has {n}",
            b.len()
        )));
    }
    let g = wasa.matrix();
    let a = DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        id - f64::from(g.get(i, j)) / delta
    });
    let lu = a.lu();
    let u = lu.u();
    for column in 0..n {
        let pivot = u[(column, column)];
        if pivot.abs() < PIVOT_THRESHOLD {
            return Err(EngineError::Singular { column, pivot });
        }
    }
    let x = lu
        .solve(&DVector::from_column_slice(b))
        .ok_or(EngineError::Singular {
            column: 0,
            pivot: 0.0,
        })?;
    Ok(x.iter().copied().collect())
}

/// Degrees of the direct aggregation semantics, `(I − G/δ)⁻¹ w`.
pub fn solve_direct(wasa: &Wasa, delta: f64) -> Result<Vec<f64>, EngineError> {
    solve_linear(wasa, delta, wasa.weights())
}

/// Degrees of the sigmoid direct aggregation semantics,
/// `σ((I − G/δ)⁻¹ σ⁻¹(w))`.
pub fn solve_sigmoid_direct(wasa: &Wasa, delta: f64) -> Result<Vec<f64>, EngineError> {
    let b = wasa
        .weights()
        .iter()
        .enumerate()
        .map(|(index, &weight)| {
            sigma_inv(weight).map_err(|_| EngineError::SigmaWeight { index, weight })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(solve_linear(wasa, delta, &b)?
        .into_iter()
        .map(sigma)
        .collect())
}

/// `e^G · w` by the truncated series. Stops once the added term is below
/// `term_tol` and the factorial has overtaken the growth of `Gᵏ`, or after
/// [`MAX_SERIES_TERMS`] terms.
pub fn matrix_exponential_degrees(wasa: &Wasa, term_tol: f64) -> Vec<f64> {
    let n = wasa.len();
    let g = wasa.matrix();
    let growth = g.max_row_norm();
    let mut term = wasa.weights().to_vec();
    let mut total = term.clone();
    for k in 1..=MAX_SERIES_TERMS {
        let next: Vec<f64> = (0..n)
            .map(|i| {
                g.row(i)
                    .iter()
                    .zip(&term)
                    .map(|(&s, &t)| f64::from(s) * t)
                    .sum::<f64>()
                    / k as f64
            })
            .collect();
        for (acc, t) in total.iter_mut().zip(&next) {
            *acc += t;
        }
        let size = next.iter().fold(0.0_f64, |m, t| m.max(t.abs()));
        term = next;
        // ‖G‖ᵏ/k! only decreases once k passes ‖G‖∞
        if size < term_tol && k >= growth {
            break;
        }
    }
    total
}

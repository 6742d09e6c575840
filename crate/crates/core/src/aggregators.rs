// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Aggregation functions α(g, d): fold a signed parent row and the parents'
//! degrees into one real number.

use std::fmt;

use serde::Serialize;

use crate::domain::ValueDomain;
use crate::error::AggregationError;
use crate::graph::SignMatrix;
use crate::influences::sigma_inv;

/// Sign restriction on parent rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Polarity {
    Any,
    SupportsOnly,
    AttacksOnly,
}

impl Polarity {
    pub fn admits(self, sign: i8) -> bool {
        match self {
            Polarity::Any => true,
            Polarity::SupportsOnly => sign >= 0,
            Polarity::AttacksOnly => sign <= 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Any => "any parents",
            Polarity::SupportsOnly => "supports only",
            Polarity::AttacksOnly => "attacks only",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Aggregator {
    Sum,
    SumPos,
    SumSigma,
    Top,
    TopSigma,
    Reward,
    Card,
}

impl Aggregator {
    pub const ALL: [Aggregator; 7] = [
        Aggregator::Reward,
        Aggregator::Card,
        Aggregator::Sum,
        Aggregator::SumPos,
        Aggregator::SumSigma,
        Aggregator::Top,
        Aggregator::TopSigma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Aggregator::Sum => "sum",
            Aggregator::SumPos => "sum-pos",
            Aggregator::SumSigma => "sum-sigma",
            Aggregator::Top => "top",
            Aggregator::TopSigma => "top-sigma",
            Aggregator::Reward => "reward",
            Aggregator::Card => "card",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == name)
    }

    pub fn polarity(self) -> Polarity {
        match self {
            Aggregator::Reward => Polarity::SupportsOnly,
            Aggregator::Card => Polarity::AttacksOnly,
            _ => Polarity::Any,
        }
    }

    /// Degrees the function accepts.
    pub fn degree_domain(self) -> ValueDomain {
        match self {
            Aggregator::SumSigma | Aggregator::TopSigma => ValueDomain::symmetric_open(),
            Aggregator::Reward | Aggregator::Card => ValueDomain::unit(),
            _ => ValueDomain::reals(),
        }
    }

    pub fn uses_sigma(self) -> bool {
        matches!(self, Aggregator::SumSigma | Aggregator::TopSigma)
    }

    /// Factor relating the aggregate's sensitivity to the influence
    /// derivative in the convergence bounds: the indegree for sums, 2 for
    /// top. `None` where no bound is known.
    pub fn norm_factor(self, indegree: usize) -> Option<f64> {
        match self {
            Aggregator::Sum | Aggregator::SumPos | Aggregator::SumSigma => Some(indegree as f64),
            Aggregator::Top | Aggregator::TopSigma => Some(2.0),
            Aggregator::Reward | Aggregator::Card => None,
        }
    }

    /// α(g, d) with the restrictions of the kind enforced.
    pub fn evaluate(self, g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
        match self {
            Aggregator::Sum => sum(g, d),
            Aggregator::SumPos => sum_pos(g, d),
            Aggregator::SumSigma => sum_sigma(g, d),
            Aggregator::Top => top(g, d),
            Aggregator::TopSigma => top_sigma(g, d),
            Aggregator::Reward => reward(g, d),
            Aggregator::Card => card(g, d),
        }
    }

    /// α(g, d) without the unipolar restrictions of reward and card. The
    /// other kinds are unchanged.
    pub fn formula(self, g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
        match self {
            Aggregator::Reward => {
                same_len(g, d)?;
                Ok(reward_formula(g, d))
            }
            Aggregator::Card => {
                same_len(g, d)?;
                Ok(card_formula(g, d))
            }
            other => other.evaluate(g, d),
        }
    }
}

impl fmt::Display for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn same_len(g: &[i8], d: &[f64]) -> Result<(), AggregationError> {
    if g.len() == d.len() {
        Ok(())
    } else {
        Err(AggregationError::LengthMismatch {
            g: g.len(),
            d: d.len(),
        })
    }
}

fn dot(g: &[i8], d: &[f64]) -> f64 {
    g.iter().zip(d).map(|(&gi, &di)| f64::from(gi) * di).sum()
}

/// Elementwise σ⁻¹, rejecting degrees at or near ±1.
pub fn sigma_inv_all(d: &[f64]) -> Result<Vec<f64>, AggregationError> {
    d.iter()
        .enumerate()
        .map(|(index, &value)| {
            sigma_inv(value).map_err(|_| AggregationError::OutsideSigmaDomain { index, value })
        })
        .collect()
}

/// `gd`
pub fn sum(g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
    same_len(g, d)?;
    Ok(dot(g, d))
}

/// Sum over the parents with nonnegative degree.
pub fn sum_pos(g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
    same_len(g, d)?;
    Ok(g.iter()
        .zip(d)
        .filter(|(_, &di)| di >= 0.0)
        .map(|(&gi, &di)| f64::from(gi) * di)
        .sum())
}

/// `gσ⁻¹(d)`
pub fn sum_sigma(g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
    same_len(g, d)?;
    Ok(dot(g, &sigma_inv_all(d)?))
}

/// Indices of the strongest supporter and the strongest attacker among the
/// parents with nonnegative degree. Ties go to the lowest index.
pub fn top_parents(g: &[i8], d: &[f64]) -> (Option<usize>, Option<usize>) {
    let mut best = [None::<usize>, None::<usize>];
    for (i, (&gi, &di)) in g.iter().zip(d).enumerate() {
        if gi == 0 || di < 0.0 {
            continue;
        }
        let slot = &mut best[usize::from(gi < 0)];
        match *slot {
            Some(j) if d[j] >= di => {}
            _ => *slot = Some(i),
        }
    }
    (best[0], best[1])
}

/// Strongest nonnegative supporter minus strongest nonnegative attacker.
pub fn top(g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
    same_len(g, d)?;
    let (s, a) = top_parents(g, d);
    Ok(s.map_or(0.0, |i| d[i]) - a.map_or(0.0, |i| d[i]))
}

/// [`top`] on σ⁻¹-transformed degrees.
pub fn top_sigma(g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
    same_len(g, d)?;
    top(g, &sigma_inv_all(d)?)
}

fn check_unipolar(
    kind: &'static str,
    polarity: Polarity,
    g: &[i8],
    d: &[f64],
) -> Result<(), AggregationError> {
    same_len(g, d)?;
    if let Some(index) = g.iter().position(|&s| !polarity.admits(s)) {
        return Err(AggregationError::Polarity {
            kind,
            allowed: polarity.as_str(),
            index,
            sign: g[index],
        });
    }
    if let Some(index) = d.iter().position(|v| !(0.0..=1.0).contains(v)) {
        return Err(AggregationError::OutsideUnitInterval {
            kind,
            index,
            value: d[index],
        });
    }
    Ok(())
}

/// `n = g·abs(sgn(d))`, `s = gd`
fn counts(g: &[i8], d: &[f64]) -> (i64, f64) {
    let n = g
        .iter()
        .zip(d)
        .filter(|(_, &di)| di != 0.0)
        .map(|(&gi, _)| i64::from(gi))
        .sum();
    (n, dot(g, d))
}

fn reward_formula(g: &[i8], d: &[f64]) -> f64 {
    let (n, s) = counts(g, d);
    if n == 0 {
        return 0.0;
    }
    let m = n.unsigned_abs() as i32;
    let head = s / (f64::from(m) * 2f64.powi(m));
    // Σ_{j=1}^{m-1} 2^-j
    let tail = 1.0 - 2f64.powi(1 - m);
    head + n.signum() as f64 * tail
}

fn card_formula(g: &[i8], d: &[f64]) -> f64 {
    let (n, s) = counts(g, d);
    if n == 0 {
        return 0.0;
    }
    n as f64 + s / n.unsigned_abs() as f64
}

/// Number of founded supporters first, their quality second. Supports-only
/// rows with degrees in `[0,1]`.
pub fn reward(g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
    check_unipolar("reward", Polarity::SupportsOnly, g, d)?;
    Ok(reward_formula(g, d))
}

/// `n + s/|n|`. Attacks-only rows with degrees in `[0,1]`.
pub fn card(g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
    check_unipolar("card", Polarity::AttacksOnly, g, d)?;
    Ok(card_formula(g, d))
}

/// Applies `agg` to every row of `g`. The error carries the failing row.
pub fn aggregate_all(
    agg: Aggregator,
    g: &SignMatrix,
    d: &[f64],
) -> Result<Vec<f64>, (usize, AggregationError)> {
    g.rows()
        .enumerate()
        .map(|(i, row)| agg.evaluate(row, d).map_err(|e| (i, e)))
        .collect()
}

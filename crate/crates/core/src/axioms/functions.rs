// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! The functions the axiom oracles run against: the shipped aggregators and
//! influences, plus deliberately broken variants that each give up one
//! essential axiom.

use std::fmt;

use serde::Serialize;

use crate::aggregators::{Aggregator, Polarity};
use crate::domain::ValueDomain;
use crate::error::{AggregationError, InfluenceError};
use crate::influences::{Influence, SRange};

/// σ-kinds are sampled inside `[-SIGMA_BOX, SIGMA_BOX]`.
pub const SIGMA_BOX: f64 = 0.95;

/// Aggregates are drawn from `[-S_SPAN, S_SPAN]`, intersected with the
/// admissible range of the influence.
pub const S_SPAN: f64 = 4.0;

/// Lower edge of the continuity box for reward and card, which jump when a
/// degree leaves 0.
pub const POSITIVE_EDGE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaFixture {
    /// `gd` when no attacker has negative degree, 0 otherwise.
    Anonymity,
    /// `gd/n`
    Independence,
    /// `g·abs(d)`
    Reinforcement,
    /// `gd·|k|` with `k` the signed parent count over nonzero degrees.
    ParentMonotonicity,
    /// `gd + k` with `k` the sum of all negative degrees.
    Stability,
    /// `gd − 1` when `gd < 0` and some degree is negative, `gd` otherwise.
    Continuity,
    /// `g(d+1)`
    Neutrality,
    /// Constant 0.
    StrengtheningWeakening,
}

impl AlphaFixture {
    pub const ALL: [AlphaFixture; 8] = [
        AlphaFixture::Anonymity,
        AlphaFixture::Independence,
        AlphaFixture::Reinforcement,
        AlphaFixture::ParentMonotonicity,
        AlphaFixture::Stability,
        AlphaFixture::Continuity,
        AlphaFixture::Neutrality,
        AlphaFixture::StrengtheningWeakening,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlphaFixture::Anonymity => "gd-unless-negative-attacker",
            AlphaFixture::Independence => "gd-over-n",
            AlphaFixture::Reinforcement => "g-abs-d",
            AlphaFixture::ParentMonotonicity => "gd-times-count",
            AlphaFixture::Stability => "gd-plus-negatives",
            AlphaFixture::Continuity => "gd-with-jump",
            AlphaFixture::Neutrality => "g-shifted-d",
            AlphaFixture::StrengtheningWeakening => "zero",
        }
    }

    pub fn formula(self, g: &[i8], d: &[f64]) -> f64 {
        let gd: f64 = g.iter().zip(d).map(|(&gi, &di)| f64::from(gi) * di).sum();
        match self {
            AlphaFixture::Anonymity => {
                let mut rank = 0.0;
                let mut k = 0.0;
                for (&gi, &di) in g.iter().zip(d) {
                    if gi < 0 && di < 0.0 {
                        rank += 1.0;
                        k += di * rank;
                    }
                }
                if k == 0.0 {
                    gd
                } else {
                    0.0
                }
            }
            AlphaFixture::Independence => gd / g.len().max(1) as f64,
            AlphaFixture::Reinforcement => g
                .iter()
                .zip(d)
                .map(|(&gi, &di)| f64::from(gi) * di.abs())
                .sum(),
            AlphaFixture::ParentMonotonicity => {
                let k: i64 = g
                    .iter()
                    .zip(d)
                    .filter(|(_, &di)| di != 0.0)
                    .map(|(&gi, _)| i64::from(gi))
                    .sum();
                gd * k.unsigned_abs() as f64
            }
            AlphaFixture::Stability => gd + d.iter().filter(|&&di| di < 0.0).sum::<f64>(),
            AlphaFixture::Continuity => {
                if gd < 0.0 && d.iter().any(|&di| di < 0.0) {
                    gd - 1.0
                } else {
                    gd
                }
            }
            AlphaFixture::Neutrality => g
                .iter()
                .zip(d)
                .map(|(&gi, &di)| f64::from(gi) * (di + 1.0))
                .sum(),
            AlphaFixture::StrengtheningWeakening => 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IotaFixture {
    /// `ι(s,w) = w`
    Constant,
    /// `ι(s,w) = w(s+1)`
    WeightScaled,
    /// `ι(s,w) = s+w+1`
    Shifted,
    /// `w` at `s = 0`, `s+w−1` below, `s+w+1` above.
    Jump,
}

impl IotaFixture {
    pub const ALL: [IotaFixture; 4] = [
        IotaFixture::Constant,
        IotaFixture::WeightScaled,
        IotaFixture::Shifted,
        IotaFixture::Jump,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IotaFixture::Constant => "weight-only",
            IotaFixture::WeightScaled => "weight-times-s-plus-one",
            IotaFixture::Shifted => "s-plus-w-plus-one",
            IotaFixture::Jump => "jump-at-zero",
        }
    }

    pub fn formula(self, s: f64, w: f64) -> f64 {
        match self {
            IotaFixture::Constant => w,
            IotaFixture::WeightScaled => w * (s + 1.0),
            IotaFixture::Shifted => s + w + 1.0,
            IotaFixture::Jump => {
                if s == 0.0 {
                    w
                } else if s < 0.0 {
                    s + w - 1.0
                } else {
                    s + w + 1.0
                }
            }
        }
    }
}

/// An aggregation function under test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum AlphaFn {
    Shipped(Aggregator),
    Fixture(AlphaFixture),
}

impl AlphaFn {
    pub fn name(&self) -> &'static str {
        match self {
            AlphaFn::Shipped(a) => a.name(),
            AlphaFn::Fixture(f) => f.name(),
        }
    }

    /// α(g, d) with the restrictions of the kind enforced.
    pub fn apply(&self, g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
        match self {
            AlphaFn::Shipped(a) => a.evaluate(g, d),
            AlphaFn::Fixture(f) => Ok(f.formula(g, d)),
        }
    }

    /// α(g, d) ignoring the unipolar restrictions of reward and card.
    pub fn apply_unrestricted(&self, g: &[i8], d: &[f64]) -> Result<f64, AggregationError> {
        match self {
            AlphaFn::Shipped(a) => a.formula(g, d),
            AlphaFn::Fixture(f) => Ok(f.formula(g, d)),
        }
    }

    pub fn polarity(&self) -> Polarity {
        match self {
            AlphaFn::Shipped(a) => a.polarity(),
            AlphaFn::Fixture(_) => Polarity::Any,
        }
    }

    /// Closed box the degrees are drawn from.
    pub fn sampling_box(&self) -> (f64, f64) {
        match self {
            AlphaFn::Shipped(a) if a.uses_sigma() => (-SIGMA_BOX, SIGMA_BOX),
            AlphaFn::Shipped(Aggregator::Reward | Aggregator::Card) => (0.0, 1.0),
            _ => (-1.0, 1.0),
        }
    }

    /// Box for the continuity probe, which must avoid the points where a
    /// kind is discontinuous by design.
    pub fn continuity_box(&self) -> (f64, f64) {
        match self {
            AlphaFn::Shipped(Aggregator::Reward | Aggregator::Card) => (POSITIVE_EDGE, 1.0),
            _ => self.sampling_box(),
        }
    }

    /// Whether zero degrees may be injected into continuity probes.
    pub fn zero_in_continuity_box(&self) -> bool {
        let (lo, hi) = self.continuity_box();
        lo <= 0.0 && 0.0 <= hi
    }

    /// Bound on `|α(g, d + h·eᵢ) − α(g, d)| / |h|` over the continuity box
    /// for rows of length `n`.
    pub fn lipschitz(&self, n: usize) -> f64 {
        match self {
            AlphaFn::Shipped(a) if a.uses_sigma() => 1.0 / (1.0 - SIGMA_BOX * SIGMA_BOX),
            AlphaFn::Shipped(_) => 1.0,
            AlphaFn::Fixture(AlphaFixture::ParentMonotonicity) => n as f64,
            AlphaFn::Fixture(AlphaFixture::Stability) => 2.0,
            AlphaFn::Fixture(_) => 1.0,
        }
    }
}

impl fmt::Display for AlphaFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An influence function under test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum IotaFn {
    Shipped(Influence),
    Fixture(IotaFixture),
}

impl IotaFn {
    pub fn name(&self) -> String {
        match self {
            IotaFn::Shipped(i) => i.to_string(),
            IotaFn::Fixture(f) => f.name().to_string(),
        }
    }

    /// ι(s, w) with the kind's input checks.
    pub fn apply(&self, s: f64, w: f64) -> Result<f64, InfluenceError> {
        match self {
            IotaFn::Shipped(i) => i.evaluate(s, w),
            IotaFn::Fixture(f) => Ok(f.formula(s, w)),
        }
    }

    pub fn value_domain(&self) -> ValueDomain {
        match self {
            IotaFn::Shipped(i) => i.value_domain(),
            IotaFn::Fixture(_) => ValueDomain::symmetric(),
        }
    }

    pub fn s_range(&self) -> SRange {
        match self {
            IotaFn::Shipped(i) => i.s_range(),
            IotaFn::Fixture(_) => SRange::Any,
        }
    }

    /// Closed box the aggregates are drawn from.
    pub fn s_box(&self) -> (f64, f64) {
        match self.s_range() {
            SRange::Any => (-S_SPAN, S_SPAN),
            SRange::NonNegative => (0.0, S_SPAN),
            SRange::NonPositive => (-S_SPAN, 0.0),
            SRange::Unit => (0.0, 1.0),
        }
    }

    /// Lipschitz bound in `s` at a fixed weight.
    pub fn lipschitz_s(&self, w: f64) -> f64 {
        match self {
            IotaFn::Shipped(i) => i.derivative_sup(w, w).unwrap_or(f64::INFINITY),
            IotaFn::Fixture(IotaFixture::Constant) => 0.0,
            IotaFn::Fixture(IotaFixture::WeightScaled) => w.abs(),
            IotaFn::Fixture(_) => 1.0,
        }
    }

    /// Lipschitz bound in `w` at a fixed aggregate.
    pub fn lipschitz_w(&self, s: f64) -> f64 {
        match self {
            // ∂ι/∂w = (2w(1+we^s) + (1−w²)e^s)/(1+we^s)² ≤ 2 + 3e^s
            IotaFn::Shipped(Influence::Euler) => 2.0 + 3.0 * s.max(0.0).exp(),
            // cosh²(b)/cosh²(s/δ+b) with b = σ⁻¹(w)
            IotaFn::Shipped(Influence::Sigmoid { delta }) => (2.0 * s.abs() / delta).exp(),
            IotaFn::Shipped(_) => 1.0,
            IotaFn::Fixture(IotaFixture::WeightScaled) => (s + 1.0).abs(),
            IotaFn::Fixture(_) => 1.0,
        }
    }
}

impl fmt::Display for IotaFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_formulas() {
        let g = [1, -1, 1];
        let d = [0.5, -0.25, 0.0];
        assert_eq!(AlphaFixture::Independence.formula(&g, &d), 0.75 / 3.0);
        assert_eq!(AlphaFixture::Reinforcement.formula(&g, &d), 0.25);
        // k = 1 − 1 over the nonzero degrees
        assert_eq!(AlphaFixture::ParentMonotonicity.formula(&g, &d), 0.0);
        assert_eq!(AlphaFixture::Stability.formula(&g, &d), 0.5);
        assert_eq!(AlphaFixture::Continuity.formula(&[-1], &[0.5]), -0.5);
        assert_eq!(AlphaFixture::Continuity.formula(&[1], &[-0.5]), -1.5);
        assert_eq!(AlphaFixture::Neutrality.formula(&g, &d), 1.5 - 0.75 + 1.0);
        assert_eq!(AlphaFixture::Anonymity.formula(&[-1], &[-0.5]), 0.0);
        assert_eq!(AlphaFixture::Anonymity.formula(&[1], &[-0.5]), -0.5);
        assert_eq!(IotaFixture::WeightScaled.formula(1.0, 0.5), 1.0);
        assert_eq!(IotaFixture::Jump.formula(0.0, 0.5), 0.5);
        assert_eq!(IotaFixture::Jump.formula(-0.25, 0.5), -0.75);
    }

    #[test]
    fn restricted_kinds_have_an_unrestricted_form() {
        let reward = AlphaFn::Shipped(Aggregator::Reward);
        assert!(reward.apply(&[-1], &[0.5]).is_err());
        assert!(reward.apply_unrestricted(&[-1], &[0.5]).is_ok());
    }
}

// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Influence functions ι(s, w): combine an aggregate with an initial weight.

use std::fmt;

use serde::Serialize;

use crate::domain::ValueDomain;
use crate::error::InfluenceError;

/// Degrees within this distance of ±1 are rejected by [`sigma_inv`].
pub const SIGMA_EDGE: f64 = 1e-12;

/// Largest double below 1; the Euler influence never returns 1 itself.
pub const BELOW_ONE: f64 = 1.0 - f64::EPSILON / 2.0;

pub fn sigma(x: f64) -> f64 {
    x.tanh()
}

pub fn sigma_inv(y: f64) -> Result<f64, InfluenceError> {
    if y.is_finite() && y.abs() < 1.0 - SIGMA_EDGE {
        Ok(y.atanh())
    } else {
        Err(InfluenceError::OutsideSigmaDomain(y))
    }
}

/// Admissible sign of the aggregate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SRange {
    Any,
    NonNegative,
    NonPositive,
    /// `[0,1]`; nominal only, used to draw test inputs.
    Unit,
}

impl SRange {
    pub fn as_str(self) -> &'static str {
        match self {
            SRange::Any => "any",
            SRange::NonNegative => "s >= 0",
            SRange::NonPositive => "s <= 0",
            SRange::Unit => "[0,1]",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Influence {
    Multilinear,
    PositiveFractional,
    NegativeFractional,
    CombinedFractional,
    Euler,
    Linear { delta: f64 },
    Sigmoid { delta: f64 },
    Qmax,
}

impl Influence {
    pub const NAMES: [&'static str; 8] = [
        "multilinear",
        "positive-fractional",
        "negative-fractional",
        "combined-fractional",
        "euler",
        "linear",
        "sigmoid",
        "qmax",
    ];

    pub fn linear(delta: f64) -> Result<Self, InfluenceError> {
        check_delta(delta).map(|delta| Influence::Linear { delta })
    }

    pub fn sigmoid(delta: f64) -> Result<Self, InfluenceError> {
        check_delta(delta).map(|delta| Influence::Sigmoid { delta })
    }

    /// Looks an influence up by name; `delta` is required for the damped ones
    /// and ignored otherwise.
    pub fn from_name(name: &str, delta: Option<f64>) -> Result<Self, InfluenceError> {
        let need = |n: &'static str| delta.ok_or(InfluenceError::MissingDelta(n));
        Ok(match name {
            "multilinear" => Influence::Multilinear,
            "positive-fractional" => Influence::PositiveFractional,
            "negative-fractional" => Influence::NegativeFractional,
            "combined-fractional" => Influence::CombinedFractional,
            "euler" => Influence::Euler,
            "linear" => Influence::linear(need("linear")?)?,
            "sigmoid" => Influence::sigmoid(need("sigmoid")?)?,
            "qmax" => Influence::Qmax,
            other => return Err(InfluenceError::Unknown(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Influence::Multilinear => "multilinear",
            Influence::PositiveFractional => "positive-fractional",
            Influence::NegativeFractional => "negative-fractional",
            Influence::CombinedFractional => "combined-fractional",
            Influence::Euler => "euler",
            Influence::Linear { .. } => "linear",
            Influence::Sigmoid { .. } => "sigmoid",
            Influence::Qmax => "qmax",
        }
    }

    pub fn delta(&self) -> Option<f64> {
        match *self {
            Influence::Linear { delta } | Influence::Sigmoid { delta } => Some(delta),
            _ => None,
        }
    }

    pub fn value_domain(&self) -> ValueDomain {
        match self {
            Influence::Euler => ValueDomain::unit_half_open(),
            Influence::Linear { .. } => ValueDomain::reals(),
            Influence::Sigmoid { .. } => ValueDomain::symmetric_open(),
            _ => ValueDomain::unit(),
        }
    }

    pub fn s_range(&self) -> SRange {
        match self {
            Influence::Multilinear => SRange::Unit,
            Influence::PositiveFractional => SRange::NonNegative,
            Influence::NegativeFractional => SRange::NonPositive,
            _ => SRange::Any,
        }
    }

    /// ι(s, w) with the weight and sign checks applied.
    pub fn evaluate(&self, s: f64, w: f64) -> Result<f64, InfluenceError> {
        if !s.is_finite() {
            return Err(InfluenceError::NonFiniteAggregate(s));
        }
        let domain = self.value_domain();
        if !domain.contains(w) {
            return Err(InfluenceError::WeightOutsideDomain {
                weight: w,
                domain: domain.to_string(),
            });
        }
        let range = self.s_range();
        let bad = match range {
            SRange::NonNegative => s < 0.0,
            SRange::NonPositive => s > 0.0,
            SRange::Any | SRange::Unit => false,
        };
        if bad {
            return Err(InfluenceError::AggregateOutsideRange {
                s,
                range: range.as_str(),
            });
        }
        Ok(self.formula(s, w))
    }

    /// The bare formula, without input checks.
    pub fn formula(&self, s: f64, w: f64) -> f64 {
        match *self {
            Influence::Multilinear => w + (1.0 - w) * s,
            Influence::PositiveFractional => (w + s) / (1.0 + s),
            Influence::NegativeFractional => w / (1.0 - s),
            Influence::CombinedFractional => {
                if s < 0.0 {
                    w / (1.0 - s)
                } else {
                    (w + s) / (1.0 + s)
                }
            }
            Influence::Euler => euler(s, w),
            Influence::Linear { delta } => s / delta + w,
            Influence::Sigmoid { delta } => sigma(s / delta + w.atanh()),
            Influence::Qmax => {
                // s²/(1+s²), written so that neither s = 0 nor huge s misbehave
                let q = 1.0 / (1.0 + 1.0 / (s * s));
                if s <= 0.0 {
                    w - w * q
                } else {
                    w + (1.0 - w) * q
                }
            }
        }
    }

    /// Sound upper bound on ∂ι/∂s over all admissible s and all weights in
    /// `[w_min, w_max]`.
    pub fn derivative_sup(&self, w_min: f64, w_max: f64) -> Result<f64, InfluenceError> {
        if !(w_min <= w_max) {
            return Err(InfluenceError::EmptyWeightInterval { w_min, w_max });
        }
        Ok(match *self {
            // y/(1+y)² peaks at 1/4
            Influence::Euler => (1.0 - w_min * w_min) / 4.0,
            Influence::Linear { delta } | Influence::Sigmoid { delta } => 1.0 / delta,
            Influence::Qmax => 0.65,
            Influence::Multilinear | Influence::PositiveFractional => 1.0 - w_min,
            Influence::NegativeFractional => w_max,
            Influence::CombinedFractional => w_max.max(1.0 - w_min),
        })
    }
}

impl fmt::Display for Influence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.delta() {
            Some(d) => write!(f, "{}({})", self.name(), d),
            None => write!(f, "{}", self.name()),
        }
    }
}

fn check_delta(delta: f64) -> Result<f64, InfluenceError> {
    if delta.is_finite() && delta > 0.0 {
        Ok(delta)
    } else {
        Err(InfluenceError::InvalidDamping(delta))
    }
}

fn euler(s: f64, w: f64) -> f64 {
    if w == 0.0 {
        return 0.0;
    }
    if s > 700.0 {
        return BELOW_ONE;
    }
    // 1 − (1−w²)/(1+w·eˢ), rearranged to avoid cancelling against 1
    let e = s.exp();
    let v = w * (e + w) / (1.0 + w * e);
    v.min(BELOW_ONE)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn euler_values() {
        let e = Influence::Euler;
        assert!(close(e.evaluate(0.0, 0.8).unwrap(), 0.8, 1e-15));
        assert!(close(e.evaluate(-0.894, 0.7).unwrap(), 0.604, 5e-4));
        assert_eq!(e.evaluate(3.0, 0.0).unwrap(), 0.0);
        assert!(e.evaluate(0.0, 1.0).is_err());
        assert!(e.evaluate(1e6, 0.5).unwrap() < 1.0);
        assert!(e.evaluate(40.0, 0.5).unwrap() < 1.0);
    }

    #[test]
    fn combined_fractional_oscillation_step() {
        let c = Influence::CombinedFractional;
        assert!(close(c.evaluate(-0.5, 0.75).unwrap(), 0.5, 1e-15));
        assert!(close(c.evaluate(0.5, 0.25).unwrap(), 0.5, 1e-15));
        assert_eq!(c.evaluate(0.0, 0.3).unwrap(), 0.3);
    }

    #[test]
    fn linear_reproduces_direct_aggregation_cell() {
        let l = Influence::linear(2.0).unwrap();
        assert!(close(l.evaluate(0.922, 0.7).unwrap(), 1.161, 1e-12));
    }

    #[test]
    fn qmax_half_points() {
        let q = Influence::Qmax;
        assert!(close(q.evaluate(1.0, 0.0).unwrap(), 0.5, 1e-15));
        assert!(close(q.evaluate(-1.0, 1.0).unwrap(), 0.5, 1e-15));
        assert_eq!(q.evaluate(0.0, 0.4).unwrap(), 0.4);
        assert!(close(q.evaluate(1e200, 0.4).unwrap(), 1.0, 1e-15));
    }

    #[test]
    fn sigmoid_is_stable() {
        let s = Influence::sigmoid(2.0).unwrap();
        for w in [-0.9, -0.1, 0.0, 0.5, 0.99] {
            assert!(close(s.evaluate(0.0, w).unwrap(), w, 1e-12));
        }
        assert!(s.evaluate(0.0, 1.0).is_err());
    }

    #[test]
    fn sign_restrictions() {
        assert!(Influence::PositiveFractional.evaluate(-0.1, 0.5).is_err());
        assert!(Influence::NegativeFractional.evaluate(0.1, 0.5).is_err());
        assert!(Influence::NegativeFractional.evaluate(-1.0, 0.5).is_ok());
        assert!(Influence::Multilinear.evaluate(-0.1, 0.5).is_ok());
        assert!(Influence::Linear { delta: 2.0 }
            .evaluate(f64::NAN, 0.0)
            .is_err());
    }

    #[test]
    fn derivative_bounds() {
        assert_eq!(Influence::Euler.derivative_sup(0.0, 0.9).unwrap(), 0.25);
        assert!(close(
            Influence::linear(3.0)
                .unwrap()
                .derivative_sup(0.0, 1.0)
                .unwrap(),
            1.0 / 3.0,
            1e-15
        ));
        assert_eq!(Influence::Qmax.derivative_sup(0.0, 1.0).unwrap(), 0.65);
        assert!(Influence::Qmax.derivative_sup(0.5, 0.1).is_err());
    }

    #[test]
    fn derivative_bounds_dominate_difference_quotients() {
        let kinds = [
            Influence::Multilinear,
            Influence::PositiveFractional,
            Influence::NegativeFractional,
            Influence::CombinedFractional,
            Influence::Euler,
            Influence::linear(1.5).unwrap(),
            Influence::sigmoid(1.5).unwrap(),
            Influence::Qmax,
        ];
        for inf in kinds {
            for wi in 0..=9 {
                let w = wi as f64 / 10.0;
                let m = inf.derivative_sup(w, w).unwrap();
                for si in -40..40 {
                    let s = si as f64 / 10.0;
                    let (s0, s1) = match inf.s_range() {
                        SRange::NonNegative | SRange::Unit if s < 0.0 => continue,
                        SRange::NonPositive if s + 0.01 > 0.0 => continue,
                        _ => (s, s + 0.01),
                    };
                    let q = (inf.formula(s1, w) - inf.formula(s0, w)) / 0.01;
                    assert!(q <= m + 1e-9, "{inf} w={w} s={s}: {q} > {m}");
                }
            }
        }
    }

    #[test]
    fn sigma_pair() {
        assert_eq!(sigma(0.0), 0.0);
        assert_eq!(sigma_inv(0.0).unwrap(), 0.0);
        assert!(close(sigma(sigma_inv(0.9).unwrap()), 0.9, 1e-12));
        assert!(sigma_inv(1.0).is_err());
        assert!(sigma_inv(1.0 - 1e-13).is_err());
        // f64 resolves tanh near ±1 too coarsely for 1e-12 beyond |x| ≈ 3
        for k in -30..=30 {
            let x = k as f64 / 10.0;
            assert!(close(sigma_inv(sigma(x)).unwrap(), x, 1e-12), "{x}");
        }
    }

    #[test]
    fn names_round_trip() {
        for name in Influence::NAMES {
            let inf = Influence::from_name(name, Some(2.0)).unwrap();
            assert_eq!(inf.name(), name);
        }
        assert!(Influence::from_name("linear", None).is_err());
        assert!(Influence::from_name("linear", Some(0.0)).is_err());
        assert!(Influence::from_name("nope", None).is_err());
    }
}

// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::semantics::Semantics;
use crate::aggregators::Aggregator;
use crate::domain::ValueDomain;
use crate::error::EngineError;
use crate::graph::{Wasa, WasaParts};
use crate::influences::Influence;

/// Group size and the two weights of a divergence witness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DivergenceParams {
    pub k: usize,
    pub v: f64,
    pub w: f64,
}

/// Two groups of `k` arguments. Within a group everyone attacks everyone,
/// itself included, and every argument supports every member of the other
/// group. The `a` group has weight `v`, the `b` group weight `w`.
pub fn build_divergence_witness(
    k: usize,
    v: f64,
    w: f64,
    domain: ValueDomain,
) -> Result<Wasa, EngineError> {
    if k == 0 {
        return Err(EngineError::Parameter("k must be at least 1".into()));
    }
    if !(v > w) {
        return Err(EngineError::Parameter(format!(
            "need v > w, got v = {v}, w = {w}"
        )));
    }
    for x in [v, w] {
        if !domain.contains(x) {
            return Err(EngineError::Parameter(format!("{x} is outside {domain}")));
        }
    }
    let n = 2 * k;
    let rows: Vec<Vec<i8>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if (i < k) == (j < k) { -1 } else { 1 })
                .collect()
        })
        .collect();
    let weights: Vec<f64> = (0..n).map(|i| if i < k { v } else { w }).collect();
    let labels: Vec<String> = (1..=k)
        .map(|i| format!("a{i}"))
        .chain((1..=k).map(|i| format!("b{i}")))
        .collect();
    Ok(Wasa::from_parts(WasaParts {
        labels,
        g: rows,
        w: weights,
        domain,
    })?)
}

/// The semantics the witness is meant to break: sum aggregation with the
/// given influence, except that sigmoid is paired with sum-σ as in sigmoid
/// direct aggregation. Under plain sum, sigmoid(3) with the standard
/// parameters converges.
pub fn witness_semantics(inf: Influence) -> Result<Semantics, EngineError> {
    let agg = match inf {
        Influence::Sigmoid { .. } => Aggregator::SumSigma,
        _ => Aggregator::Sum,
    };
    Semantics::new(agg, inf)
}

/// Known witness parameters, falling back on [`constructive_divergence_params`]
/// for damping factors that are not integers.
pub fn divergence_params(inf: Influence) -> Result<DivergenceParams, EngineError> {
    let p = |k, v, w| Ok(DivergenceParams { k, v, w });
    match inf {
        Influence::Multilinear => p(1, 0.5, 0.4),
        Influence::Qmax => p(1, 1.0, 0.0),
        Influence::CombinedFractional => p(2, 0.5, 0.4),
        Influence::Euler => p(3, 0.5, 0.4),
        Influence::Linear { delta } | Influence::Sigmoid { delta }
            if delta.fract() == 0.0 && delta < 1e9 =>
        {
            let d = delta as usize;
            let d_even = if d % 2 == 0 { d + 2 } else { d + 1 };
            p(d_even / 2, 2.0 / 3.0, 0.6)
        }
        Influence::Linear { .. } | Influence::Sigmoid { .. } => constructive_divergence_params(inf),
        Influence::PositiveFractional | Influence::NegativeFractional => {
            Err(EngineError::Parameter(format!(
                "{inf} only takes one sign of aggregate, so the mixed witness does not apply"
            )))
        }
    }
}

/// Picks `w` in the middle of the domain, a step `ε` that stays inside it,
/// `k = ⌈ε/(ι(ε,w) − w)⌉` and `v = w + ε/k`.
pub fn constructive_divergence_params(inf: Influence) -> Result<DivergenceParams, EngineError> {
    let (lo, hi) = inf.value_domain().finite_box(1.0);
    let w = (lo + hi) / 2.0;
    let eps = (hi - w) / 2.0;
    let gain = inf.formula(eps, w) - w;
    if !(gain > 0.0) || !gain.is_finite() {
        return Err(EngineError::Parameter(format!(
            "{inf} does not move upwards from {w}"
        )));
    }
    let k = (eps / gain).ceil().max(1.0) as usize;
    Ok(DivergenceParams {
        k,
        v: w + eps / k as f64,
        w,
    })
}

/// `(ι(k(v−w), w), ι(k(w−v), v))`; a witness needs the first to be at least
/// the second.
pub fn divergence_inequality(inf: Influence, p: DivergenceParams) -> (f64, f64) {
    let k = p.k as f64;
    (
        inf.formula(k * (p.v - p.w), p.w),
        inf.formula(k * (p.w - p.v), p.v),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{iterate, IterationConfig, Status};

    #[test]
    fn smallest_witness_is_the_two_cycle_graph() {
        let a = build_divergence_witness(1, 0.75, 0.25, ValueDomain::unit()).unwrap();
        assert_eq!(a.matrix().to_rows(), vec![vec![-1, 1], vec![1, -1]]);
        assert_eq!(a.weights(), &[0.75, 0.25]);
    }

    #[test]
    fn witness_has_indegree_two_k() {
        for k in 1..5 {
            let a = build_divergence_witness(k, 0.5, 0.4, ValueDomain::unit()).unwrap();
            assert_eq!(a.indegree(), 2 * k);
            assert_eq!(a.len(), 2 * k);
        }
    }

    #[test]
    fn parameters_are_checked() {
        assert!(build_divergence_witness(0, 0.5, 0.4, ValueDomain::unit()).is_err());
        assert!(build_divergence_witness(1, 0.4, 0.5, ValueDomain::unit()).is_err());
        assert!(build_divergence_witness(1, 1.5, 0.5, ValueDomain::unit()).is_err());
    }

    #[test]
    fn standard_parameters() {
        assert_eq!(
            divergence_params(Influence::Euler).unwrap(),
            DivergenceParams {
                k: 3,
                v: 0.5,
                w: 0.4
            }
        );
        let lin3 = divergence_params(Influence::linear(3.0).unwrap()).unwrap();
        assert_eq!((lin3.k, lin3.v, lin3.w), (2, 2.0 / 3.0, 0.6));
        let lin2 = divergence_params(Influence::linear(2.0).unwrap()).unwrap();
        assert_eq!(lin2.k, 2);
        assert!(divergence_params(Influence::PositiveFractional).is_err());
    }

    #[test]
    fn multilinear_inequality() {
        let p = divergence_params(Influence::Multilinear).unwrap();
        let (lhs, rhs) = divergence_inequality(Influence::Multilinear, p);
        // ι(0.1, 0.4) = 0.46 and ι(−0.1, 0.5) = 0.45
        assert!((lhs - 0.46).abs() < 1e-12 && (rhs - 0.45).abs() < 1e-12);
        assert!(lhs >= rhs);
    }

    #[test]
    fn constructive_recipe_for_fractional_damping() {
        let inf = Influence::linear(2.5).unwrap();
        let p = divergence_params(inf).unwrap();
        assert_eq!(p.k, 3);
        let (lhs, rhs) = divergence_inequality(inf, p);
        assert!(lhs >= rhs);
    }

    #[test]
    fn first_step_is_forced() {
        let inf = Influence::Euler;
        let p = divergence_params(inf).unwrap();
        let a = build_divergence_witness(p.k, p.v, p.w, inf.value_domain()).unwrap();
        let sem = witness_semantics(inf).unwrap();
        let f1 = sem.step(a.matrix(), a.weights(), a.weights(), 1).unwrap();
        let (lhs, rhs) = divergence_inequality(inf, p);
        assert!((f1[p.k] - lhs).abs() < 1e-15);
        assert!((f1[0] - rhs).abs() < 1e-15);
    }

    #[test]
    fn euler_witness_does_not_converge() {
        let inf = Influence::Euler;
        let p = divergence_params(inf).unwrap();
        let a = build_divergence_witness(p.k, p.v, p.w, inf.value_domain()).unwrap();
        let out = iterate(
            &a,
            &witness_semantics(inf).unwrap(),
            &IterationConfig::default(),
        );
        match out {
            Ok(o) => assert!(!matches!(o.status, Status::Converged { .. })),
            Err(e) => assert!(e.iteration().is_some()),
        }
    }

    #[test]
    fn sigmoid_witness_needs_the_sigma_aggregator() {
        let inf = Influence::sigmoid(3.0).unwrap();
        let p = divergence_params(inf).unwrap();
        let a = build_divergence_witness(p.k, p.v, p.w, inf.value_domain()).unwrap();
        let cfg = IterationConfig::default()
            .with_tolerance(1e-10)
            .with_max_iterations(100_000);
        let plain = Semantics::new(Aggregator::Sum, inf).unwrap();
        assert!(iterate(&a, &plain, &cfg).unwrap().is_converged());
        let converged = iterate(&a, &witness_semantics(inf).unwrap(), &cfg)
            .map(|o| o.is_converged())
            .unwrap_or(false);
        assert!(!converged);
    }
}

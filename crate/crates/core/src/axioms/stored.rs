// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Known counterexamples, re-evaluated on every run so a failing cell does
//! not depend on the random search hitting a thin region.

use super::functions::{AlphaFn, IotaFn};
use super::instances::{AlphaInstance, IotaInstance};
use super::AxiomId;
use crate::aggregators::Aggregator;
use crate::influences::Influence;

#[derive(Debug, Clone, PartialEq)]
pub struct StoredAlpha {
    pub instance: AlphaInstance,
    /// Evaluate without the unipolar restrictions of reward and card.
    pub unrestricted: bool,
}

fn tanh_all(d: &[f64]) -> Vec<f64> {
    d.iter().map(|x| x.tanh()).collect()
}

fn top_like(axiom: AxiomId, sigma: bool) -> Vec<AlphaInstance> {
    let t = |d: &[f64]| if sigma { tanh_all(d) } else { d.to_vec() };
    match axiom {
        // the strongest pair cancels, but the third parent survives
        AxiomId::Franklin => vec![AlphaInstance::Franklin {
            g: vec![1, -1, 1],
            d: t(&[0.5, 0.5, 0.3]),
            i: 0,
            j: 1,
        }],
        // a weaker second supporter leaves the maximum unchanged
        AxiomId::Counting => vec![AlphaInstance::Counting {
            g: vec![1, 1],
            h: vec![1, 0],
            d: t(&[0.7, 0.3]),
            k: 1,
        }],
        // negative supporters are ignored, but mirrored they attack
        AxiomId::Symmetry => vec![AlphaInstance::Symmetry {
            g: vec![1],
            d: t(&[-0.5]),
        }],
        _ => Vec::new(),
    }
}

pub fn stored_alpha(f: &AlphaFn, axiom: AxiomId) -> Vec<StoredAlpha> {
    let AlphaFn::Shipped(agg) = f else {
        return Vec::new();
    };
    let plain = |instance| StoredAlpha {
        instance,
        unrestricted: false,
    };
    let free = |instance| StoredAlpha {
        instance,
        unrestricted: true,
    };
    match (agg, axiom) {
        (Aggregator::Reward, AxiomId::Counting) => vec![free(AlphaInstance::Counting {
            g: vec![1, 1, -1],
            h: vec![1, 1, 0],
            d: vec![1.0, 1.0, 0.1],
            k: 2,
        })],
        (Aggregator::Reward, AxiomId::Symmetry) => vec![free(AlphaInstance::Symmetry {
            g: vec![1, 1],
            d: vec![0.5, 0.5],
        })],
        (Aggregator::Card, AxiomId::Counting) => vec![free(AlphaInstance::Counting {
            g: vec![1, 1, -1, -1, -1],
            h: vec![1, 1, -1, -1, 0],
            d: vec![1.0, 1.0, 0.1, 0.1, 0.1],
            k: 4,
        })],
        (Aggregator::Card, AxiomId::Symmetry) => vec![free(AlphaInstance::Symmetry {
            g: vec![-1],
            d: vec![0.5],
        })],
        (Aggregator::Top, a) => top_like(a, false).into_iter().map(plain).collect(),
        (Aggregator::TopSigma, a) => top_like(a, true).into_iter().map(plain).collect(),
        (Aggregator::SumPos, AxiomId::Symmetry) => vec![plain(AlphaInstance::Symmetry {
            g: vec![1],
            d: vec![-0.5],
        })],
        _ => Vec::new(),
    }
}

pub fn stored_iota(f: &IotaFn, axiom: AxiomId) -> Vec<IotaInstance> {
    let IotaFn::Shipped(inf) = f else {
        return Vec::new();
    };
    let unbounded = matches!(
        inf,
        Influence::Euler | Influence::Linear { .. } | Influence::Sigmoid { .. }
    );
    match (inf, axiom) {
        (Influence::Multilinear, AxiomId::Resilience) => {
            vec![IotaInstance::Resilience { s: 1.0, w: 0.5 }]
        }
        (Influence::Multilinear, AxiomId::StickinessMin) => {
            vec![IotaInstance::StickinessMin { s: 0.5 }]
        }
        (
            Influence::PositiveFractional | Influence::CombinedFractional | Influence::Qmax,
            AxiomId::StickinessMin,
        ) => vec![IotaInstance::StickinessMin { s: 1.0 }],
        (
            Influence::NegativeFractional | Influence::CombinedFractional | Influence::Qmax,
            AxiomId::StickinessMax,
        ) => vec![IotaInstance::StickinessMax { s: -1.0 }],
        (_, AxiomId::Compactness) if unbounded => vec![IotaInstance::Compactness],
        (Influence::Euler, AxiomId::StickinessMax) => {
            vec![IotaInstance::StickinessMax { s: 0.0 }]
        }
        (Influence::Linear { .. } | Influence::Sigmoid { .. }, AxiomId::StickinessMin) => {
            vec![IotaInstance::StickinessMin { s: 0.0 }]
        }
        (Influence::Linear { .. } | Influence::Sigmoid { .. }, AxiomId::StickinessMax) => {
            vec![IotaInstance::StickinessMax { s: 0.0 }]
        }
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_stored_alpha_case_is_a_violation() {
        for agg in Aggregator::ALL {
            let f = AlphaFn::Shipped(agg);
            for axiom in AxiomId::ALL {
                for s in stored_alpha(&f, axiom) {
                    assert_eq!(s.instance.axiom(), axiom);
                    let out = s.instance.evaluate(&f, s.unrestricted);
                    assert!(out.is_violated(), "{agg} {axiom}: {out:?}");
                }
            }
        }
    }

    #[test]
    fn every_stored_iota_case_is_a_violation() {
        let kinds = [
            Influence::Multilinear,
            Influence::PositiveFractional,
            Influence::NegativeFractional,
            Influence::CombinedFractional,
            Influence::Euler,
            Influence::Linear { delta: 2.0 },
            Influence::Sigmoid { delta: 2.0 },
            Influence::Qmax,
        ];
        for inf in kinds {
            let f = IotaFn::Shipped(inf);
            for axiom in AxiomId::ALL {
                for s in stored_iota(&f, axiom) {
                    assert_eq!(s.axiom(), axiom);
                    assert!(s.evaluate(&f).is_violated(), "{inf} {axiom}");
                }
            }
        }
    }

    #[test]
    fn reward_counting_numbers() {
        // n = 1, s = 1.9 against n = 2, s = 2
        let f = Aggregator::Reward;
        assert!((f.formula(&[1, 1, -1], &[1.0, 1.0, 0.1]).unwrap() - 0.95).abs() < 1e-15);
        assert!((f.formula(&[1, 1, 0], &[1.0, 1.0, 0.1]).unwrap() - 0.75).abs() < 1e-15);
    }
}

// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::aggregators::{Aggregator, Polarity};
use crate::error::EngineError;
use crate::graph::{SignMatrix, Wasa};
use crate::influences::{Influence, SRange};

/// An (α, ι) pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Semantics {
    pub name: Option<String>,
    pub aggregator: Aggregator,
    pub influence: Influence,
}

impl Semantics {
    /// σ-aggregators take degrees in (-1,1), so they need an influence whose
    /// values stay there.
    pub fn new(aggregator: Aggregator, influence: Influence) -> Result<Self, EngineError> {
        if aggregator.uses_sigma()
            && !influence
                .value_domain()
                .is_subset_of(&aggregator.degree_domain())
        {
            return Err(EngineError::Incompatible {
                aggregator: aggregator.to_string(),
                influence: influence.to_string(),
                reason: "degrees must stay inside (-1,1)",
            });
        }
        Ok(Semantics {
            name: None,
            aggregator,
            influence,
        })
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("{} + {}", self.aggregator, self.influence),
        }
    }

    /// Parent sign restriction implied by both components.
    pub fn polarity(&self) -> Polarity {
        match (self.aggregator.polarity(), self.influence.s_range()) {
            (Polarity::Any, SRange::NonNegative) => Polarity::SupportsOnly,
            (Polarity::Any, SRange::NonPositive) => Polarity::AttacksOnly,
            (p, _) => p,
        }
    }

    /// Rejects weights outside the influence domain and parent signs the
    /// semantics cannot handle.
    pub fn check_inputs(&self, wasa: &Wasa) -> Result<(), EngineError> {
        let domain = self.influence.value_domain();
        for (index, &weight) in wasa.weights().iter().enumerate() {
            if !domain.contains(weight) {
                return Err(EngineError::WeightOutsideDomain {
                    index,
                    weight,
                    domain: domain.to_string(),
                });
            }
        }
        let polarity = self.polarity();
        for (index, row) in wasa.matrix().rows().enumerate() {
            if let Some(&sign) = row.iter().find(|&&s| !polarity.admits(s)) {
                return Err(EngineError::Polarity {
                    semantics: self.label(),
                    required: polarity.as_str(),
                    index,
                    sign,
                });
            }
        }
        Ok(())
    }

    /// One application of `f ↦ ι(α(G, f), w)`. `iteration` is the index of
    /// the iterate being produced.
    pub fn step(
        &self,
        g: &SignMatrix,
        f: &[f64],
        w: &[f64],
        iteration: usize,
    ) -> Result<Vec<f64>, EngineError> {
        let domain = self.influence.value_domain();
        let mut next = Vec::with_capacity(f.len());
        for (index, row) in g.rows().enumerate() {
            let s =
                self.aggregator
                    .evaluate(row, f)
                    .map_err(|source| EngineError::Aggregation {
                        iteration,
                        index,
                        source,
                    })?;
            if !s.is_finite() {
                return Err(EngineError::NonFinite { iteration, index });
            }
            let v =
                self.influence
                    .evaluate(s, w[index])
                    .map_err(|source| EngineError::Influence {
                        iteration,
                        index,
                        source,
                    })?;
            if !v.is_finite() {
                return Err(EngineError::NonFinite { iteration, index });
            }
            if !domain.contains(v) {
                return Err(EngineError::LeftDomain {
                    iteration,
                    index,
                    value: v,
                    domain: domain.to_string(),
                });
            }
            next.push(v);
        }
        Ok(next)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub aggregator: Aggregator,
    pub influence: &'static str,
    pub needs_delta: bool,
    /// Meant for graphs that mix supports and attacks.
    pub bipolar: bool,
}

const fn entry(
    name: &'static str,
    aggregator: Aggregator,
    influence: &'static str,
    needs_delta: bool,
    bipolar: bool,
) -> RegistryEntry {
    RegistryEntry {
        name,
        aggregator,
        influence,
        needs_delta,
        bipolar,
    }
}

pub const REGISTRY: [RegistryEntry; 15] = [
    entry(
        "aggregation-based",
        Aggregator::Sum,
        "positive-fractional",
        false,
        false,
    ),
    entry(
        "weighted-h-categorizer",
        Aggregator::Sum,
        "negative-fractional",
        false,
        false,
    ),
    entry(
        "combined-h-categorizer",
        Aggregator::Sum,
        "combined-fractional",
        false,
        false,
    ),
    entry("top-based", Aggregator::Top, "multilinear", false, false),
    entry(
        "weighted-max-based",
        Aggregator::Top,
        "negative-fractional",
        false,
        false,
    ),
    entry(
        "reward-based",
        Aggregator::Reward,
        "multilinear",
        false,
        false,
    ),
    entry(
        "card-based",
        Aggregator::Card,
        "negative-fractional",
        false,
        false,
    ),
    entry("euler", Aggregator::Sum, "euler", false, true),
    entry("max-euler", Aggregator::Top, "euler", false, true),
    entry("direct", Aggregator::Sum, "linear", true, true),
    entry("positive-direct", Aggregator::SumPos, "linear", true, true),
    entry(
        "sigmoid-direct",
        Aggregator::SumSigma,
        "sigmoid",
        true,
        true,
    ),
    entry("damped-max", Aggregator::Top, "linear", true, true),
    entry(
        "sigmoid-damped-max",
        Aggregator::TopSigma,
        "sigmoid",
        true,
        true,
    ),
    entry("quadratic-energy", Aggregator::Sum, "qmax", false, true),
];

pub const UNIPOLAR: [&str; 7] = [
    "aggregation-based",
    "weighted-h-categorizer",
    "combined-h-categorizer",
    "top-based",
    "weighted-max-based",
    "reward-based",
    "card-based",
];

pub const BIPOLAR: [&str; 8] = [
    "euler",
    "max-euler",
    "direct",
    "positive-direct",
    "sigmoid-direct",
    "damped-max",
    "sigmoid-damped-max",
    "quadratic-energy",
];

/// The seven rows of the standard comparison on `ex2`.
pub const COMPARISON_ROWS: [&str; 7] = [
    "euler",
    "max-euler",
    "direct",
    "positive-direct",
    "sigmoid-direct",
    "damped-max",
    "sigmoid-damped-max",
];

/// Named semantics. `delta` is required by the damped ones.
pub fn registry(name: &str, delta: Option<f64>) -> Result<Semantics, EngineError> {
    let e = REGISTRY
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| EngineError::UnknownSemantics(name.to_string()))?;
    if e.needs_delta && delta.is_none() {
        return Err(EngineError::MissingDelta(name.to_string()));
    }
    let influence = Influence::from_name(e.influence, delta)
        .map_err(|err| EngineError::Parameter(err.to_string()))?;
    Ok(Semantics::new(e.aggregator, influence)?.named(name))
}

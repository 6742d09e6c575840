// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded random graphs for sweeps and property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aggregators::Polarity;
use crate::domain::ValueDomain;
use crate::error::GraphError;
use crate::graph::{Wasa, WasaParts};

/// Independent stream for one trial, so trials can be replayed or run in
/// any order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform draw from `[lo, hi]` that also lands inside `domain`.
pub fn draw_in(rng: &mut impl Rng, lo: f64, hi: f64, domain: &ValueDomain) -> f64 {
    loop {
        let x = if lo < hi {
            rng.random_range(lo..=hi)
        } else {
            lo
        };
        if domain.contains(x) {
            return x;
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphSpec {
    pub n_min: usize,
    pub n_max: usize,
    /// Probability that a given ordered pair is an edge.
    pub edge_probability: f64,
    pub polarity: Polarity,
    pub acyclic: bool,
    pub allow_self_loops: bool,
    /// Edges beyond this many parents are dropped.
    pub max_indegree: Option<usize>,
    /// Box the weights are drawn from, intersected with `domain`.
    pub weights: (f64, f64),
    pub domain: ValueDomain,
}

impl Default for GraphSpec {
    fn default() -> Self {
        GraphSpec {
            n_min: 1,
            n_max: 8,
            edge_probability: 0.3,
            polarity: Polarity::Any,
            acyclic: false,
            allow_self_loops: true,
            max_indegree: None,
            weights: (0.0, 1.0),
            domain: ValueDomain::unit(),
        }
    }
}

impl GraphSpec {
    pub fn acyclic(mut self) -> Self {
        self.acyclic = true;
        self
    }

    pub fn with_size(mut self, n_min: usize, n_max: usize) -> Self {
        self.n_min = n_min;
        self.n_max = n_max;
        self
    }

    pub fn with_max_indegree(mut self, k: usize) -> Self {
        self.max_indegree = Some(k);
        self
    }

    pub fn with_weights(mut self, lo: f64, hi: f64, domain: ValueDomain) -> Self {
        self.weights = (lo, hi);
        self.domain = domain;
        self
    }

    pub fn with_polarity(mut self, polarity: Polarity) -> Self {
        self.polarity = polarity;
        self
    }

    pub fn with_edge_probability(mut self, p: f64) -> Self {
        self.edge_probability = p;
        self
    }
}

fn sign(rng: &mut impl Rng, polarity: Polarity) -> i8 {
    match polarity {
        Polarity::Any => {
            if rng.random_bool(0.5) {
                1
            } else {
                -1
            }
        }
        Polarity::SupportsOnly => 1,
        Polarity::AttacksOnly => -1,
    }
}

/// Draws a graph. Acyclic graphs follow a random topological order, with
/// parents always earlier than their children.
pub fn random_wasa(rng: &mut impl Rng, spec: &GraphSpec) -> Result<Wasa, GraphError> {
    let n = rng.random_range(spec.n_min..=spec.n_max.max(spec.n_min));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut g = vec![vec![0i8; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        let mut parents: Vec<usize> = (0..n)
            .filter(|&j| {
                if spec.acyclic {
                    rank[j] < rank[i]
                } else {
                    spec.allow_self_loops || j != i
                }
            })
            .filter(|_| rng.random_bool(spec.edge_probability))
            .collect();
        if let Some(k) = spec.max_indegree {
            parents.shuffle(rng);
            parents.truncate(k);
        }
        for j in parents {
            row[j] = sign(rng, spec.polarity);
        }
    }
    let (lo, hi) = spec.weights;
    let w = (0..n).map(|_| draw_in(rng, lo, hi, &spec.domain)).collect();
    Wasa::from_parts(WasaParts {
        labels: (1..=n).map(|i| format!("a{i}")).collect(),
        g,
        w,
        domain: spec.domain,
    })
}

// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Concrete instances of each characteristic and their evaluation.

use itertools::Itertools;
use serde::Serialize;

use super::functions::{AlphaFn, IotaFn};
use super::AxiomId;

/// Relative slack for equalities and non-strict inequalities. Strict
/// inequalities are compared exactly.
pub const SLACK: f64 = 1e-12;

fn scale(a: f64, b: f64) -> f64 {
    SLACK * 1f64.max(a.abs()).max(b.abs())
}

fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= scale(a, b)
}

fn approx_le(a: f64, b: f64) -> bool {
    a <= b + scale(a, b)
}

fn sgn(x: f64, tol: f64) -> i8 {
    if x.abs() <= tol {
        0
    } else if x > 0.0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub relation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    /// The premise is false, so the instance says nothing.
    Vacuous,
    Violated(Violation),
    /// The function rejected the inputs.
    Inapplicable {
        reason: String,
    },
}

impl Outcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, Outcome::Violated(_))
    }

    fn check(ok: bool, lhs: f64, rhs: f64, relation: &'static str) -> Outcome {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Violated(Violation {
                lhs: Some(lhs),
                rhs: Some(rhs),
                relation,
                note: None,
            })
        }
    }

    fn eq(lhs: f64, rhs: f64) -> Outcome {
        Outcome::check(approx_eq(lhs, rhs), lhs, rhs, "=")
    }

    fn le(lhs: f64, rhs: f64) -> Outcome {
        Outcome::check(approx_le(lhs, rhs), lhs, rhs, "≤")
    }

    fn lt(lhs: f64, rhs: f64) -> Outcome {
        Outcome::check(lhs < rhs, lhs, rhs, "<")
    }

    fn missing(relation: &'static str, note: String) -> Outcome {
        Outcome::Violated(Violation {
            lhs: None,
            rhs: None,
            relation,
            note: Some(note),
        })
    }
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => {
                return Outcome::Inapplicable {
                    reason: err.to_string(),
                }
            }
        }
    };
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AlphaInstance {
    /// `α(gP⁻¹, Pd) = α(g, d)`; entry `i` moves to `perm[i]`.
    Anonymity2 {
        g: Vec<i8>,
        d: Vec<f64>,
        perm: Vec<usize>,
    },
    /// Padding with an unrelated argument of degree `x` changes nothing.
    Independence { g: Vec<i8>, d: Vec<f64>, x: f64 },
    /// `d¹ ≤_g d² → α(g,d¹) ≤ α(g,d²)`
    ReinforcementAlpha {
        g: Vec<i8>,
        d1: Vec<f64>,
        d2: Vec<f64>,
    },
    /// `d ≥ 0 ∧ g₁ ≤ g₂ → α(g₁,d) ≤ α(g₂,d)`
    ParentMonotonicityAlpha {
        g1: Vec<i8>,
        g2: Vec<i8>,
        d: Vec<f64>,
    },
    /// `α(0, d) = 0`
    StabilityAlpha { d: Vec<f64> },
    /// `|α(g, d + h·eᵢ) − α(g, d)| ≤ L·|h|`
    ContinuityAlpha {
        g: Vec<i8>,
        d: Vec<f64>,
        index: usize,
        h: f64,
    },
    /// A parent of degree 0 can be rewired freely.
    Neutrality {
        g: Vec<i8>,
        g2: Vec<i8>,
        d: Vec<f64>,
        k: usize,
    },
    /// Attackers matched by at least as strong supporters give `α ≥ 0`.
    StrengtheningAlpha { g: Vec<i8>, d: Vec<f64> },
    /// Supporters matched by at least as strong attackers give `α ≤ 0`.
    WeakeningAlpha { g: Vec<i8>, d: Vec<f64> },
    /// `d¹ ≡_g d² → α(g,d¹) = α(g,d²)`
    Directionality {
        g: Vec<i8>,
        d1: Vec<f64>,
        d2: Vec<f64>,
    },
    /// An attacker and a supporter of equal degree cancel out.
    Franklin {
        g: Vec<i8>,
        d: Vec<f64>,
        i: usize,
        j: usize,
    },
    /// `sgn(α(g,d) − α(h,d)) = sgn(g_k − h_k)` for rows differing at `k`.
    Counting {
        g: Vec<i8>,
        h: Vec<i8>,
        d: Vec<f64>,
        k: usize,
    },
    /// `α(g,d) = α(−g,−d)`
    Symmetry { g: Vec<i8>, d: Vec<f64> },
}

impl AlphaInstance {
    pub fn axiom(&self) -> AxiomId {
        match self {
            AlphaInstance::Anonymity2 { .. } => AxiomId::Anonymity2,
            AlphaInstance::Independence { .. } => AxiomId::Independence,
            AlphaInstance::ReinforcementAlpha { .. } => AxiomId::ReinforcementAlpha,
            AlphaInstance::ParentMonotonicityAlpha { .. } => AxiomId::ParentMonotonicityAlpha,
            AlphaInstance::StabilityAlpha { .. } => AxiomId::StabilityAlpha,
            AlphaInstance::ContinuityAlpha { .. } => AxiomId::ContinuityAlpha,
            AlphaInstance::Neutrality { .. } => AxiomId::Neutrality,
            AlphaInstance::StrengtheningAlpha { .. } => AxiomId::StrengtheningAlpha,
            AlphaInstance::WeakeningAlpha { .. } => AxiomId::WeakeningAlpha,
            AlphaInstance::Directionality { .. } => AxiomId::Directionality,
            AlphaInstance::Franklin { .. } => AxiomId::Franklin,
            AlphaInstance::Counting { .. } => AxiomId::Counting,
            AlphaInstance::Symmetry { .. } => AxiomId::Symmetry,
        }
    }

    /// Evaluates the instance. `unrestricted` lifts the unipolar checks of
    /// reward and card; symmetry always runs that way since its mirror image
    /// leaves any unipolar region.
    pub fn evaluate(&self, f: &AlphaFn, unrestricted: bool) -> Outcome {
        let alpha = |g: &[i8], d: &[f64]| {
            if unrestricted {
                f.apply_unrestricted(g, d)
            } else {
                f.apply(g, d)
            }
        };
        match self {
            AlphaInstance::Anonymity2 { g, d, perm } => {
                let mut gp = vec![0; g.len()];
                let mut dp = vec![0.0; d.len()];
                for (i, &p) in perm.iter().enumerate() {
                    gp[p] = g[i];
                    dp[p] = d[i];
                }
                Outcome::eq(attempt!(alpha(&gp, &dp)), attempt!(alpha(g, d)))
            }
            AlphaInstance::Independence { g, d, x } => {
                let base = attempt!(alpha(g, d));
                let front_g: Vec<i8> = std::iter::once(0).chain(g.iter().copied()).collect();
                let front_d: Vec<f64> = std::iter::once(*x).chain(d.iter().copied()).collect();
                let front = attempt!(alpha(&front_g, &front_d));
                if !approx_eq(front, base) {
                    return Outcome::eq(front, base);
                }
                let back_g: Vec<i8> = g.iter().copied().chain(std::iter::once(0)).collect();
                let back_d: Vec<f64> = d.iter().copied().chain(std::iter::once(*x)).collect();
                Outcome::eq(base, attempt!(alpha(&back_g, &back_d)))
            }
            AlphaInstance::ReinforcementAlpha { g, d1, d2 } => {
                let premise = g
                    .iter()
                    .zip(d1.iter().zip(d2))
                    .all(|(&gi, (&a, &b))| f64::from(gi) * a <= f64::from(gi) * b);
                if !premise {
                    return Outcome::Vacuous;
                }
                Outcome::le(attempt!(alpha(g, d1)), attempt!(alpha(g, d2)))
            }
            AlphaInstance::ParentMonotonicityAlpha { g1, g2, d } => {
                if d.iter().any(|&x| x < 0.0) || g1.iter().zip(g2).any(|(a, b)| a > b) {
                    return Outcome::Vacuous;
                }
                Outcome::le(attempt!(alpha(g1, d)), attempt!(alpha(g2, d)))
            }
            AlphaInstance::StabilityAlpha { d } => {
                Outcome::eq(attempt!(alpha(&vec![0; d.len()], d)), 0.0)
            }
            AlphaInstance::ContinuityAlpha { g, d, index, h } => {
                let mut moved = d.clone();
                moved[*index] += h;
                let delta = (attempt!(alpha(g, &moved)) - attempt!(alpha(g, d))).abs();
                let bound = f.lipschitz(g.len()) * h.abs();
                Outcome::check(delta <= bound + SLACK, delta, bound, "|Δα| ≤ L·|h|")
            }
            AlphaInstance::Neutrality { g, g2, d, k } => {
                let premise = d.iter().all(|&x| x >= 0.0)
                    && d[*k] == 0.0
                    && (0..g.len()).all(|j| j == *k || g[j] == g2[j]);
                if !premise {
                    return Outcome::Vacuous;
                }
                Outcome::eq(attempt!(alpha(g, d)), attempt!(alpha(g2, d)))
            }
            AlphaInstance::StrengtheningAlpha { g, d } => match balance(g, d, -1) {
                None => Outcome::Vacuous,
                Some(strict) => {
                    let a = attempt!(alpha(g, d));
                    if strict {
                        Outcome::lt(0.0, a)
                    } else {
                        Outcome::le(0.0, a)
                    }
                }
            },
            AlphaInstance::WeakeningAlpha { g, d } => match balance(g, d, 1) {
                None => Outcome::Vacuous,
                Some(strict) => {
                    let a = attempt!(alpha(g, d));
                    if strict {
                        Outcome::lt(a, 0.0)
                    } else {
                        Outcome::le(a, 0.0)
                    }
                }
            },
            AlphaInstance::Directionality { g, d1, d2 } => {
                let premise = g
                    .iter()
                    .zip(d1.iter().zip(d2))
                    .all(|(&gi, (a, b))| gi == 0 || a == b);
                if !premise {
                    return Outcome::Vacuous;
                }
                Outcome::eq(attempt!(alpha(g, d1)), attempt!(alpha(g, d2)))
            }
            AlphaInstance::Franklin { g, d, i, j } => {
                if i == j || g[*i] != -g[*j] || d[*i] != d[*j] {
                    return Outcome::Vacuous;
                }
                let mut cut = g.clone();
                cut[*i] = 0;
                cut[*j] = 0;
                Outcome::eq(attempt!(alpha(g, d)), attempt!(alpha(&cut, d)))
            }
            AlphaInstance::Counting { g, h, d, k } => {
                // d_k = 0 would pit this against neutrality, so it is out of scope
                let premise = d.iter().all(|&x| x >= 0.0)
                    && d[*k] > 0.0
                    && (0..g.len()).all(|j| j == *k || g[j] == h[j]);
                if !premise {
                    return Outcome::Vacuous;
                }
                let a = attempt!(alpha(g, d));
                let b = attempt!(alpha(h, d));
                let want = (g[*k] - h[*k]).signum();
                let got = sgn(a - b, scale(a, b));
                Outcome::check(
                    got == want,
                    a - b,
                    f64::from(want),
                    "sgn(Δα) = sgn(g_k − h_k)",
                )
            }
            AlphaInstance::Symmetry { g, d } => {
                let ng: Vec<i8> = g.iter().map(|&x| -x).collect();
                let nd: Vec<f64> = d.iter().map(|&x| -x).collect();
                Outcome::eq(
                    attempt!(f.apply_unrestricted(g, d)),
                    attempt!(f.apply_unrestricted(&ng, &nd)),
                )
            }
        }
    }
}

/// Looks for a bijection matching every nonzero parent of sign `from` to a
/// nonzero parent of the opposite sign with at least the same degree.
/// Returns whether the match is strict (a surplus or a strictly stronger
/// partner), or `None` when no such bijection exists or `d ≱ 0`.
///
/// Written in the vector form: a permutation `q` places entry `q[i]` at
/// position `i`, and both `from(g,d) ≤ to(Pg,Pd)` and the same inequality
/// weighted by the degrees must hold.
fn balance(g: &[i8], d: &[f64], from: i8) -> Option<bool> {
    if d.iter().any(|&x| x < 0.0) {
        return None;
    }
    let n = g.len();
    let mark = |i: usize, sign: i8| -> f64 {
        if g[i] == sign && d[i] != 0.0 {
            1.0
        } else {
            0.0
        }
    };
    let mut found = None;
    for q in (0..n).permutations(n) {
        let mut ok = true;
        let mut strict = false;
        for i in 0..n {
            let a = mark(i, from);
            let b = mark(q[i], -from);
            let (ad, bd) = (a * d[i], b * d[q[i]]);
            if a > b || ad > bd {
                ok = false;
                break;
            }
            strict |= a < b || ad < bd;
        }
        if ok {
            if strict {
                return Some(true);
            }
            found = Some(false);
        }
    }
    found
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum IotaInstance {
    /// `s₁ < s₂ → ι(s₁,w) ≺ ι(s₂,w)`
    ReinforcementIota { s1: f64, s2: f64, w: f64 },
    /// `w₁ < w₂ → ι(s,w₁) ≺ ι(s,w₂)`
    InitialMonotonicity { s: f64, w1: f64, w2: f64 },
    /// `ι(0,w) = w`
    StabilityIota { w: f64 },
    /// A Lipschitz bound along one coordinate.
    ContinuityIota { s: f64, w: f64, ds: f64, dw: f64 },
    /// `s₁ ≤ s₂ → ι(s₁,w) ≤ ι(s₂,w)`
    ParentMonotonicityIota { s1: f64, s2: f64, w: f64 },
    /// `ι(s,w) ≠ w → s ≠ 0`
    Soundness { s: f64, w: f64 },
    /// `s > 0 → w ≺ ι(s,w)`
    StrengtheningIota { s: f64, w: f64 },
    /// `s < 0 → ι(s,w) ≺ w`
    WeakeningIota { s: f64, w: f64 },
    /// The domain has both a least and a greatest element.
    Compactness,
    /// Interior weights never reach an endpoint.
    Resilience { s: f64, w: f64 },
    /// `ι(s, Min_S) = Min_S`
    StickinessMin { s: f64 },
    /// `ι(s, Max_S) = Max_S`
    StickinessMax { s: f64 },
}

impl IotaInstance {
    pub fn axiom(&self) -> AxiomId {
        match self {
            IotaInstance::ReinforcementIota { .. } => AxiomId::ReinforcementIota,
            IotaInstance::InitialMonotonicity { .. } => AxiomId::InitialMonotonicity,
            IotaInstance::StabilityIota { .. } => AxiomId::StabilityIota,
            IotaInstance::ContinuityIota { .. } => AxiomId::ContinuityIota,
            IotaInstance::ParentMonotonicityIota { .. } => AxiomId::ParentMonotonicityIota,
            IotaInstance::Soundness { .. } => AxiomId::Soundness,
            IotaInstance::StrengtheningIota { .. } => AxiomId::StrengtheningIota,
            IotaInstance::WeakeningIota { .. } => AxiomId::WeakeningIota,
            IotaInstance::Compactness => AxiomId::Compactness,
            IotaInstance::Resilience { .. } => AxiomId::Resilience,
            IotaInstance::StickinessMin { .. } => AxiomId::StickinessMin,
            IotaInstance::StickinessMax { .. } => AxiomId::StickinessMax,
        }
    }

    pub fn evaluate(&self, f: &IotaFn) -> Outcome {
        let domain = f.value_domain();
        let prec = |a: f64, b: f64| Outcome::check(domain.prec(a, b), a, b, "≺");
        match *self {
            IotaInstance::ReinforcementIota { s1, s2, w } => {
                if !(s1 < s2) {
                    return Outcome::Vacuous;
                }
                prec(attempt!(f.apply(s1, w)), attempt!(f.apply(s2, w)))
            }
            IotaInstance::InitialMonotonicity { s, w1, w2 } => {
                if !(w1 < w2) {
                    return Outcome::Vacuous;
                }
                prec(attempt!(f.apply(s, w1)), attempt!(f.apply(s, w2)))
            }
            IotaInstance::StabilityIota { w } => Outcome::eq(attempt!(f.apply(0.0, w)), w),
            IotaInstance::ContinuityIota { s, w, ds, dw } => {
                let delta = (attempt!(f.apply(s + ds, w + dw)) - attempt!(f.apply(s, w))).abs();
                let bound = if ds != 0.0 {
                    f.lipschitz_s(w) * ds.abs()
                } else {
                    f.lipschitz_w(s) * dw.abs()
                };
                Outcome::check(delta <= bound + SLACK, delta, bound, "|Δι| ≤ L·|h|")
            }
            IotaInstance::ParentMonotonicityIota { s1, s2, w } => {
                if !(s1 <= s2) {
                    return Outcome::Vacuous;
                }
                Outcome::le(attempt!(f.apply(s1, w)), attempt!(f.apply(s2, w)))
            }
            IotaInstance::Soundness { s, w } => {
                if s != 0.0 {
                    return Outcome::Vacuous;
                }
                Outcome::eq(attempt!(f.apply(s, w)), w)
            }
            IotaInstance::StrengtheningIota { s, w } => {
                if !(s > 0.0) {
                    return Outcome::Vacuous;
                }
                prec(w, attempt!(f.apply(s, w)))
            }
            IotaInstance::WeakeningIota { s, w } => {
                if !(s < 0.0) {
                    return Outcome::Vacuous;
                }
                prec(attempt!(f.apply(s, w)), w)
            }
            IotaInstance::Compactness => {
                if domain.min_s().is_some() && domain.max_s().is_some() {
                    Outcome::Holds
                } else {
                    Outcome::missing(
                        "Min_S and Max_S exist",
                        format!("{domain} lacks a least or greatest element"),
                    )
                }
            }
            IotaInstance::Resilience { s, w } => {
                let mut applicable = false;
                if let Some(lo) = domain.min_s() {
                    if w > lo {
                        applicable = true;
                        let v = attempt!(f.apply(s, w));
                        if !(v > lo) {
                            return Outcome::check(false, v, lo, ">");
                        }
                    }
                }
                if let Some(hi) = domain.max_s() {
                    if w < hi {
                        applicable = true;
                        let v = attempt!(f.apply(s, w));
                        if !(v < hi) {
                            return Outcome::lt(v, hi);
                        }
                    }
                }
                if applicable {
                    Outcome::Holds
                } else {
                    Outcome::Vacuous
                }
            }
            IotaInstance::StickinessMin { s } => match domain.min_s() {
                Some(lo) => Outcome::eq(attempt!(f.apply(s, lo)), lo),
                None => Outcome::missing("Min_S exists", format!("{domain} has no least element")),
            },
            IotaInstance::StickinessMax { s } => match domain.max_s() {
                Some(hi) => Outcome::eq(attempt!(f.apply(s, hi)), hi),
                None => {
                    Outcome::missing("Max_S exists", format!("{domain} has no greatest element"))
                }
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Instance {
    Alpha(AlphaInstance),
    Iota(IotaInstance),
}

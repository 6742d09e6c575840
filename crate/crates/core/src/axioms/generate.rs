// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Random instances for each characteristic.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use super::functions::{AlphaFn, IotaFn};
use super::instances::{AlphaInstance, IotaInstance};
use super::AxiomId;
use crate::aggregators::Polarity;
use crate::domain::ValueDomain;

/// Minimum separation of the two sides of a strict premise, and of nonzero
/// aggregates from 0.
pub const GAP: f64 = 1e-3;

/// Largest row length for which the strengthening/weakening bijection is
/// searched exhaustively.
pub const MAX_PERMUTATION_N: usize = 6;

const ZERO_RATE: f64 = 0.10;
const ENDPOINT_RATE: f64 = 0.05;
const IOTA_ENDPOINT_RATE: f64 = 0.10;
const S_ZERO_RATE: f64 = 0.25;

/// Continuity probes start at this step and halve it each time.
const FIRST_STEP: f64 = 0.5;
const PROBE_STEPS: i32 = 24;

fn signs(p: Polarity) -> &'static [i8] {
    match p {
        Polarity::Any => &[-1, 0, 1],
        Polarity::SupportsOnly => &[0, 1],
        Polarity::AttacksOnly => &[-1, 0],
    }
}

fn uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    if lo < hi {
        rng.random_range(lo..=hi)
    } else {
        lo
    }
}

fn row(rng: &mut impl Rng, n: usize, p: Polarity) -> Vec<i8> {
    let s = signs(p);
    (0..n).map(|_| *s.choose(rng).unwrap()).collect()
}

/// A degree in `[lo, hi]`, with 0 and the endpoints injected now and then.
fn degree(rng: &mut impl Rng, (lo, hi): (f64, f64), inject: bool) -> f64 {
    if inject {
        let u: f64 = rng.random();
        if u < ZERO_RATE && lo <= 0.0 && 0.0 <= hi {
            return 0.0;
        }
        if u < ZERO_RATE + ENDPOINT_RATE {
            return if rng.random_bool(0.5) { lo } else { hi };
        }
    }
    uniform(rng, lo, hi)
}

fn degrees(rng: &mut impl Rng, n: usize, b: (f64, f64), inject: bool) -> Vec<f64> {
    (0..n).map(|_| degree(rng, b, inject)).collect()
}

fn nonneg((lo, hi): (f64, f64)) -> (f64, f64) {
    (lo.max(0.0), hi)
}

fn size(rng: &mut impl Rng, n_min: usize, n_max: usize) -> usize {
    rng.random_range(n_min..=n_max.max(n_min))
}

/// Instances for one trial. Most axioms yield one; continuity yields the
/// whole shrinking probe. Strengthening and weakening yield none when the
/// drawn row is too long for the exhaustive search.
pub fn alpha_instances(
    axiom: AxiomId,
    f: &AlphaFn,
    rng: &mut impl Rng,
    n_max: usize,
) -> Vec<AlphaInstance> {
    let p = f.polarity();
    let b = f.sampling_box();
    let n = size(rng, 1, n_max);
    let one = |i: AlphaInstance| vec![i];
    match axiom {
        AxiomId::Anonymity2 => {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            one(AlphaInstance::Anonymity2 {
                g: row(rng, n, p),
                d: degrees(rng, n, b, true),
                perm,
            })
        }
        AxiomId::Independence => one(AlphaInstance::Independence {
            g: row(rng, n, p),
            d: degrees(rng, n, b, true),
            x: degree(rng, b, true),
        }),
        AxiomId::ReinforcementAlpha => {
            let g = row(rng, n, p);
            let d1 = degrees(rng, n, b, true);
            let d2 = g
                .iter()
                .zip(&d1)
                .map(|(&gi, &x)| {
                    if rng.random_bool(0.1) {
                        return x;
                    }
                    match gi {
                        1 => uniform(rng, x, b.1),
                        -1 => uniform(rng, b.0, x),
                        _ => degree(rng, b, true),
                    }
                })
                .collect();
            one(AlphaInstance::ReinforcementAlpha { g, d1, d2 })
        }
        AxiomId::ParentMonotonicityAlpha => {
            let g1 = row(rng, n, p);
            let allowed = signs(p);
            let g2 = g1
                .iter()
                .map(|&x| {
                    let up: Vec<i8> = allowed.iter().copied().filter(|&y| y >= x).collect();
                    *up.choose(rng).unwrap()
                })
                .collect();
            one(AlphaInstance::ParentMonotonicityAlpha {
                g1,
                g2,
                d: degrees(rng, n, nonneg(b), true),
            })
        }
        AxiomId::StabilityAlpha => one(AlphaInstance::StabilityAlpha {
            d: degrees(rng, n, b, true),
        }),
        AxiomId::ContinuityAlpha => {
            let cb = f.continuity_box();
            let g = row(rng, n, p);
            let d = degrees(rng, n, cb, f.zero_in_continuity_box());
            let index = rng.random_range(0..n);
            let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            (0..PROBE_STEPS)
                .filter_map(|j| {
                    let h = sign * FIRST_STEP * 0.5f64.powi(j);
                    let moved = d[index] + h;
                    (cb.0..=cb.1)
                        .contains(&moved)
                        .then(|| AlphaInstance::ContinuityAlpha {
                            g: g.clone(),
                            d: d.clone(),
                            index,
                            h,
                        })
                })
                .collect()
        }
        AxiomId::Neutrality => {
            let g = row(rng, n, p);
            let k = rng.random_range(0..n);
            let mut d = degrees(rng, n, nonneg(b), true);
            d[k] = 0.0;
            let mut g2 = g.clone();
            g2[k] = *signs(p).choose(rng).unwrap();
            one(AlphaInstance::Neutrality { g, g2, d, k })
        }
        AxiomId::StrengtheningAlpha | AxiomId::WeakeningAlpha => {
            if n > MAX_PERMUTATION_N {
                return Vec::new();
            }
            let from = if axiom == AxiomId::StrengtheningAlpha {
                -1
            } else {
                1
            };
            let (g, d) = if rng.random_bool(0.75) {
                matched_row(rng, n, p, from, nonneg(b))
            } else {
                (row(rng, n, p), degrees(rng, n, nonneg(b), false))
            };
            if from == -1 {
                one(AlphaInstance::StrengtheningAlpha { g, d })
            } else {
                one(AlphaInstance::WeakeningAlpha { g, d })
            }
        }
        AxiomId::Directionality => {
            let g = row(rng, n, p);
            let d1 = degrees(rng, n, b, true);
            let d2 = g
                .iter()
                .zip(&d1)
                .map(|(&gi, &x)| if gi == 0 { degree(rng, b, true) } else { x })
                .collect();
            one(AlphaInstance::Directionality { g, d1, d2 })
        }
        AxiomId::Franklin => {
            let n = size(rng, 2, n_max.max(2));
            let mut g = row(rng, n, p);
            let mut d = degrees(rng, n, b, true);
            let mut pair: Vec<usize> = (0..n).collect();
            pair.shuffle(rng);
            let (i, j) = (pair[0], pair[1]);
            if p == Polarity::Any {
                if g[i] == 0 {
                    g[i] = if rng.random_bool(0.5) { 1 } else { -1 };
                }
                g[j] = -g[i];
            } else {
                // one-signed rows only admit the trivial pair
                g[i] = 0;
                g[j] = 0;
            }
            d[j] = d[i];
            one(AlphaInstance::Franklin { g, d, i, j })
        }
        AxiomId::Counting => {
            let g = row(rng, n, p);
            let k = rng.random_range(0..n);
            let nb = nonneg(b);
            let mut d = degrees(rng, n, nb, true);
            d[k] = uniform(rng, nb.0.max(GAP), nb.1);
            let others: Vec<i8> = signs(p).iter().copied().filter(|&s| s != g[k]).collect();
            let mut h = g.clone();
            h[k] = *others.choose(rng).unwrap();
            one(AlphaInstance::Counting { g, h, d, k })
        }
        AxiomId::Symmetry => one(AlphaInstance::Symmetry {
            g: row(rng, n, p),
            d: degrees(rng, n, b, true),
        }),
        _ => Vec::new(),
    }
}

/// A row where every nonzero parent of sign `from` has a distinct partner of
/// the opposite sign with strictly larger degree. Degrees are continuous so
/// exact ties do not occur.
fn matched_row(
    rng: &mut impl Rng,
    n: usize,
    p: Polarity,
    from: i8,
    (lo, hi): (f64, f64),
) -> (Vec<i8>, Vec<f64>) {
    let to = -from;
    let admits_to = p.admits(to);
    let admits_from = p.admits(from);
    let partners = if admits_to {
        rng.random_range(0..=n)
    } else {
        0
    };
    let matched = if admits_from && partners > 0 {
        rng.random_range(0..=partners.min(n - partners))
    } else {
        0
    };
    let mut g = Vec::with_capacity(n);
    let mut d = Vec::with_capacity(n);
    for _ in 0..matched {
        let x = uniform(rng, lo, lo + 0.9 * (hi - lo));
        let y = x + uniform(rng, 0.05, 1.0) * (hi - x);
        g.push(from);
        d.push(x);
        g.push(to);
        d.push(y);
    }
    for _ in matched..partners {
        g.push(to);
        d.push(uniform(rng, lo, hi));
    }
    while g.len() < n {
        g.push(0);
        d.push(uniform(rng, lo, hi));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    (
        idx.iter().map(|&i| g[i]).collect(),
        idx.iter().map(|&i| d[i]).collect(),
    )
}

/// A weight from the value domain; closed endpoints are injected now and
/// then.
fn weight(rng: &mut impl Rng, domain: &ValueDomain) -> f64 {
    let (lo, hi) = domain.finite_box(1.0);
    if rng.random_bool(IOTA_ENDPOINT_RATE) {
        let e = if rng.random_bool(0.5) {
            domain.min_s()
        } else {
            domain.max_s()
        };
        if let Some(e) = e {
            return e;
        }
    }
    loop {
        let w = uniform(rng, lo, hi);
        if domain.contains(w) {
            return w;
        }
    }
}

/// An aggregate from the box, kept at least [`GAP`] away from 0 unless it
/// is exactly 0.
fn aggregate(rng: &mut impl Rng, (lo, hi): (f64, f64), zero_rate: f64) -> f64 {
    let u: f64 = rng.random();
    if u < zero_rate && lo <= 0.0 && 0.0 <= hi {
        return 0.0;
    }
    if u < zero_rate + IOTA_ENDPOINT_RATE {
        return if rng.random_bool(0.5) { lo } else { hi };
    }
    let s = uniform(rng, lo, hi);
    if s != 0.0 && s.abs() < GAP {
        let pushed = GAP.copysign(s);
        return if (lo..=hi).contains(&pushed) {
            pushed
        } else {
            -pushed
        };
    }
    s
}

fn separated<R: Rng>(rng: &mut R, mut draw: impl FnMut(&mut R) -> f64) -> (f64, f64) {
    for _ in 0..1000 {
        let a = draw(rng);
        let b = draw(rng);
        if (a - b).abs() >= GAP {
            return if a < b { (a, b) } else { (b, a) };
        }
    }
    (0.0, 0.0)
}

pub fn iota_instances(axiom: AxiomId, f: &IotaFn, rng: &mut impl Rng) -> Vec<IotaInstance> {
    let domain = f.value_domain();
    let sb = f.s_box();
    let one = |i: IotaInstance| vec![i];
    match axiom {
        AxiomId::ReinforcementIota => {
            let (s1, s2) = separated(rng, |r| aggregate(r, sb, 0.0));
            one(IotaInstance::ReinforcementIota {
                s1,
                s2,
                w: weight(rng, &domain),
            })
        }
        AxiomId::InitialMonotonicity => {
            let (w1, w2) = separated(rng, |r| weight(r, &domain));
            one(IotaInstance::InitialMonotonicity {
                s: aggregate(rng, sb, 0.0),
                w1,
                w2,
            })
        }
        AxiomId::StabilityIota => one(IotaInstance::StabilityIota {
            w: weight(rng, &domain),
        }),
        AxiomId::ContinuityIota => {
            let s = aggregate(rng, sb, S_ZERO_RATE);
            let w = weight(rng, &domain);
            let along_s = rng.random_bool(0.5);
            let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            (0..PROBE_STEPS)
                .filter_map(|j| {
                    let h = sign * FIRST_STEP * 0.5f64.powi(j);
                    if along_s {
                        (sb.0..=sb.1)
                            .contains(&(s + h))
                            .then_some(IotaInstance::ContinuityIota {
                                s,
                                w,
                                ds: h,
                                dw: 0.0,
                            })
                    } else {
                        domain
                            .contains(w + h)
                            .then_some(IotaInstance::ContinuityIota {
                                s,
                                w,
                                ds: 0.0,
                                dw: h,
                            })
                    }
                })
                .collect()
        }
        AxiomId::ParentMonotonicityIota => {
            let s1 = aggregate(rng, sb, 0.0);
            let s2 = if rng.random_bool(0.1) {
                s1
            } else {
                aggregate(rng, sb, 0.0)
            };
            one(IotaInstance::ParentMonotonicityIota {
                s1: s1.min(s2),
                s2: s1.max(s2),
                w: weight(rng, &domain),
            })
        }
        AxiomId::Soundness => one(IotaInstance::Soundness {
            s: aggregate(rng, sb, S_ZERO_RATE),
            w: weight(rng, &domain),
        }),
        AxiomId::StrengtheningIota => one(IotaInstance::StrengtheningIota {
            s: aggregate(rng, (sb.0.max(GAP), sb.1), 0.0),
            w: weight(rng, &domain),
        }),
        AxiomId::WeakeningIota => one(IotaInstance::WeakeningIota {
            s: aggregate(rng, (sb.0, sb.1.min(-GAP)), 0.0),
            w: weight(rng, &domain),
        }),
        AxiomId::Compactness => one(IotaInstance::Compactness),
        AxiomId::Resilience => one(IotaInstance::Resilience {
            s: aggregate(rng, sb, 0.0),
            w: weight(rng, &domain),
        }),
        AxiomId::StickinessMin => one(IotaInstance::StickinessMin {
            s: aggregate(rng, sb, 0.0),
        }),
        AxiomId::StickinessMax => one(IotaInstance::StickinessMax {
            s: aggregate(rng, sb, 0.0),
        }),
        _ => Vec::new(),
    }
}

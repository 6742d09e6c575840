// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Value domains: connected real intervals that contain the neutral degree 0.

use std::fmt;

use serde::Serialize;

use crate::error::DomainError;

/// One endpoint of an interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bound {
    pub value: f64,
    pub open: bool,
}

impl Bound {
    pub const fn closed(value: f64) -> Self {
        Bound { value, open: false }
    }

    pub const fn open(value: f64) -> Self {
        Bound { value, open: true }
    }
}

/// A connected subset of the reals. A missing endpoint means unbounded on
/// that side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValueDomain {
    lo: Option<Bound>,
    hi: Option<Bound>,
}

impl ValueDomain {
    pub fn new(lo: Option<Bound>, hi: Option<Bound>) -> Result<Self, DomainError> {
        for b in lo.iter().chain(hi.iter()) {
            if !b.value.is_finite() {
                return Err(DomainError::NonFiniteEndpoint(b.value));
            }
        }
        if let (Some(l), Some(h)) = (lo, hi) {
            if l.value >= h.value {
                return Err(DomainError::Empty {
                    lo: l.value,
                    hi: h.value,
                });
            }
        }
        let d = ValueDomain { lo, hi };
        if !d.contains(0.0) {
            return Err(DomainError::MissingNeutral(d.to_string()));
        }
        Ok(d)
    }

    pub const fn reals() -> Self {
        ValueDomain { lo: None, hi: None }
    }

    /// `[0,1]`
    pub const fn unit() -> Self {
        ValueDomain {
            lo: Some(Bound::closed(0.0)),
            hi: Some(Bound::closed(1.0)),
        }
    }

    /// `[0,1)`
    pub const fn unit_half_open() -> Self {
        ValueDomain {
            lo: Some(Bound::closed(0.0)),
            hi: Some(Bound::open(1.0)),
        }
    }

    /// `[-1,1]`
    pub const fn symmetric() -> Self {
        ValueDomain {
            lo: Some(Bound::closed(-1.0)),
            hi: Some(Bound::closed(1.0)),
        }
    }

    /// `(-1,1)`
    pub const fn symmetric_open() -> Self {
        ValueDomain {
            lo: Some(Bound::open(-1.0)),
            hi: Some(Bound::open(1.0)),
        }
    }

    pub fn closed(lo: f64, hi: f64) -> Result<Self, DomainError> {
        Self::new(Some(Bound::closed(lo)), Some(Bound::closed(hi)))
    }

    pub fn lo(&self) -> Option<Bound> {
        self.lo
    }

    pub fn hi(&self) -> Option<Bound> {
        self.hi
    }

    /// Membership, exact on the stored doubles. Open endpoints use strict
    /// comparison, and non-finite values are never members.
    pub fn contains(&self, x: f64) -> bool {
        if !x.is_finite() {
            return false;
        }
        let above = match self.lo {
            None => true,
            Some(b) if b.open => x > b.value,
            Some(b) => x >= b.value,
        };
        let below = match self.hi {
            None => true,
            Some(b) if b.open => x < b.value,
            Some(b) => x <= b.value,
        };
        above && below
    }

    /// Min_S: the lower endpoint when it belongs to the domain.
    pub fn min_s(&self) -> Option<f64> {
        self.lo.filter(|b| !b.open).map(|b| b.value)
    }

    /// Max_S: the upper endpoint when it belongs to the domain.
    pub fn max_s(&self) -> Option<f64> {
        self.hi.filter(|b| !b.open).map(|b| b.value)
    }

    pub fn is_compact(&self) -> bool {
        self.min_s().is_some() && self.max_s().is_some()
    }

    /// `v ≺ w`: `v < w`, or both sit on the same existing endpoint.
    pub fn prec(&self, v: f64, w: f64) -> bool {
        v < w || (v == w && (Some(v) == self.min_s() || Some(v) == self.max_s()))
    }

    /// Finite sampling box: the endpoints, with `±span` standing in for an
    /// unbounded side.
    pub fn finite_box(&self, span: f64) -> (f64, f64) {
        (
            self.lo.map_or(-span, |b| b.value),
            self.hi.map_or(span, |b| b.value),
        )
    }

    /// Whether every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &ValueDomain) -> bool {
        let lo_ok = match (self.lo, other.lo) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a.value > b.value || (a.value == b.value && (a.open || !b.open)),
        };
        let hi_ok = match (self.hi, other.hi) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a.value < b.value || (a.value == b.value && (a.open || !b.open)),
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for ValueDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo.is_none() && self.hi.is_none() {
            return write!(f, "R");
        }
        match self.lo {
            None => write!(f, "(-inf")?,
            Some(b) => write!(f, "{}{}", if b.open { '(' } else { '[' }, b.value)?,
        }
        match self.hi {
            None => write!(f, ", inf)"),
            Some(b) => write!(f, ", {}{}", b.value, if b.open { ')' } else { ']' }),
        }
    }
}

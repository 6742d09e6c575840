// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Weighted attack/support graphs in incidence-matrix form.
//!
//! `g[i][j] = -1` means argument `j` attacks argument `i`, `+1` means it
//! supports it. Row `i` therefore lists the parents of argument `i`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::domain::ValueDomain;
use crate::error::GraphError;

/// Dense square matrix over {-1,0,1}, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn zeros(n: usize) -> Self {
        SignMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    /// Builds from rows, checking entries and shape.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self, GraphError> {
        let parts = WasaParts {
            labels: (0..rows.len()).map(|i| format!("a{}", i + 1)).collect(),
            g: rows.to_vec(),
            w: vec![0.0; rows.len()],
            domain: ValueDomain::reals(),
        };
        let report = validate(&parts);
        if !report.is_ok() {
            return Err(GraphError::Invalid(report));
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    fn from_rows_unchecked(rows: &[Vec<i8>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            entries.extend_from_slice(r);
        }
        SignMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    /// Panics on an entry outside {-1,0,1}.
    pub fn set(&mut self, i: usize, j: usize, v: i8) {
        assert!((-1..=1).contains(&v), "sign entry {v} outside {{-1,0,1}}");
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        self.rows().map(<[i8]>::to_vec).collect()
    }

    /// Number of parents of argument `i`.
    pub fn row_norm(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&v| v != 0).count()
    }

    /// Maximum row-sum norm, i.e. the maximal indegree.
    pub fn max_row_norm(&self) -> usize {
        (0..self.n).map(|i| self.row_norm(i)).max().unwrap_or(0)
    }

    pub fn has_attacks(&self) -> bool {
        self.entries.contains(&-1)
    }

    pub fn has_supports(&self) -> bool {
        self.entries.contains(&1)
    }

    /// Length (in edges) of the longest path, or `None` if there is a cycle.
    pub fn longest_path(&self) -> Option<usize> {
        let n = self.n;
        let mut indeg: Vec<usize> = (0..n).map(|i| self.row_norm(i)).collect();
        let mut depth = vec![0usize; n];
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(j) = ready.pop() {
            seen += 1;
            for i in 0..n {
                if self.get(i, j) != 0 {
                    depth[i] = depth[i].max(depth[j] + 1);
                    indeg[i] -= 1;
                    if indeg[i] == 0 {
                        ready.push(i);
                    }
                }
            }
        }
        (seen == n).then(|| depth.into_iter().max().unwrap_or(0))
    }

    pub fn is_acyclic(&self) -> bool {
        self.longest_path().is_some()
    }

    /// Whether `to` can be reached from `from` along parent→child edges.
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        let mut stack = vec![from];
        let mut seen = vec![false; self.n];
        seen[from] = true;
        while let Some(j) = stack.pop() {
            if j == to {
                return true;
            }
            for (i, s) in seen.iter_mut().enumerate() {
                if !*s && self.entries[i * self.n + j] != 0 {
                    *s = true;
                    stack.push(i);
                }
            }
        }
        false
    }
}

/// Unvalidated components of a graph, as read from a file or built by hand.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WasaParts {
    pub labels: Vec<String>,
    pub g: Vec<Vec<i8>>,
    pub w: Vec<f64>,
    pub domain: ValueDomain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Violation {
    Empty,
    RowLength {
        row: usize,
        len: usize,
        n: usize,
    },
    Entry {
        row: usize,
        col: usize,
        value: i8,
    },
    WeightCount {
        weights: usize,
        n: usize,
    },
    LabelCount {
        labels: usize,
        n: usize,
    },
    WeightOutsideDomain {
        index: usize,
        weight: f64,
        domain: String,
    },
    DuplicateLabel {
        label: String,
        first: usize,
        second: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "graph has no arguments"),
            Violation::RowLength { row, len, n } => {
                write!(f, "row {row} has {len} entries, expected {n}")
            }
            Violation::Entry { row, col, .. } => {
                write!(f, "entry outside {{-1,0,1}} at ({row},{col})")
            }
            Violation::WeightCount { weights, n } => {
                write!(f, "{weights} weights for {n} arguments")
            }
            Violation::LabelCount { labels, n } => write!(f, "{labels} labels for {n} arguments"),
            Violation::WeightOutsideDomain {
                index,
                weight,
                domain,
            } => write!(f, "weight {weight} of argument {index} is outside {domain}"),
            Violation::DuplicateLabel {
                label,
                first,
                second,
            } => write!(f, "label '{label}' used by arguments {first} and {second}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Lists every violated invariant of the parts.
pub fn validate(parts: &WasaParts) -> ValidationReport {
    let n = parts.g.len();
    let mut violations = Vec::new();
    if n == 0 {
        violations.push(Violation::Empty);
    }
    for (i, row) in parts.g.iter().enumerate() {
        if row.len() != n {
            violations.push(Violation::RowLength {
                row: i,
                len: row.len(),
                n,
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                violations.push(Violation::Entry {
                    row: i,
                    col: j,
                    value: v,
                });
            }
        }
    }
    if parts.w.len() != n {
        violations.push(Violation::WeightCount {
            weights: parts.w.len(),
            n,
        });
    }
    for (i, &w) in parts.w.iter().enumerate() {
        if !parts.domain.contains(w) {
            violations.push(Violation::WeightOutsideDomain {
                index: i,
                weight: w,
                domain: parts.domain.to_string(),
            });
        }
    }
    if parts.labels.len() != n {
        violations.push(Violation::LabelCount {
            labels: parts.labels.len(),
            n,
        });
    }
    for (i, a) in parts.labels.iter().enumerate() {
        if let Some(j) = parts.labels[..i].iter().position(|b| b == a) {
            violations.push(Violation::DuplicateLabel {
                label: a.clone(),
                first: j,
                second: i,
            });
        }
    }
    ValidationReport { violations }
}

/// A validated weighted attack/support graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Wasa {
    labels: Vec<String>,
    g: SignMatrix,
    w: Vec<f64>,
    domain: ValueDomain,
}

impl Wasa {
    pub fn from_parts(parts: WasaParts) -> Result<Self, GraphError> {
        let report = validate(&parts);
        if !report.is_ok() {
            return Err(GraphError::Invalid(report));
        }
        Ok(Wasa {
            g: SignMatrix::from_rows_unchecked(&parts.g),
            labels: parts.labels,
            w: parts.w,
            domain: parts.domain,
        })
    }

    /// Labels default to `a1, a2, …`.
    pub fn new(g: &[Vec<i8>], w: &[f64], domain: ValueDomain) -> Result<Self, GraphError> {
        Self::from_parts(WasaParts {
            labels: (1..=g.len()).map(|i| format!("a{i}")).collect(),
            g: g.to_vec(),
            w: w.to_vec(),
            domain,
        })
    }

    pub fn from_matrix(
        labels: Vec<String>,
        g: SignMatrix,
        w: Vec<f64>,
        domain: ValueDomain,
    ) -> Result<Self, GraphError> {
        Self::from_parts(WasaParts {
            labels,
            g: g.to_rows(),
            w,
            domain,
        })
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &SignMatrix {
        &self.g
    }

    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    pub fn domain(&self) -> &ValueDomain {
        &self.domain
    }

    pub fn validate(&self) -> ValidationReport {
        validate(&self.to_parts())
    }

    pub fn to_parts(&self) -> WasaParts {
        WasaParts {
            labels: self.labels.clone(),
            g: self.g.to_rows(),
            w: self.w.clone(),
            domain: self.domain,
        }
    }

    /// Same graph over another domain; fails if a weight falls outside it.
    pub fn with_domain(&self, domain: ValueDomain) -> Result<Self, GraphError> {
        let mut parts = self.to_parts();
        parts.domain = domain;
        Self::from_parts(parts)
    }

    pub fn with_weights(&self, w: Vec<f64>) -> Result<Self, GraphError> {
        let mut parts = self.to_parts();
        parts.w = w;
        Self::from_parts(parts)
    }

    pub fn indegree(&self) -> usize {
        self.g.max_row_norm()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `⟨PGP⁻¹, Pw⟩`: argument `i` moves to position `p(i)`.
    pub fn apply_isomorphism(&self, p: &Permutation) -> Result<Self, GraphError> {
        let n = self.len();
        if p.len() != n {
            return Err(GraphError::SizeMismatch {
                expected: n,
                found: p.len(),
            });
        }
        let mut g = SignMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                g.entries[p.get(i) * n + p.get(j)] = self.g.get(i, j);
            }
        }
        Ok(Wasa {
            labels: p.apply(&self.labels),
            g,
            w: p.apply(&self.w),
            domain: self.domain,
        })
    }

    /// Block-diagonal union. Labels of `other` that clash get `#2` appended
    /// until unique.
    pub fn disjoint_union(&self, other: &Wasa) -> Result<Self, GraphError> {
        if self.domain != other.domain {
            return Err(GraphError::DomainMismatch {
                left: self.domain.to_string(),
                right: other.domain.to_string(),
            });
        }
        let (na, nb) = (self.len(), other.len());
        let n = na + nb;
        let mut g = SignMatrix::zeros(n);
        for i in 0..na {
            for j in 0..na {
                g.entries[i * n + j] = self.g.get(i, j);
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                g.entries[(na + i) * n + na + j] = other.g.get(i, j);
            }
        }
        let mut taken: HashSet<String> = self.labels.iter().cloned().collect();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while taken.contains(&l) {
                l.push_str("#2");
            }
            taken.insert(l.clone());
            labels.push(l);
        }
        let mut w = self.w.clone();
        w.extend_from_slice(&other.w);
        Ok(Wasa {
            labels,
            g,
            w,
            domain: self.domain,
        })
    }
}

/// A bijection on `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self, GraphError> {
        let mut seen = vec![false; map.len()];
        for &k in &map {
            if k >= map.len() || seen[k] {
                return Err(GraphError::NotBijective(map));
            }
            seen[k] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &k) in self.map.iter().enumerate() {
            inv[k] = i;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            map: other.map.iter().map(|&k| self.map[k]).collect(),
        }
    }

    /// Moves entry `i` to position `p(i)`.
    pub fn apply<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        let mut out = xs.to_vec();
        for (i, x) in xs.iter().enumerate() {
            out[self.map[i]] = x.clone();
        }
        out
    }
}

/// Graphs used throughout the documentation and tests: `ex1`, `ex2` and
/// `exp-counter`.
pub fn builtin(name: &str) -> Result<Wasa, GraphError> {
    let (g, w, domain): (Vec<Vec<i8>>, Vec<f64>, ValueDomain) = match name {
        "ex1" => (
            vec![
                vec![0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0],
                vec![-1, 0, 0, 0, 0, 0],
                vec![0, -1, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0, -1],
                vec![0, 0, 0, 0, -1, 1],
            ],
            vec![0.0, 1.0, 0.4, 0.0, 0.5, 1.0],
            ValueDomain::symmetric(),
        ),
        "ex2" => (
            vec![
                vec![0, 0, 0, 0],
                vec![1, 1, 1, 0],
                vec![-1, -1, 0, -1],
                vec![0, -1, 0, 0],
            ],
            vec![0.8, 0.7, 0.001, 0.7],
            ValueDomain::reals(),
        ),
        "exp-counter" => (
            vec![
                vec![0, 0, 0, 0, 0],
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0],
            ],
            vec![1.0, 1.0, 1.0, 2.0, 1.0],
            ValueDomain::reals(),
        ),
        other => return Err(GraphError::UnknownBuiltin(other.to_string())),
    };
    Wasa::new(&g, &w, domain)
}

pub const BUILTINS: [&str; 3] = ["ex1", "ex2", "exp-counter"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_valid() {
        for name in BUILTINS {
            let a = builtin(name).unwrap();
            assert!(a.validate().is_ok(), "{name}");
        }
        assert!(builtin("ex3").is_err());
    }

    #[test]
    fn indegrees_of_builtins() {
        assert_eq!(builtin("ex1").unwrap().indegree(), 2);
        assert_eq!(builtin("ex2").unwrap().indegree(), 3);
        assert_eq!(builtin("exp-counter").unwrap().indegree(), 1);
        assert_eq!(SignMatrix::zeros(5).max_row_norm(), 0);
    }

    #[test]
    fn ex1_parents_of_a5() {
        let a = builtin("ex1").unwrap();
        assert_eq!(a.matrix().row(4), &[0, 0, 0, 1, 0, -1]);
        assert_eq!(a.matrix().get(2, 0), -1);
        assert_eq!(a.weights(), &[0.0, 1.0, 0.4, 0.0, 0.5, 1.0]);
    }

    #[test]
    fn ex2_weights() {
        assert_eq!(builtin("ex2").unwrap().weights(), &[0.8, 0.7, 0.001, 0.7]);
    }

    #[test]
    fn minimal_graph_is_valid() {
        assert!(Wasa::new(&[vec![0]], &[0.0], ValueDomain::unit()).is_ok());
    }

    #[test]
    fn bad_entry_is_reported_with_indices() {
        let parts = WasaParts {
            labels: vec!["a".into(), "b".into()],
            g: vec![vec![0, 2], vec![0, 0]],
            w: vec![0.0, 0.0],
            domain: ValueDomain::unit(),
        };
        let report = validate(&parts);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.to_string(), "entry outside {-1,0,1} at (0,1)");
    }

    #[test]
    fn every_violation_is_listed() {
        let parts = WasaParts {
            labels: vec!["a".into(), "a".into()],
            g: vec![vec![0, 0], vec![0]],
            w: vec![2.0, 0.0],
            domain: ValueDomain::unit(),
        };
        let report = validate(&parts);
        assert_eq!(report.violations.len(), 3, "{report}");
        assert!(validate(&WasaParts {
            labels: vec![],
            g: vec![],
            w: vec![],
            domain: ValueDomain::unit()
        })
        .violations
        .contains(&Violation::Empty));
    }

    #[test]
    fn isomorphism_identity_and_involution() {
        let a = builtin("ex2").unwrap();
        assert_eq!(a.apply_isomorphism(&Permutation::identity(4)).unwrap(), a);
        let s = Permutation::swap(4, 0, 1);
        let twice = a
            .apply_isomorphism(&s)
            .unwrap()
            .apply_isomorphism(&s)
            .unwrap();
        assert_eq!(twice, a);
        assert!(a.apply_isomorphism(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn isomorphism_moves_edges() {
        let a = builtin("ex2").unwrap();
        let b = a.apply_isomorphism(&Permutation::swap(4, 2, 3)).unwrap();
        // a4 (now at 2) is attacked by a2
        assert_eq!(b.matrix().get(2, 1), -1);
        // a3 (now at 3) is attacked by a4 (now at 2)
        assert_eq!(b.matrix().get(3, 2), -1);
        assert_eq!(b.labels()[2], "a4");
        assert_eq!(b.weights()[3], 0.001);
    }

    #[test]
    fn union_relabels_and_stays_block_diagonal() {
        let a = builtin("ex2").unwrap();
        let u = a.disjoint_union(&a).unwrap();
        assert_eq!(u.len(), 8);
        assert_eq!(u.labels()[4], "a1#2");
        assert_eq!(u.matrix().get(5, 4), 1);
        assert_eq!(u.matrix().get(5, 0), 0);
        assert_eq!(u.indegree(), 3);
        let ex1 = builtin("ex1").unwrap();
        assert!(ex1.disjoint_union(&a).is_err());
    }

    #[test]
    fn union_of_single_nodes_is_edgeless() {
        let x = Wasa::new(&[vec![0]], &[0.5], ValueDomain::unit()).unwrap();
        let u = x.disjoint_union(&x).unwrap();
        assert_eq!(u.matrix(), &SignMatrix::zeros(2));
        assert_eq!(u.weights(), &[0.5, 0.5]);
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.apply(&['a', 'b', 'c']), vec!['b', 'c', 'a']);
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
    }

    #[test]
    fn acyclicity_and_paths() {
        let c = builtin("exp-counter").unwrap();
        assert_eq!(c.matrix().longest_path(), Some(2));
        assert!(!builtin("ex2").unwrap().matrix().is_acyclic());
        assert!(!builtin("ex1").unwrap().matrix().is_acyclic());
        assert!(c.matrix().reaches(0, 2));
        assert!(!c.matrix().reaches(2, 0));
        assert!(!c.matrix().reaches(0, 4));
    }
}

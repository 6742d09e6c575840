// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! The JSON graph document. Edges read "from attacks/supports to", so an
//! attack edge `a → b` sets `G[b][a] = -1`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use wasa::graph::WasaParts;
use wasa::{Bound, DomainError, GraphError, ValueDomain, Wasa};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub domain: DomainDoc,
    pub arguments: Vec<ArgumentDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
}

/// Either the token `"R"` or an interval. A null endpoint is unbounded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DomainDoc {
    Token(Reals),
    Interval(IntervalDoc),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Reals {
    R,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalDoc {
    pub lo: Option<f64>,
    pub hi: Option<f64>,
    #[serde(default)]
    pub lo_open: bool,
    #[serde(default)]
    pub hi_open: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArgumentDoc {
    pub id: String,
    pub weight: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Attack,
    Support,
}

impl EdgeKind {
    fn sign(self) -> i8 {
        match self {
            EdgeKind::Attack => -1,
            EdgeKind::Support => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub from: String,
    pub to: String,
    pub kind: EdgeKind,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("a graph needs at least one argument")]
    NoArguments,
    #[error("argument id '{0}' appears more than once")]
    DuplicateId(String),
    #[error("weight of '{id}' is not finite")]
    NonFiniteWeight { id: String },
    #[error("edges[{edge}]: unknown argument '{id}' in field '{field}'")]
    Dangling {
        edge: usize,
        field: &'static str,
        id: String,
    },
    #[error("edges[{edge}]: second edge from '{from}' to '{to}'")]
    DuplicateEdge {
        edge: usize,
        from: String,
        to: String,
    },
    #[error("edges[{edge}]: '{from}' cannot both attack and support '{to}'")]
    AttackAndSupport {
        edge: usize,
        from: String,
        to: String,
    },
    #[error("domain: {0}")]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl DomainDoc {
    fn to_domain(&self) -> Result<ValueDomain, DomainError> {
        match self {
            DomainDoc::Token(Reals::R) => Ok(ValueDomain::reals()),
            DomainDoc::Interval(i) => ValueDomain::new(
                i.lo.map(|value| Bound {
                    value,
                    open: i.lo_open,
                }),
                i.hi.map(|value| Bound {
                    value,
                    open: i.hi_open,
                }),
            ),
        }
    }

    fn from_domain(d: &ValueDomain) -> Self {
        if d.lo().is_none() && d.hi().is_none() {
            return DomainDoc::Token(Reals::R);
        }
        DomainDoc::Interval(IntervalDoc {
            lo: d.lo().map(|b| b.value),
            hi: d.hi().map(|b| b.value),
            lo_open: d.lo().is_some_and(|b| b.open),
            hi_open: d.hi().is_some_and(|b| b.open),
        })
    }
}

impl GraphDocument {
    pub fn to_wasa(&self) -> Result<Wasa, DocumentError> {
        if self.arguments.is_empty() {
            return Err(DocumentError::NoArguments);
        }
        let mut index = HashMap::new();
        for (i, a) in self.arguments.iter().enumerate() {
            if index.insert(a.id.as_str(), i).is_some() {
                return Err(DocumentError::DuplicateId(a.id.clone()));
            }
            if !a.weight.is_finite() {
                return Err(DocumentError::NonFiniteWeight { id: a.id.clone() });
            }
        }
        let n = self.arguments.len();
        let mut g = vec![vec![0i8; n]; n];
        for (edge, e) in self.edges.iter().enumerate() {
            let resolve = |field: &'static str, id: &str| {
                index
                    .get(id)
                    .copied()
                    .ok_or_else(|| DocumentError::Dangling {
                        edge,
                        field,
                        id: id.to_string(),
                    })
            };
            let (from, to) = (resolve("from", &e.from)?, resolve("to", &e.to)?);
            let cell = &mut g[to][from];
            if *cell != 0 {
                let (from, to) = (e.from.clone(), e.to.clone());
                return Err(if *cell == e.kind.sign() {
                    DocumentError::DuplicateEdge { edge, from, to }
                } else {
                    DocumentError::AttackAndSupport { edge, from, to }
                });
            }
            *cell = e.kind.sign();
        }
        Ok(Wasa::from_parts(WasaParts {
            labels: self.arguments.iter().map(|a| a.id.clone()).collect(),
            g,
            w: self.arguments.iter().map(|a| a.weight).collect(),
            domain: self.domain.to_domain()?,
        })?)
    }

    pub fn from_wasa(wasa: &Wasa) -> Self {
        let labels = wasa.labels();
        let g = wasa.matrix();
        let n = wasa.len();
        let mut edges = Vec::new();
        for from in 0..n {
            for to in 0..n {
                let kind = match g.get(to, from) {
                    0 => continue,
                    s if s < 0 => EdgeKind::Attack,
                    _ => EdgeKind::Support,
                };
                edges.push(EdgeDoc {
                    from: labels[from].clone(),
                    to: labels[to].clone(),
                    kind,
                });
            }
        }
        GraphDocument {
            domain: DomainDoc::from_domain(wasa.domain()),
            arguments: labels
                .iter()
                .zip(wasa.weights())
                .map(|(id, &weight)| ArgumentDoc {
                    id: id.clone(),
                    weight,
                })
                .collect(),
            edges,
        }
    }
}

pub fn parse(text: &str) -> Result<Wasa, DocumentError> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_wasa()
}

pub fn serialize(wasa: &Wasa) -> String {
    let mut s = serde_json::to_string_pretty(&GraphDocument::from_wasa(wasa))
        .expect("graph documents hold only finite numbers");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use wasa::graph::builtin;

    #[test]
    fn builtins_round_trip() {
        for name in wasa::graph::BUILTINS {
            let a = builtin(name).unwrap();
            assert_eq!(parse(&serialize(&a)).unwrap(), a, "{name}");
        }
    }

    #[test]
    fn attack_edge_sets_the_target_row() {
        let text = r#"{"domain": "R",
            "arguments": [{"id": "a", "weight": 0.5}, {"id": "b", "weight": 0.1}],
            "edges": [{"from": "a", "to": "b", "kind": "attack"}]}"#;
        let w = parse(text).unwrap();
        assert_eq!(w.matrix().get(1, 0), -1);
        assert_eq!(w.matrix().get(0, 1), 0);
    }

    #[test]
    fn attack_and_support_on_one_pair_is_rejected() {
        let text = r#"{"domain": {"lo": 0, "hi": 1},
            "arguments": [{"id": "a", "weight": 0.5}, {"id": "b", "weight": 0.1}],
            "edges": [{"from": "a", "to": "b", "kind": "attack"},
                      {"from": "a", "to": "b", "kind": "support"}]}"#;
        assert!(matches!(
            parse(text),
            Err(DocumentError::AttackAndSupport { edge: 1, .. })
        ));
    }

    #[test]
    fn empty_and_malformed_documents_are_rejected() {
        assert!(matches!(
            parse(r#"{"domain": "R", "arguments": [], "edges": []}"#),
            Err(DocumentError::NoArguments)
        ));
        let err = parse("{\n  \"domain\": \"R\",\n  \"arguments\": 3\n}").unwrap_err();
        match err {
            DocumentError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("{other}"),
        }
        let dup =
            r#"{"domain": "R", "arguments": [{"id": "a", "weight": 0}, {"id": "a", "weight": 1}]}"#;
        assert!(matches!(parse(dup), Err(DocumentError::DuplicateId(_))));
    }

    #[test]
    fn dangling_endpoint_names_the_field() {
        let text = r#"{"domain": "R", "arguments": [{"id": "a", "weight": 0}],
            "edges": [{"from": "a", "to": "z", "kind": "support"}]}"#;
        let err = parse(text).unwrap_err().to_string();
        assert!(err.contains("'to'") && err.contains("'z'"), "{err}");
    }

    #[test]
    fn weights_outside_the_domain_fail_at_parse_time() {
        let text = r#"{"domain": {"lo": 0, "hi": 1, "hi_open": true},
            "arguments": [{"id": "a", "weight": 1}]}"#;
        assert!(matches!(parse(text), Err(DocumentError::Graph(_))));
    }
}

// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Rendering of command results as aligned tables, CSV or JSON.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Three decimals, ties away from zero, and never `-0.000`.
pub fn fmt3(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let r = (x * 1000.0).round() / 1000.0;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r:.3}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Num(f64),
    /// A value that does not exist because the iteration did not settle.
    Div,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn table(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(x) => fmt3(*x),
            Cell::Div => "div".into(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(x) => {
                let x = if *x == 0.0 { 0.0 } else { *x };
                x.to_string()
            }
            Cell::Div => "div".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Section {
    pub title: Option<String>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Section {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Section {
            title: None,
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn titled(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    fn render_table(&self, out: &mut String) {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::table).collect())
            .collect();
        let cols = self.headers.len();
        let mut width: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &cells {
            for (j, c) in r.iter().enumerate().take(cols) {
                width[j] = width[j].max(c.chars().count());
            }
        }
        let numeric: Vec<bool> = (0..cols)
            .map(|j| {
                self.rows
                    .iter()
                    .any(|r| matches!(r.get(j), Some(Cell::Num(_) | Cell::Div)))
            })
            .collect();
        let line = |items: &[String], out: &mut String| {
            let mut s = String::new();
            for (j, c) in items.iter().enumerate() {
                let pad = width[j].saturating_sub(c.chars().count());
                if j > 0 {
                    s.push_str("  ");
                }
                if numeric[j] {
                    s.push_str(&" ".repeat(pad));
                    s.push_str(c);
                } else {
                    s.push_str(c);
                    s.push_str(&" ".repeat(pad));
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        if let Some(t) = &self.title {
            out.push_str(t);
            out.push('\n');
        }
        line(&self.headers, out);
        let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
        line(&rule, out);
        for r in &cells {
            line(r, out);
        }
    }
}

/// A command result in every output format.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub sections: Vec<Section>,
    /// Free-text lines printed under the tables. Not part of CSV output.
    pub notes: Vec<String>,
    pub json: Value,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Report {
            sections: Vec::new(),
            notes: Vec::new(),
            json,
        }
    }

    pub fn section(mut self, s: Section) -> Self {
        self.sections.push(s);
        self
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut out = String::new();
                for (i, s) in self.sections.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    s.render_table(&mut out);
                }
                if !self.notes.is_empty() {
                    if !self.sections.is_empty() {
                        out.push('\n');
                    }
                    for n in &self.notes {
                        out.push_str(n);
                        out.push('\n');
                    }
                }
                out
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .flexible(true)
                    .from_writer(Vec::new());
                for (i, s) in self.sections.iter().enumerate() {
                    if i > 0 {
                        w.write_record(None::<&[u8]>).expect("in-memory write");
                    }
                    w.write_record(&s.headers).expect("in-memory write");
                    for r in &s.rows {
                        w.write_record(r.iter().map(Cell::csv))
                            .expect("in-memory write");
                    }
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("finite report values");
                s.push('\n');
                s
            }
        }
    }
}

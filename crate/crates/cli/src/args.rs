// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "wasa",
    version,
    about = "Evaluate weighted attack/support argumentation graphs"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for every randomised check.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Convergence threshold on the sup-norm step.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long = "max-iter", global = true, default_value_t = 10_000)]
    pub max_iter: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph document (JSON).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Built-in graph: ex1, ex2 or exp-counter.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Debug, Args)]
pub struct SemanticsArgs {
    /// A registered name such as `euler` or `damped-max`, or
    /// `AGGREGATOR+INFLUENCE` such as `top+linear`.
    #[arg(long)]
    pub semantics: String,
    /// Damping for linear and sigmoid influences.
    #[arg(long)]
    pub delta: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate one semantics to its fixpoint.
    Evaluate {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        semantics: SemanticsArgs,
    },
    /// Evaluate every mixed-graph semantics side by side.
    Compare {
        #[command(flatten)]
        source: GraphSource,
        /// Include quadratic energy as well.
        #[arg(long)]
        all_bipolar: bool,
        #[arg(long, default_value_t = 2.0)]
        delta: f64,
    },
    /// Print every iterate.
    Trace {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        semantics: SemanticsArgs,
    },
    /// Check the characteristics of the shipped aggregation and influence
    /// functions.
    Axioms {
        /// all, alpha (AGG), iota (INF), or one function name.
        #[arg(long, default_value = "all")]
        target: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Largest row length drawn for aggregation inputs.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Damping used for the linear and sigmoid rows.
        #[arg(long, default_value_t = 2.0)]
        delta: f64,
        /// Run the deliberately broken functions instead.
        #[arg(long, conflicts_with = "entailments")]
        fixtures: bool,
        /// Check the implications between characteristics.
        #[arg(long)]
        entailments: bool,
    },
    /// Report which convergence certificate applies.
    Guarantee {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        semantics: SemanticsArgs,
    },
    /// Build the non-convergence witness for an influence function.
    Witness {
        #[arg(long)]
        influence: String,
        #[arg(long)]
        delta: Option<f64>,
        /// Write the graph here instead of to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

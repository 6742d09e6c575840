// Copyright 2026 The wasa Authors
// SPDX-License-Identifier: Apache-2.0

//! Graph documents, reports and the `wasa` command line.

pub mod args;
pub mod commands;
pub mod document;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

pub use args::Cli;
pub use commands::{run, CliError, ExitStatus, Rendered};
pub use report::Format;

/// Parses `args` (program name first) and runs the command. Usage errors
/// come back as `Err` with clap's message.
pub fn run_from<I, T>(args: I) -> Result<Result<Rendered, CliError>, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Ok(run(&cli))
}

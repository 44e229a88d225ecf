//! `mfwidth`: batch multifractal spectral width analysis. Subcommands
//! analyze audio or raw sample files, synthesize reference signals with
//! known scaling, group measured widths, and tally listener confusion
//! matrices.
//!
//! Exit codes: 0 success; 2 some input files failed (the rest were still
//! processed); 64 usage or parameter error; 65 unreadable or malformed
//! data.

mod analyze;
mod args;
mod cluster;
mod config;
mod confusion;
mod grid;
mod record;
mod synth;

use args::{Cli, Command};
use clap::Parser;
use std::process::ExitCode;

/// A problem with how the tool was invoked (flags, parameter domains,
/// config file contents) as opposed to a problem with the data.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 64 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    let outcome = match cli.command {
        Command::Analyze(args) => analyze::run(args),
        Command::Synth(args) => synth::run(args),
        Command::Cluster(args) => cluster::run(args),
        Command::Confusion(args) => confusion::run(args),
    };

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// 64 for usage-class failures (bad parameters or configuration), 65 for
/// data-class ones (missing, malformed, or degenerate inputs).
fn exit_code_for(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<UsageError>().is_some() {
            return 64;
        }
        if let Some(core) = cause.downcast_ref::<mfwidth_core::Error>() {
            return match core {
                mfwidth_core::Error::InvalidConfig(_)
                | mfwidth_core::Error::SignalTooShort { .. } => 64,
                _ => 65,
            };
        }
    }
    65
}

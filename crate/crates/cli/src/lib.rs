//! `gsp4kit`: exact constants, invariant suites, lattice reports, and
//! congruence-prime scans from one binary. Exit status 0 when every
//! requested check passes, 1 on a failed check, 2 on usage or input errors.

mod congruence_cmd;
mod constants_cmd;
mod lattice_cmd;
mod report;
mod verify_cmd;

pub use lattice_cmd::LatticeAction;
pub use report::{Exact, Format, Report, Section};
pub use verify_cmd::Suite;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum CmdError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Check(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => 2,
            CmdError::Check(_) => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "gsp4kit", version, about = "Exact-arithmetic toolkit reports")]
pub struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
    /// Append decimal approximations next to exact values
    #[arg(long, global = true)]
    pub approx: bool,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact pairing, norm, and discriminant constants for one weight pair
    Constants {
        /// First weight component (k ≥ kp)
        #[arg(long)]
        k: u32,
        /// Second weight component
        #[arg(long)]
        kp: u32,
        /// Square-free level
        #[arg(long, default_value_t = 1)]
        level: u64,
    },
    /// Run a named invariant suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Discriminant, dual basis, or duality verdict for a lattice file
    Lattice {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = LatticeAction::Disc)]
        action: LatticeAction,
        /// Re-localize the file's lattice at a different prime
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Scan two eigen-system files for congruence primes
    Congruence {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Compare the operators T_n with n up to this bound
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
}

/// Builds the report, writes it to stdout or --out, and converts any FAIL
/// row into exit status 1.
pub fn run(cli: &Cli) -> Result<(), CmdError> {
    let report = match &cli.command {
        Command::Constants { k, kp, level } => {
            constants_cmd::constants_report(*k, *kp, *level)?
        }
        Command::Verify { suite } => verify_cmd::verify_report(*suite)?,
        Command::Lattice { input, action, prime } => {
            lattice_cmd::lattice_report(input, *action, *prime)?
        }
        Command::Congruence { file_a, file_b, bound } => {
            congruence_cmd::congruence_report(file_a, file_b, *bound)?
        }
    };
    let text = report.render(cli.format, cli.approx);
    match &cli.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| CmdError::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(CmdError::Check("some checks failed".into()))
    }
}

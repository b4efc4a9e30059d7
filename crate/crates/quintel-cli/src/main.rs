//! Command-line front end: the verification suite, character-table
//! printing, quintic-field reports, and partial L-computations, all with
//! deterministic, machine-readable output.
//!
//! Exit status contract: 0 success / all checks pass, 1 verification or
//! computation failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod field;
mod lfun;
mod output;
mod tables;
mod verify;

use output::Format;

/// Parsed and validated invocation. Defaults: P = 10^5, s = 2.0,
/// format = text.
#[derive(Parser)]
#[command(
    name = "quintel",
    version,
    about = "Exact verification and L-function computations for quintic fields",
    propagate_version = true
)]
pub struct RunConfig {
    /// Output format for results on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for Frobenius cache files.
    #[arg(
        long,
        global = true,
        env = "QUINTEL_CACHE_DIR",
        default_value = ".quintel-cache"
    )]
    pub cache_dir: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run every verification check; exit 0 only if all sections pass.
    Verify {
        /// Corrupt the named section before reporting (test hook for the
        /// failure path).
        #[arg(long, hide = true)]
        fault_inject: Option<String>,
    },
    /// Print the seven-class, subgroup, and full matrix-group character
    /// tables, with the frozen expected seven-class table and a diff.
    Tables,
    /// Reports about a monic quintic field given by its coefficients.
    Field {
        #[command(flatten)]
        poly: PolyArg,
        #[command(subcommand)]
        what: FieldCmd,
    },
    /// Partial L-function and defect-average computations.
    Lfun {
        #[command(flatten)]
        poly: PolyArg,
        #[command(subcommand)]
        what: LfunCmd,
    },
}

/// Integer coefficients low-to-high; the default is the documented
/// example field x^5 - x^3 - x^2 + x + 1.
#[derive(Args)]
pub struct PolyArg {
    /// Comma-separated integer coefficients c0,...,c5 (low to high).
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        default_value = "1,1,-1,-1,0,1"
    )]
    pub poly: String,
}

#[derive(Subcommand)]
pub enum FieldCmd {
    /// Discriminant, signature, conjugation class, ramified primes.
    Profile,
    /// Frobenius partition and class at a single prime.
    Frobenius {
        #[arg(long)]
        p: u64,
    },
    /// Class frequencies against exact densities over all p <= pmax.
    Chebotarev {
        #[arg(long, default_value_t = 100_000)]
        pmax: u64,
    },
    /// The two hypotheses of the modularity criterion, with evidence.
    Hypotheses,
}

#[derive(Subcommand)]
pub enum LfunCmd {
    /// Truncated Euler product of L(rep, s) over unramified p <= pmax.
    Value {
        /// Row of the seven-class table.
        #[arg(long, value_enum, default_value_t = lfun::Rep::Trivial)]
        rep: lfun::Rep,
        #[arg(long, default_value_t = 2.0)]
        s: f64,
        #[arg(long, default_value_t = 100_000)]
        pmax: u64,
    },
    /// Average of the forced defect phi(p) over p <= pmax.
    PhiAverage {
        /// Similitude hypothesis: psi or psi-eta.
        #[arg(long)]
        nu: String,
        #[arg(long, default_value_t = 100_000)]
        pmax: u64,
    },
    /// The product mu_Omega(s) over a hypothetical finite prime set.
    MuOmega {
        /// Comma-separated primes of Omega (a user-supplied hypothesis;
        /// nothing here derives the true set).
        #[arg(long)]
        primes: String,
        #[arg(long, default_value_t = 2.0)]
        s: f64,
    },
}

/// Failures escaping a command, split by exit class.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: flags, polynomial, names. Exit 2.
    #[error("{0}")]
    Usage(String),
    /// The computation itself failed or refused. Exit 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> CliError {
        CliError::Usage(e.to_string())
    }

    fn failed(e: impl std::fmt::Display) -> CliError {
        CliError::Failed(e.to_string())
    }
}

fn run(cfg: RunConfig) -> Result<bool, CliError> {
    match cfg.command {
        Command::Verify { ref fault_inject } => {
            verify::cmd_verify(cfg.format, fault_inject.as_deref())
        }
        Command::Tables => tables::cmd_tables(cfg.format).map(|()| true),
        Command::Field { ref poly, ref what } => {
            field::cmd_field(&cfg, poly, what).map(|()| true)
        }
        Command::Lfun { ref poly, ref what } => lfun::cmd_lfun(&cfg, poly, what).map(|()| true),
    }
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(cfg) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e @ CliError::Failed(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

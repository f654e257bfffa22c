//! Command-line front end for `progdisc`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument error,
//! 3 I/O error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use progdisc::{Priors, ProblemSize};

pub mod commands;
pub mod record;
pub mod verify;

use record::{Emission, Format};

/// Directory used for output files when `--output` is relative or absent.
pub const OUTPUT_DIR_ENV: &str = "PROGDISC_OUTPUT_DIR";

#[derive(Debug)]
pub enum CliError {
    Argument(String),
    Io(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Argument(_) => 2,
            CliError::Io(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Argument(s) => write!(f, "argument error: {s}"),
            CliError::Io(s) => write!(f, "i/o error: {s}"),
            CliError::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "progdisc",
    version,
    about = "Programmable discriminators for unknown qubits"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SizeArgs {
    /// Program copies
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Data copies
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
}

impl SizeArgs {
    fn size(&self) -> ProblemSize {
        ProblemSize::new(self.n, self.m).expect("range checked by clap")
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_prior(s: &str) -> Result<Priors, String> {
    s.parse::<Priors>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Jordan inner products and multiplicities
    Spectrum {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Closed chain pairs with their invariants
    Chains {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Optimal unambiguous discrimination
    Unambiguous {
        #[command(flatten)]
        size: SizeArgs,
        /// Prior of the first state, decimal or p/q
        #[arg(long, value_parser = parse_prior, allow_hyphen_values = true)]
        eta: Priors,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Minimum-error discrimination
    MinError {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, value_parser = parse_prior, allow_hyphen_values = true)]
        eta: Priors,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Tabulate both strategies over a prior grid
    Scan {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, value_parser = parse_prior, default_value = "0", allow_hyphen_values = true)]
        eta_min: Priors,
        #[arg(long, value_parser = parse_prior, default_value = "1", allow_hyphen_values = true)]
        eta_max: Priors,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cross-check exact results against the dense oracle
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
        #[arg(long, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Spectrum tolerance; Helstrom uses ten times this
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn resolve_output(command: &str, out: &OutputArgs) -> Option<PathBuf> {
    let dir = std::env::var_os(OUTPUT_DIR_ENV).filter(|d| !d.is_empty());
    match (&out.output, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(Path::new(&d).join(p)),
        (Some(p), _) => Some(p.clone()),
        (None, Some(d)) => Some(Path::new(&d).join(format!("{command}.{}", out.format))),
        (None, None) => None,
    }
}

fn emit(command: &str, emission: &Emission, out: &OutputArgs) -> Result<(), CliError> {
    let text = emission.render(out.format);
    match resolve_output(command, out) {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn execute(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Spectrum { size, out } => {
            emit("spectrum", &commands::spectrum_cmd(size.size()), &out)?;
        }
        Command::Chains { size, out } => {
            emit("chains", &commands::chains_cmd(size.size())?, &out)?;
        }
        Command::Unambiguous { size, eta, out } => {
            emit(
                "unambiguous",
                &commands::report_cmd("unambiguous", size.size(), &eta),
                &out,
            )?;
        }
        Command::MinError { size, eta, out } => {
            emit(
                "min-error",
                &commands::report_cmd("min-error", size.size(), &eta),
                &out,
            )?;
        }
        Command::Scan {
            size,
            eta_min,
            eta_max,
            steps,
            out,
        } => {
            emit(
                "scan",
                &commands::scan_cmd(size.size(), &eta_min, &eta_max, steps)?,
                &out,
            )?;
        }
        Command::Verify {
            n_max,
            m_max,
            samples,
            seed,
            tol,
            out,
        } => {
            if !(tol.is_finite() && tol >= 0.0) {
                return Err(CliError::Argument(format!(
                    "--tol must be a nonnegative number, got {tol}"
                )));
            }
            let settings = verify::Settings {
                n_max,
                m_max,
                samples,
                seed,
                tol,
            };
            let (emission, passed) = verify::verify_cmd(&settings);
            emit("verify", &emission, &out)?;
            return Ok(passed);
        }
    }
    Ok(true)
}

/// Parse `args`, run the command and map the outcome to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("progdisc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

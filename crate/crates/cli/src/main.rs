//! Command-line front end over the library crate: arithmetic tables, zero
//! scans, pair-correlation statistics, explicit-formula checks, and the
//! end-to-end artifact pipelines.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numeric/accuracy error,
//! 4 I/O or data-format error. Any failure prints one machine-readable
//! JSON object to stderr. All artifact files are deterministic functions
//! of the resolved configuration.

mod commands;
mod config;
mod data;
mod emit;
mod pipelines;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{Overrides, RunConfig};

/// CLI-level error: a configuration problem caught before any library
/// call, or an error bubbled up from the library.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Lib(xiprime::Error),
    /// Library error annotated with what the CLI was touching (usually a
    /// user-supplied path); keeps the source's exit code.
    Annotated(String, xiprime::Error),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> CliError {
        CliError::Config(msg.into())
    }

    pub fn annotate(context: impl Into<String>) -> impl FnOnce(xiprime::Error) -> CliError {
        let context = context.into();
        move |e| CliError::Annotated(context, e)
    }

    /// Exit taxonomy: 2 configuration, 3 numeric, 4 I/O and data format.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Lib(e) | CliError::Annotated(_, e) => match e {
                xiprime::Error::Domain(_) | xiprime::Error::Capacity { .. } => 2,
                xiprime::Error::Accuracy(_) => 3,
                xiprime::Error::Io(_)
                | xiprime::Error::Parse { .. }
                | xiprime::Error::CacheFormat(_) => 4,
            },
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            2 => "config",
            3 => "numeric",
            _ => "io",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "{msg}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Annotated(context, e) => write!(f, "{context}: {e}"),
        }
    }
}

impl From<xiprime::Error> for CliError {
    fn from(e: xiprime::Error) -> Self {
        CliError::Lib(e)
    }
}

/// Resolved configuration plus the CLI-only knobs, shared by every
/// subcommand.
pub struct Ctx {
    pub cfg: RunConfig,
    pub table_cache: Option<PathBuf>,
}

#[derive(Parser)]
#[command(
    name = "xiprime",
    version,
    about = "Zero statistics for the completed zeta function and its derivative: \
             tables, scans, form factors, and reproducible artifact pipelines"
)]
struct Cli {
    /// Plain-text `key = value` configuration file; flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(flatten)]
    overrides: Overrides,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build or load the arithmetic table and print spot diagnostics.
    Arith(commands::ArithArgs),
    /// Scan for zeros; audit counts, interlacing, and family offsets.
    Zeros(commands::ZerosArgs),
    /// Pair-correlation form-factor curve for a stored zero set.
    Formfactor(commands::FormfactorArgs),
    /// Normalized consecutive-gap statistics for a stored zero set.
    Gaps(commands::GapsArgs),
    /// Generate synthetic spacing processes.
    Simulate(commands::SimulateArgs),
    /// Explicit-formula residual at one sample point.
    Explicit(commands::ExplicitArgs),
    /// End-to-end artifact pipelines.
    Run(pipelines::RunArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            // One parseable object on stderr; stdout stays clean.
            eprintln!(
                "{}",
                serde_json::json!({
                    "error": {
                        "kind": err.kind(),
                        "exit_code": err.exit_code(),
                        "message": err.to_string(),
                    }
                })
            );
            ExitCode::from(err.exit_code())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    // The worker pool is owned here: modules only declare what can run in
    // parallel, and fixed chunk orders keep results thread-count-invariant.
    if let Some(threads) = cli.overrides.threads {
        if threads == 0 {
            return Err(CliError::config("threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::config(format!("cannot size the worker pool: {e}")))?;
    }
    let cfg = RunConfig::resolve(cli.config.as_deref(), &cli.overrides)?;
    let ctx = Ctx {
        cfg,
        table_cache: cli.overrides.table_cache.clone(),
    };
    match &cli.command {
        Command::Arith(args) => commands::arith(&ctx, args),
        Command::Zeros(args) => commands::zeros(&ctx, args),
        Command::Formfactor(args) => commands::formfactor(&ctx, args),
        Command::Gaps(args) => commands::gaps(&ctx, args),
        Command::Simulate(args) => commands::simulate(&ctx, args),
        Command::Explicit(args) => commands::explicit(&ctx, args),
        Command::Run(args) => pipelines::run(&ctx, args),
    }
}

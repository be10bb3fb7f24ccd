//! The `fp5` command-line tool.
//!
//! Exit status: 0 on success, 1 for usage, I/O and expression syntax
//! errors, 2 when input data fails validation.

mod commands;
pub mod table;

use std::ffi::OsString;
use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::algebra::FrankParameter;
use crate::logic::MAX_TABLE_VARIABLES;
use crate::sets::NormCouple;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Syntax(String),
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Syntax(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetOp {
    Union,
    #[value(alias = "intersection")]
    Intersect,
    Complement,
    /// Translate the input into an FP5 set without further operations.
    Translate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Fuzzy,
    Ifs,
    Pfs,
    Bipolar,
    Fp5,
}

#[derive(Debug, Parser)]
#[command(name = "fp5", version, about = "Penta-valued fuzzy knowledge representation tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file (standard output when omitted).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Decimal places written for numeric columns.
    #[arg(long, default_value_t = 6)]
    pub precision: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split (mu, nu) rows into tau, phi, kappa, pi, iota.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Frank parameter: min, prod, luk or a non-negative decimal.
        #[arg(long = "s", default_value = "min", value_parser = parse_parameter)]
        s: FrankParameter,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Recombine tau, phi, kappa, pi, iota rows into (mu, nu).
    Compose {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate a five-valued expression or print its truth table.
    Logic {
        #[arg(long)]
        expr: String,
        /// Bindings such as "a=T,b=C".
        #[arg(long, conflicts_with = "table")]
        assign: Option<String>,
        #[arg(long)]
        table: bool,
        #[arg(long, default_value_t = MAX_TABLE_VARIABLES)]
        max_vars: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Union, intersection or complement of FP5 sets.
    Setop {
        #[arg(long, value_enum)]
        op: SetOp,
        #[arg(long, default_value = "minmax", value_parser = parse_couple)]
        couple: NormCouple,
        #[arg(long, value_enum, default_value_t = Kind::Fp5)]
        kind: Kind,
        /// Input set; give twice for union and intersect.
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Tabulate t-norm, t-conorm and conjugate over a square grid.
    TnormGrid {
        #[arg(long = "s", default_value = "min", value_parser = parse_parameter)]
        s: FrankParameter,
        #[arg(long)]
        step: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn parse_parameter(text: &str) -> Result<FrankParameter, String> {
    text.parse().map_err(|e: crate::algebra::ParameterError| e.to_string())
}

fn parse_couple(text: &str) -> Result<NormCouple, String> {
    text.parse()
        .map_err(|_| format!("unknown couple '{text}': expected minmax, prod, luk or frank:<s>"))
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Decompose { input, s, out } => commands::decompose(&input, s, &out),
        Command::Compose { input, out } => commands::compose(&input, &out),
        Command::Logic {
            expr,
            assign,
            table,
            max_vars,
            output,
        } => commands::logic(&expr, assign.as_deref(), table, max_vars, output.as_deref()),
        Command::Setop {
            op,
            couple,
            kind,
            input,
            out,
        } => commands::setop(op, couple, kind, &input, &out),
        Command::TnormGrid { s, step, out } => commands::tnorm_grid(s, step, &out),
    }
}

/// Parses `args`, runs the command and returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

pub fn main() -> i32 {
    main_with_args(std::env::args_os())
}

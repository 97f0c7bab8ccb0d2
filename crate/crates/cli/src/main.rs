//! `betti`: tables and figures for partition statistics and the Betti
//! distributions of Hilbert schemes of points, emitted as CSV or JSON.
//!
//! Exit codes: 0 success, 2 invalid parameters, 3 cross-check or
//! verification failure.

mod commands;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use commands::PolynomialSource;
use output::Table;

#[derive(Debug)]
pub enum CliError {
    Core(betti_core::Error),
    CrossCheckMismatch { table: Box<Table> },
    InvalidArguments(String),
    Io(std::io::Error),
}

impl From<betti_core::Error> for CliError {
    fn from(e: betti_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

#[derive(Parser)]
#[command(
    name = "betti",
    version,
    about = "Exact partition statistics, Hilbert scheme Betti distributions, and their Gumbel limits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    emit: EmitOptions,
}

#[derive(Args)]
struct EmitOptions {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Significant digits for real-valued columns
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count partitions of n by their number of parts divisible by A
    Count {
        /// Modulus A >= 2
        #[arg(long = "A")]
        modulus: u64,
        /// Number of parts divisible by A
        #[arg(long)]
        k: u64,
        /// Partition size
        #[arg(long)]
        n: u64,
        /// Count partitions with at most k multiples of A instead of exactly k
        #[arg(long)]
        at_most: bool,
        /// Also compute through the q-series route and fail on mismatch
        #[arg(long)]
        cross_check: bool,
    },
    /// Exact p_1(3;n) against its asymptotic main term
    Table1 {
        /// Values of n, comma separated
        #[arg(long = "n", value_delimiter = ',', default_values_t = [200u64, 400, 600, 800, 1000])]
        n_list: Vec<u64>,
    },
    /// The finite-n parts distribution against its Gumbel limit
    GumbelTable {
        /// Modulus A >= 2
        #[arg(long = "A", default_value_t = 2)]
        modulus: u64,
        #[arg(long, default_value_t = 600)]
        n: u64,
        /// Grid of x values, comma separated; defaults to the reference grid
        #[arg(long = "x", value_delimiter = ',')]
        xs: Option<Vec<f64>>,
    },
    /// Normalized Betti distribution point cloud
    Figure {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Poincare polynomial coefficients by half-degree
    Poincare {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Run the module invariant suites and report pass/fail per check
    Verify {
        /// Largest n compared against brute-force enumeration
        #[arg(long, default_value_t = 40)]
        max_n: u64,
        /// Hard cap on enumeration size
        #[arg(long, default_value_t = betti_core::partition::DEFAULT_ORACLE_CAP)]
        oracle_cap: u64,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// The full Hilbert scheme of the plane
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    plane: bool,
    /// Torus weight alpha (with --beta, selects the quasihomogeneous scheme)
    #[arg(long, requires = "beta")]
    alpha: Option<u64>,
    /// Torus weight beta
    #[arg(long, requires = "alpha")]
    beta: Option<u64>,
    /// Number of points n
    #[arg(long)]
    n: u64,
}

impl SourceArgs {
    fn to_source(&self) -> Result<PolynomialSource, CliError> {
        match (self.plane, self.alpha, self.beta) {
            (true, None, None) => Ok(PolynomialSource::Plane { n: self.n }),
            (false, Some(alpha), Some(beta)) => Ok(PolynomialSource::Quasihomogeneous {
                alpha,
                beta,
                n: self.n,
            }),
            _ => Err(CliError::InvalidArguments(
                "specify either --plane or both --alpha and --beta".to_string(),
            )),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let meta = build_meta(&cli);
    let run = || -> Result<(Table, usize), CliError> {
        match &cli.command {
            Command::Count {
                modulus,
                k,
                n,
                at_most,
                cross_check,
            } => Ok((
                commands::count(*modulus, *k, *n, *at_most, *cross_check)?,
                0,
            )),
            Command::Table1 { n_list } => Ok((commands::table1(n_list)?, 0)),
            Command::GumbelTable { modulus, n, xs } => {
                let grid = xs
                    .clone()
                    .unwrap_or_else(|| commands::DEFAULT_X_GRID.to_vec());
                Ok((commands::gumbel_table(*modulus, *n, &grid)?, 0))
            }
            Command::Figure { source } => Ok((commands::figure(&source.to_source()?)?, 0)),
            Command::Poincare { source } => Ok((commands::poincare(&source.to_source()?)?, 0)),
            Command::Verify { max_n, oracle_cap } => {
                let report = verify::run(*max_n, *oracle_cap);
                Ok((report.table, report.failures))
            }
        }
    };

    match run() {
        Ok((table, failures)) => {
            if let Err(e) = emit(&table, &cli.emit, meta) {
                eprintln!("error: {e:?}");
                return ExitCode::from(1);
            }
            if failures > 0 {
                eprintln!("error: {failures} verification check(s) failed");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::CrossCheckMismatch { table }) => {
            let _ = emit(&table, &cli.emit, meta);
            eprintln!("error: cross-check mismatch between computation routes");
            ExitCode::from(3)
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::InvalidArguments(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(table: &Table, options: &EmitOptions, meta: Map<String, Value>) -> std::io::Result<()> {
    let content = match options.format {
        Format::Csv => output::to_csv(table, options.precision),
        Format::Json => output::to_json(table, meta, options.precision),
    };
    output::write_output(options.out.as_deref(), &content)
}

/// The `meta` object of JSON output: the invocation and the tool version.
fn build_meta(cli: &Cli) -> Map<String, Value> {
    let mut meta = Map::new();
    let command = match &cli.command {
        Command::Count { .. } => "count",
        Command::Table1 { .. } => "table1",
        Command::GumbelTable { .. } => "gumbel-table",
        Command::Figure { .. } => "figure",
        Command::Poincare { .. } => "poincare",
        Command::Verify { .. } => "verify",
    };
    meta.insert("command".into(), Value::String(command.into()));
    let args: Vec<Value> = std::env::args().skip(1).map(Value::String).collect();
    meta.insert("args".into(), Value::Array(args));
    meta.insert(
        "precision".into(),
        Value::Number(serde_json::Number::from(cli.emit.precision as u64)),
    );
    meta.insert(
        "version".into(),
        Value::String(env!("CARGO_PKG_VERSION").into()),
    );
    meta
}

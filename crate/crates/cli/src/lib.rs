//! Command-line front end: graph generation, solvers, partition checks and
//! the claim-verification report.

pub mod commands;
pub mod error;
pub mod source;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::CliError;
use source::GraphSource;

pub const SCHEMA: &str = "1";

#[derive(Debug, Parser)]
#[command(name = "toeplitz", version, about = "Exact solvers for Toeplitz graphs and the family T_2n(W)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and export it as JSON or DOT
    Gen {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Run one solver and print a JSON result
    Solve {
        #[command(subcommand)]
        which: Solver,
    },
    /// Check whether a partition is resolving
    CheckPartition {
        #[command(flatten)]
        source: GraphSource,
        /// Parts separated by ';', 1-based labels by ',' (e.g. "1,3;2;4")
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify every claim about T_2n(W) for even n in a range
    VerifyPaper {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Time limit for each claim
        #[arg(long, default_value_t = 60.0)]
        budget_seconds: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        /// Also write the JSON report here
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Zero all elapsed times so repeated runs are byte-identical
        #[arg(long)]
        deterministic: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    /// Worker threads for the partition-dimension search
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Give up after this many seconds
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    /// Zero elapsed times so repeated runs are byte-identical
    #[arg(long)]
    pub deterministic: bool,
    /// Write the JSON here instead of standard output
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Solver {
    /// Metric dimension
    Dim {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// Partition dimension
    Pd {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// k-domination number
    Domk {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// Characteristic polynomial and integer eigenvalues
    Spectrum {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// True-twin pairs
    Twins {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// Distance-regularity with intersection numbers
    Drg {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// Isomorphism test; family graphs default to the dihedral Cayley graph
    Iso {
        #[command(flatten)]
        source: GraphSource,
        /// JSON edge list of the second graph
        #[arg(long = "with", value_name = "FILE")]
        with: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

/// What a successful command wants printed.
pub struct Output {
    pub stdout: String,
    /// JSON written to a file as well as, or instead of, standard output.
    pub file: Option<(PathBuf, String)>,
    /// Number of failed claims; non-zero turns into exit code 1.
    pub failed_claims: usize,
}

impl Output {
    /// JSON goes to `out` when given, otherwise to standard output.
    pub fn json(value: &serde_json::Value, out: Option<PathBuf>) -> Output {
        let text = serde_json::to_string_pretty(value).expect("JSON values serialize") + "\n";
        match out {
            Some(path) => Output { stdout: String::new(), file: Some((path, text)), failed_claims: 0 },
            None => Output { stdout: text, file: None, failed_claims: 0 },
        }
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Gen { source, format, out } => commands::gen(&source, format, out),
        Command::Solve { which } => commands::solve(which),
        Command::CheckPartition { source, partition, common } => commands::check_partition(&source, &partition, &common),
        Command::VerifyPaper { n_min, n_max, budget_seconds, format, out, threads, deterministic } => {
            let opts = verify::VerifyOptions { n_min, n_max, budget_seconds, threads, deterministic };
            verify::run(&opts, format, out)
        }
    }
}

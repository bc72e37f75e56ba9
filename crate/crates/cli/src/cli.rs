use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use scpart::CheckId;

/// Self-conjugate partitions: mapping, inversion, counting and identity
/// verification.
#[derive(Debug, Parser)]
#[command(name = "scpart", version)]
pub struct Cli {
    /// Output format. CSV is only available for `count`.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Print Young diagrams to stderr.
    #[arg(long, short, global = true)]
    pub verbose: bool,

    /// Also write each result to `<dir>/<command>.<format>`.
    #[arg(long, env = "SCPART_OUTPUT_DIR", global = true)]
    pub output_dir: Option<PathBuf>,

    /// Largest weight for `count` (default 10).
    #[arg(long, global = true)]
    pub max: Option<usize>,

    /// Truncation order for `series` and series checks in `verify` (default 40).
    #[arg(long, global = true)]
    pub order: Option<usize>,

    /// Seed for the randomized ring-law check.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Map a self-conjugate partition to its class index and partition.
    Map {
        /// Parts, comma separated and weakly decreasing ("" for the empty partition).
        #[arg(conflicts_with = "diagonal", required_unless_present = "diagonal")]
        parts: Option<String>,

        /// Give the partition by its diagonal hook lengths instead.
        #[arg(long)]
        diagonal: Option<String>,
    },
    /// Rebuild the self-conjugate partition from a class index and a partition.
    Inverse {
        #[arg(long)]
        m: usize,

        #[arg(long, default_value = "")]
        mu: String,
    },
    /// Tabulate a counting sequence by brute-force enumeration.
    Count(CountArgs),
    /// Run an exhaustive verification sweep.
    Verify(VerifyArgs),
    /// Expand an infinite product as a truncated power series.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,

        #[arg(long, required_if_eq_any = [("kind", "core"), ("kind", "sc2t")])]
        t: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub family: Family,

    /// Modulus for `core` and `sc-core`.
    #[arg(long, required_if_eq_any = [("family", "core"), ("family", "sc-core")])]
    pub t: Option<usize>,

    /// Moduli for `sim` and `sc-sim`, comma separated.
    #[arg(long, value_delimiter = ',', required_if_eq_any = [("family", "sim"), ("family", "sc-sim")])]
    pub ts: Vec<usize>,

    /// Class index for `sc-class`; restricts `sc-sim` to one class.
    #[arg(long, required_if_eq("family", "sc-class"))]
    pub m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Partitions.
    P,
    /// Self-conjugate partitions.
    Sc,
    /// Self-conjugate partitions of one class.
    ScClass,
    /// t-cores.
    Core,
    /// Self-conjugate t-cores.
    ScCore,
    /// Simultaneous cores.
    Sim,
    /// Self-conjugate simultaneous cores.
    ScSim,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check to run.
    #[arg(value_parser = parse_check_id, required_unless_present = "all", conflicts_with = "all")]
    pub id: Option<CheckId>,

    /// Run every check.
    #[arg(long)]
    pub all: bool,

    #[arg(long)]
    pub max_weight: Option<usize>,

    #[arg(long)]
    pub max_ordinary_weight: Option<usize>,

    #[arg(long)]
    pub max_mu_weight: Option<usize>,

    #[arg(long)]
    pub max_class: Option<usize>,

    #[arg(long)]
    pub max_index: Option<usize>,

    /// Include elapsed time in the report. Makes output non-reproducible.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// Generating function of t-cores.
    Core,
    /// Generating function of self-conjugate 2t-cores.
    Sc2t,
    /// Product side of the triangular-number identity.
    Gauss,
    /// Sum of q^(n(n+1)/2).
    Triangular,
}

fn parse_check_id(s: &str) -> Result<CheckId, String> {
    s.parse::<CheckId>().map_err(|e| {
        let known: Vec<&str> = CheckId::ALL.iter().map(|id| id.as_str()).collect();
        format!("{e}; expected one of {}", known.join(", "))
    })
}

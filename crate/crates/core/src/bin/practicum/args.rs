use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "practicum", version, about = "Practical numbers: tests, classifications and representations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Run-wide settings. Unset flags fall back to the config file, then to
/// built-in defaults.
#[derive(Debug, Args, Default)]
pub struct GlobalArgs {
    /// Output format [default: json]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// TOML file whose keys are flag names, e.g. `scan-limit = 5000`
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Where sieve bitmaps are cached
    #[arg(long, global = true, env = "PRACTICUM_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Largest sieve limit accepted [default: 1000000000]
    #[arg(long, global = true)]
    pub sieve_limit: Option<u64>,
    /// Largest input, in bits, handed to the factorizer [default: 192]
    #[arg(long, global = true)]
    pub factor_bits: Option<u64>,
    /// Largest n accepted by the subset-sum oracle [default: 1000000]
    #[arg(long, global = true)]
    pub oracle_bound: Option<u64>,
    /// Indices scanned by stream and search commands [default: 1000000]
    #[arg(long, global = true)]
    pub scan_limit: Option<u64>,
    /// Re-check results against the subset-sum oracle where it applies
    #[arg(long, global = true)]
    pub verify: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stewart verdict for N, with the chain that certifies it
    Test { n: String },
    /// Subset-sum check straight from the definition
    Oracle { n: u64 },
    /// Sieve practical numbers up to a limit and cache the bitmap
    Sieve {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// P(X), or one row per checkpoint with --report
    Count {
        x: u64,
        #[arg(long, value_delimiter = ',')]
        report: Option<Vec<u64>>,
    },
    /// Arithmetic progressions a·n + b
    #[command(subcommand)]
    Ap(ApCommand),
    /// Polynomials in general
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Quadratics a·n² + b·n + c
    #[command(subcommand)]
    Quad(QuadCommand),
    /// Write N ≡ 1 (mod 8) as a square plus a practical number
    Decompose { n: String },
    /// Members of the j-th non-representable family
    Family {
        j: u8,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Drop members m with m − 2 a square
        #[arg(long)]
        repaired: bool,
    },
    /// Smallest pair of practical numbers summing to N
    Goldbach { n: u64 },
    /// All m ≤ L with m − 2, m, m + 2 practical
    Triples {
        #[arg(long)]
        limit: u64,
    },
    /// The chain 88, 8888, 88888888, …
    Palindromic {
        #[arg(long, default_value_t = 5)]
        count: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum ApCommand {
    Classify { a: String, b: String },
    Stream {
        a: u64,
        b: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    Witness {
        a: String,
        b: String,
        #[arg(long, default_value = "1")]
        min: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyCommand {
    /// First n ≥ 1 with a non-practical value; coefficients c0,c1,… from the constant term up
    Witness {
        #[arg(value_delimiter = ',', allow_negative_numbers = true, num_args = 1)]
        coeffs: Vec<i64>,
    },
}

#[derive(Debug, Args)]
pub struct QuadArgs {
    pub a: i64,
    #[arg(allow_negative_numbers = true)]
    pub b: i64,
    #[arg(allow_negative_numbers = true)]
    pub c: i64,
}

#[derive(Debug, Subcommand)]
pub enum QuadCommand {
    Mq {
        #[command(flatten)]
        q: QuadArgs,
        p: u64,
    },
    Classify {
        #[command(flatten)]
        q: QuadArgs,
    },
    Stream {
        #[command(flatten)]
        q: QuadArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    Witness {
        #[command(flatten)]
        q: QuadArgs,
        #[arg(long, default_value = "1")]
        min: String,
    },
}

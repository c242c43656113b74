use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mdclique::{Algorithm, Backend, Config, DEFAULT_MAX_ENTRIES, DEFAULT_MAX_SUBSETS};

const EXIT_CODES: &str = "\
Exit codes:
  0  success (detect: a clique exists)
  1  detect: no clique
  2  bad flags, unreadable or malformed input
  3  memory or work limit exceeded
  4  a found clique failed re-verification
  5  counters disagreed (verify, bench)";

#[derive(Debug, Parser)]
#[command(
    name = "mdclique",
    version,
    about = "Count, detect and find fixed-size cliques with matrix-product algorithms",
    after_help = EXIT_CODES
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph and write it in edge-list format.
    Gen(GenArgs),
    /// Count K_r copies with one algorithm; prints `count=<v>`.
    Count(CountArgs),
    /// Decide whether a K_r exists; prints YES (exit 0) or NO (exit 1).
    Detect(SearchArgs),
    /// Print the vertices of one K_r copy, or `none`.
    Find(SearchArgs),
    /// Run every counter over a seeded sweep and check that they agree.
    Verify(VerifyArgs),
    /// Time algorithms on G(n, p) instances and write CSV.
    Bench(BenchArgs),
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct EngineArgs {
    /// Matrix product backend.
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Blocked)]
    pub backend: BackendArg,

    /// Tile edge for the blocked backend.
    #[arg(long, global = true, default_value_t = mdclique::matrix::DEFAULT_TILE)]
    pub tile: usize,

    /// Largest dense intermediate, in entries.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ENTRIES)]
    pub max_entries: u64,

    /// Largest number of subsets the brute-force counter may scan.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SUBSETS)]
    pub max_subsets: u64,

    /// Worker threads for matrix products.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

impl EngineArgs {
    pub fn config(&self) -> Config {
        let backend = match self.backend {
            BackendArg::Naive => Backend::Naive,
            BackendArg::Blocked => Backend::Blocked { tile: self.tile },
            BackendArg::Bitset => Backend::Bitset,
        };
        Config {
            backend,
            max_entries: self.max_entries,
            max_subsets: self.max_subsets,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Naive,
    Blocked,
    Bitset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Gnp,
    Planted,
    Complete,
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Brute,
    #[value(name = "triangles-ir")]
    TrianglesIr,
    Triangle,
    Alg1,
    Alg2,
    Alg3,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Brute => Algorithm::Brute,
            AlgoArg::TrianglesIr => Algorithm::TrianglesIr,
            AlgoArg::Triangle => Algorithm::Triangle,
            AlgoArg::Alg1 => Algorithm::Alg1,
            AlgoArg::Alg2 => Algorithm::Alg2,
            AlgoArg::Alg3 => Algorithm::Alg3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FinderArg {
    Alg1,
    Alg2,
    Alg3,
}

impl From<FinderArg> for Algorithm {
    fn from(a: FinderArg) -> Self {
        match a {
            FinderArg::Alg1 => Algorithm::Alg1,
            FinderArg::Alg2 => Algorithm::Alg2,
            FinderArg::Alg3 => Algorithm::Alg3,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Vertex count.
    #[arg(long)]
    pub n: usize,
    /// Edge probability (gnp, planted).
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Planted clique size.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; stdout when absent. The planted set goes to `<out>.planted`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    /// Edge-list or DIMACS file (detected from the header).
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum)]
    pub algo: AlgoArg,
    /// Base clique size for alg3; defaults to max(1, floor(r/3)).
    #[arg(long)]
    pub q: Option<usize>,
    /// Tensor split for alg1; defaults to ceil((r-1)/2).
    #[arg(long)]
    pub k1: Option<usize>,
    /// Append a result row to this CSV file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum)]
    pub algo: FinderArg,
    #[arg(long)]
    pub q: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [10, 14, 18, 22])]
    pub n_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [0.3, 0.5, 0.7])]
    pub p_list: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_values_t = [3, 4, 5, 6])]
    pub r_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
    pub seeds: Vec<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [32, 64])]
    pub n_list: Vec<usize>,
    #[arg(long, default_value_t = 0.1)]
    pub p: f64,
    #[arg(long, default_value_t = 4)]
    pub r: usize,
    #[arg(long, value_delimiter = ',', value_enum, default_values_t = [AlgoArg::Triangle, AlgoArg::Alg1, AlgoArg::Alg2, AlgoArg::Alg3])]
    pub algos: Vec<AlgoArg>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub k1: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Also time naive and blocked `A * A` on each instance.
    #[arg(long)]
    pub matmul: bool,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

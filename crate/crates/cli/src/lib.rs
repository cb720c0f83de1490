//! Command-line front end: reads graphs, picks and runs a solver, verifies
//! answers, generates reduction instances and reports structural parameters.

pub mod commands;
pub mod error;
pub mod formats;
pub mod policy;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twoclub_core::reductions::DEFAULT_VERTEX_BUDGET;

pub use error::CliError;
use policy::Algo;

#[derive(Debug, Parser)]
#[command(name = "twoclub", version, about = "Maximum s-club solvers, verification and instance generation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a maximum s-club, or decide whether one of size --ell exists.
    Solve(SolveArgs),
    /// Report degree statistics, degeneracy and modulator sizes.
    Params(ParamsArgs),
    /// Generate a reduction instance or a random graph.
    Generate(GenerateArgs),
    /// Check that a vertex list induces a subgraph of diameter at most s.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Graph file: edge list with 0-based ids, or DIMACS when the name ends in .col.
    #[arg(long)]
    pub input: PathBuf,
    /// Write a JSON report here (`-` for stdout).
    #[arg(long)]
    pub json_out: Option<PathBuf>,
    /// Largest vertex count accepted from input files and generators.
    #[arg(long, env = "TWO_CLUB_BUDGET", default_value_t = DEFAULT_VERTEX_BUDGET)]
    pub budget_vertices: usize,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    pub algo: Algo,
    /// Diameter bound of the club.
    #[arg(long, default_value_t = 2)]
    pub s: usize,
    /// Decide whether a club of at least this size exists; "no" exits with 1.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Modulator file (one id per line) for the modulator solvers; a greedy
    /// modulator is computed when omitted.
    #[arg(long)]
    pub modulator: Option<PathBuf>,
    /// Worker threads for solvers with independent outer loops.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Give up after this many search-tree nodes (exit code 3).
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Largest h-index the h-index solver accepts.
    #[arg(long, default_value_t = policy::HINDEX_LIMIT)]
    pub hindex_cap: usize,
    /// Write the witness here, one id per line.
    #[arg(long)]
    pub solution_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ParamsArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Solution file, one vertex id per line.
    #[arg(long)]
    pub solution: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub s: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenerateKind {
    /// From Clique (--input graph, --k).
    CliqueCover3,
    /// From Clique on graphs without isolated vertices (--input graph, --k).
    Domination2,
    /// From Maximum 2-SAT (--input formula).
    BipartitePlusOne,
    /// From Multicolored Clique (--input graph, --colors, --k).
    MccHindex,
    /// From Multicolored Clique (--input graph, --colors, --k).
    MccDegeneracy,
    /// Path padding of a 2-Club instance (--input graph, --ell, --alpha).
    AvgDegreePad,
    /// Random G(n, p) graph (--n, --p, --seed).
    Gnp,
    /// Random cograph (--n, --seed).
    Cograph,
}

impl GenerateKind {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: GenerateKind,
    /// Source instance: a graph, or a Max 2-SAT formula for bipartite-plus-one.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output graph file; metadata goes to `<out>.json` and the target size to `<out>.ell`.
    #[arg(long)]
    pub out: PathBuf,
    /// Vertex colors (`vertex color`, colors from 1) for the mcc kinds.
    #[arg(long)]
    pub colors: Option<PathBuf>,
    /// Clique size, or number of colors for the mcc kinds (default: largest color).
    #[arg(long)]
    pub k: Option<usize>,
    /// Target club size of the padded instance.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Average-degree bound of the padded instance, e.g. `3` or `5/2`.
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Replace the n^5 pad size; the metadata then warns that equivalence is not guaranteed.
    #[arg(long)]
    pub pad_big: Option<usize>,
    /// Replace the n^3 pad size, with the same warning.
    #[arg(long)]
    pub pad_small: Option<usize>,
    /// Build the anchor gadget of the mcc kinds without the repair triangles.
    #[arg(long)]
    pub literal_anchor: bool,
    /// Skip distance-based structural checks above this many vertices.
    #[arg(long, default_value_t = 2000)]
    pub check_limit: usize,
    #[arg(long, env = "TWO_CLUB_BUDGET", default_value_t = DEFAULT_VERTEX_BUDGET)]
    pub budget_vertices: usize,
    /// Write the metadata JSON here instead of `<out>.json` (`-` for stdout).
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve(a) => commands::solve(&a),
        Command::Params(a) => commands::params(&a),
        Command::Generate(a) => commands::generate(&a),
        Command::Verify(a) => commands::verify(&a),
    }
}

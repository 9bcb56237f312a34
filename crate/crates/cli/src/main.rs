mod commands;
mod io;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cbu_core::families::Params;
use cbu_core::recognition::DEFAULT_BUDGET;

/// Contact graphs of boxes with unidirectional contacts.
///
/// Exit status: 0 on success, 1 on a negative answer (non-member, no
/// labeling, failed verification), 2 on bad usage or input, 3 when the
/// search budget runs out. Set `CBU_LOG` (e.g. `CBU_LOG=debug`) for logs on
/// stderr.
#[derive(Parser)]
#[command(name = "cbu", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen {
        family: String,
        #[command(flatten)]
        params: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Decide CBU membership of a graph.
    Decide {
        #[arg(default_value = "-")]
        input: String,
        /// Search nodes before giving up.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the certificate here instead of stdout; stdout then gets a
        /// one-line verdict.
        #[arg(long)]
        certificate: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Find a homogeneous labeling of an orientation, or a reason there is
    /// none.
    CheckOrientation {
        #[arg(default_value = "-")]
        input: String,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Build a box representation.
    Build {
        #[arg(value_enum)]
        construction: Construction,
        /// Input graph, for constructions that take one.
        input: Option<String>,
        #[command(flatten)]
        params: FamilyArgs,
        /// Subdivision vertices per edge for `double-subdivision`.
        #[arg(long, default_value_t = 2)]
        count: usize,
        /// Labeling to use for `cbu`; found by search when absent.
        #[arg(long)]
        labeling: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Check that a representation realizes a graph.
    Verify {
        representation: String,
        graph: String,
    },
    /// Draw a 2-dimensional representation.
    Svg {
        #[arg(default_value = "-")]
        representation: String,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Exact invariants; all of them when no flag is given.
    Analyze {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        alpha: bool,
        #[arg(long)]
        chi: bool,
        #[arg(long)]
        chif: bool,
        #[arg(long)]
        girth: bool,
        /// Vertex limit for the fractional chromatic number.
        #[arg(long, default_value_t = cbu_core::analysis::DEFAULT_FRACTIONAL_LIMIT)]
        limit: usize,
    },
    /// Run the built-in oracle and constructor checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Default)]
struct FamilyArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
}

impl FamilyArgs {
    fn to_params(&self) -> Params {
        let all = [
            ("n", self.n),
            ("a", self.a),
            ("b", self.b),
            ("m", self.m),
            ("i", self.i),
            ("g", self.g),
            ("k", self.k),
            ("d", self.d),
            ("n1", self.n1),
            ("n2", self.n2),
            ("rows", self.rows),
            ("cols", self.cols),
        ];
        all.into_iter().filter_map(|(k, v)| v.map(|v| (k.to_string(), v))).collect()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// `n x n` grid in the plane (`--n`, or inferred from the input grid).
    #[value(name = "grid-2cbu")]
    Grid2cbu,
    /// `R'` in the plane (`--n1`, `--n2`).
    #[value(name = "r-prime-2cbu")]
    RPrime2cbu,
    /// Shift graph `H_m` in dimension `m - 1` (`--m`).
    Shift,
    /// Triangle-free outerplanar input graph in the plane.
    Outerplanar,
    /// Every edge of the input subdivided `--count` (>= 2) times, in 3D.
    DoubleSubdivision,
    /// Bipartite input graph.
    Bipartite,
    /// 1-subdivision of the input graph.
    Subdivision,
    /// Any CBU input graph, from a homogeneous labeling.
    Cbu,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

/// How a command ended, when it did not fail.
pub enum Outcome {
    Positive,
    Negative,
    BudgetExhausted,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("CBU_LOG", "warn")).init();
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(Outcome::Positive) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Ok(Outcome::BudgetExhausted) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

mod commands;
mod report;

use report::Outcome;

#[derive(Parser, Debug)]
#[command(name = "hyperreg", version, about = "Regular substructures in linear hypergraphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Master seed; every component derives its own stream from it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search budget (nodes, samples or attempts, depending on the command).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Wall-clock limit in seconds for exhaustive searches.
    #[arg(long, global = true)]
    pub time_limit: Option<f64>,
    /// Worker threads for collision search.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Write the artifact here; the report then goes to stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// JSON report instead of key=value lines.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a hypergraph.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Search a host for a substructure and emit a certificate.
    #[command(subcommand)]
    Detect(DetectCmd),
    /// Pass to a balanced partite subhypergraph.
    #[command(subcommand)]
    Regularize(RegularizeCmd),
    /// Pair lift, surface decomposition, 0-immersion search.
    #[command(subcommand)]
    Immersion(ImmersionCmd),
    /// Check a certificate against its host.
    Verify {
        /// Certificate file.
        cert: PathBuf,
        /// Host hypergraph file.
        host: PathBuf,
    },
    /// Exact oracles.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Subcommand, Debug)]
pub enum GenCmd {
    /// Steiner triple system (n = 1, 3 mod 6).
    Sts {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
    },
    /// Random linear hypergraph.
    Random {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Edge size.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Target edge count.
        #[arg(long)]
        m: usize,
    },
    /// Probabilistic construction without small r-regular subhypergraphs.
    LowerBound {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Edge size.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Degree of the regular subhypergraph.
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// Constant in the sampling probability.
        #[arg(long, default_value_t = 0.5)]
        c0: f64,
        /// Largest vertex count of the bad-subhypergraph scan.
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Instance with no 8-edge 2-regular subhypergraph.
    PaschFree {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum DetectCmd {
    /// Nonempty edge set covering every vertex an even number of times.
    Even { host: PathBuf },
    /// r-regular subhypergraph.
    Regular {
        /// Host hypergraph file.
        host: PathBuf,
        /// Degree of the regular subhypergraph.
        #[arg(long)]
        r: usize,
        /// exact or sunflower
        #[arg(long, default_value = "exact")]
        method: String,
        /// Largest witness the exact search considers.
        #[arg(long)]
        max_edges: Option<usize>,
        /// Fixed matching size for the sunflower method.
        #[arg(long)]
        t: Option<usize>,
        /// Pass to a balanced subhypergraph first.
        #[arg(long)]
        regularize: bool,
    },
    /// 2-regular subhypergraph through the coloured graph and collision search.
    TwoRegular {
        /// Host hypergraph file.
        host: PathBuf,
        /// cycles, paths, matchings or auto
        #[arg(long, default_value = "auto")]
        strategy: String,
        /// Cycle half-length and path length; chosen automatically if absent.
        #[arg(long)]
        h: Option<usize>,
        /// Sequence length; chosen automatically if absent.
        #[arg(long)]
        t: Option<usize>,
        /// Sweep sequence lengths up to this value.
        #[arg(long)]
        t_max: Option<usize>,
        #[command(flatten)]
        colouring: Colouring,
    },
    /// 2-regular subhypergraph with exactly 4l edges via the pair product graph.
    SmallTwoRegular {
        /// Host hypergraph file.
        host: PathBuf,
        /// Half the cycle length; witnesses have 4l edges.
        #[arg(long, default_value_t = 2)]
        l: usize,
        #[command(flatten)]
        colouring: Colouring,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Colouring {
    /// Which of the three classes plays the colours.
    #[arg(long, default_value_t = 0)]
    pub colour_part: usize,
    /// Local-search restarts for the tripartition.
    #[arg(long, default_value_t = 8)]
    pub restarts: usize,
}

#[derive(Subcommand, Debug)]
pub enum RegularizeCmd {
    Kpartite {
        /// Host hypergraph file.
        host: PathBuf,
    },
    EqualParts {
        /// Host hypergraph file.
        host: PathBuf,
        /// Target density; defaults to e / n.
        #[arg(long)]
        d: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ImmersionCmd {
    /// Write the pair hypergraph.
    Lift {
        /// Host hypergraph file.
        host: PathBuf,
        /// Keep pair vertices in no lifted edge.
        #[arg(long)]
        keep_isolated: bool,
    },
    /// Split a complex with 2-regular links into closed surfaces.
    Decompose { host: PathBuf },
    /// Search for a 0-immersed closed surface.
    Find { host: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    Regular {
        /// Host hypergraph file.
        host: PathBuf,
        /// Degree of the regular subhypergraph.
        #[arg(long)]
        r: usize,
        /// Largest witness the exact search considers.
        #[arg(long)]
        max_edges: Option<usize>,
    },
    Even {
        /// Host hypergraph file.
        host: PathBuf,
    },
    /// Homomorphic copies of C_2h in a graph given as a 2-uniform file.
    Homcount {
        /// Graph file.
        graph: PathBuf,
        /// Half the cycle length.
        #[arg(long)]
        h: usize,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let result = commands::run(&cli);
    eprintln!("elapsed_ms={}", start.elapsed().as_millis());
    match result {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(Outcome::Invalid.exit_code())
        }
    }
}

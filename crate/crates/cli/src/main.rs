mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Failure;

/// Customizable hub labeling pipelines over plain-text graph files.
#[derive(Debug, Parser)]
#[command(name = "cuhl", version)]
struct Cli {
    /// Worker threads for per-vertex parallel work.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Seed for every randomized generator.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph family (and optionally a metric).
    Gen(GenArgs),
    /// Compute a vertex order (nested dissection by default).
    Order(OrderArgs),
    /// Dump the chordal supergraph of a graph under an order.
    Cch(CchArgs),
    /// Build canonical hierarchical labels.
    Label(LabelArgs),
    /// Fill label distances for a metric.
    Customize(CustomizeArgs),
    /// Answer distance queries from customized labels.
    Query(QueryArgs),
    /// Check the cover property and, with --oracle, distances against Dijkstra.
    Verify(VerifyArgs),
    /// Print size statistics.
    Stats(StatsArgs),
    /// Check separator-based label-size bounds.
    Bounds(BoundsArgs),
    /// Star-clique experiment comparing hub labels with CH search spaces.
    GapExp(GapArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Grid,
    Random,
    StarClique,
    CompleteApex,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Grid rows.
    #[arg(long)]
    p: Option<usize>,
    /// Grid columns (defaults to --p).
    #[arg(long)]
    q: Option<usize>,
    /// Vertex count (random, complete-apex).
    #[arg(long)]
    n: Option<usize>,
    /// Edge count (random; defaults to 2n).
    #[arg(long)]
    m: Option<usize>,
    /// Star count and size (star-clique).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a metric: uniform random weights, or the family's own.
    #[arg(long)]
    metric_out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    min_weight: u64,
    #[arg(long, default_value_t = 100)]
    max_weight: u64,
    /// Use weights 3^(max rank of the endpoints) for this order file instead.
    #[arg(long)]
    exponential_order: Option<PathBuf>,
    /// Star-clique only: write the explicit metric hub labels.
    #[arg(long)]
    labels_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderMode {
    Heuristic,
    GridAware,
    Exact,
    MinDegree,
    Random,
}

#[derive(Debug, Args)]
struct OrderArgs {
    graph: PathBuf,
    /// Balance ratio, `p/q` or decimal.
    #[arg(long, default_value = "2/3")]
    alpha: String,
    #[arg(long, value_enum, default_value = "heuristic")]
    mode: OrderMode,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the separator decomposition.
    #[arg(long)]
    tree_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CchArgs {
    graph: PathBuf,
    #[arg(long)]
    order: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LabelArgs {
    graph: PathBuf,
    #[arg(long)]
    order: PathBuf,
    /// Build metric hub labels for this metric instead of customizable ones.
    #[arg(long)]
    metric: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CustomizeArgs {
    graph: PathBuf,
    #[arg(long)]
    labels: PathBuf,
    #[arg(long)]
    metric: PathBuf,
    /// upward, topdown, hybrid:<cutoff> or queue.
    #[arg(long, default_value = "topdown")]
    engine: String,
    /// Required by the hierarchical engines.
    #[arg(long)]
    order: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[arg(long)]
    customized: PathBuf,
    #[arg(long)]
    pairs: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    graph: PathBuf,
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Compare distances with Dijkstra (needs --metric).
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    metric: Option<PathBuf>,
    /// Customized labels to check on all pairs.
    #[arg(long)]
    customized: Option<PathBuf>,
    /// Query output to check line by line.
    #[arg(long)]
    results: Option<PathBuf>,
    /// Check the metric cover property instead of the customizable one.
    #[arg(long)]
    metric_cover: bool,
}

#[derive(Debug, Args)]
struct StatsArgs {
    graph: PathBuf,
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long)]
    order: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[command(subcommand)]
    check: BoundsCheck,
}

#[derive(Debug, Subcommand)]
enum BoundsCheck {
    /// Lower bounds from the exact minimum 2/3-balanced separator (n ≤ 18).
    Lower {
        graph: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        /// Check only the bound that holds for any labeling.
        #[arg(long)]
        general: bool,
    },
    /// Nested dissection against the optimal order (n ≤ 8).
    Nd { graph: PathBuf },
    /// Label sizes of nested dissection on the p×p grid.
    Grid {
        #[arg(long)]
        p: usize,
        /// Use the generic heuristic separators.
        #[arg(long)]
        heuristic: bool,
    },
}

#[derive(Debug, Args)]
struct GapArgs {
    /// Comma-separated star sizes.
    #[arg(long, value_delimiter = ',', default_value = "4,8,12,16")]
    k: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn init_logging() {
    let level = match std::env::var("CUHL_LOG").as_deref() {
        Ok("quiet") => log::LevelFilter::Off,
        Ok("trace") => log::LevelFilter::Trace,
        Ok("info") => log::LevelFilter::Info,
        _ => log::LevelFilter::Warn,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();
}

fn main() -> ExitCode {
    init_logging();
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        log::warn!("thread pool already initialized: {e}");
    }
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

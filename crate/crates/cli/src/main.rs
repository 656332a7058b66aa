use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "distlat", version, about = "Dualization in distributive lattices given by posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the dual antichain of B+ in the ideal lattice.
    Dualize(DualizeArgs),
    /// Enumerate minimal transversal-ideals of a hypergraph.
    Itrans(ItransArgs),
    /// Enumerate minimal dominating-ideals of a graph.
    Idom(IdomArgs),
    /// Decide whether B+ and B- are dual.
    CheckDual(CheckDualArgs),
    /// Rewrite a transversal-ideal instance as a dominating-ideal instance.
    Reduce(ReduceArgs),
    /// Write a seeded random instance.
    Gen(GenArgs),
    /// Exhaustive reference answer for any of the three problems.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct Limits {
    /// Largest poset the exhaustive oracle accepts.
    #[arg(long, default_value_t = distlat::DEFAULT_ORACLE_CAP)]
    cap: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SolverArg {
    Auto,
    Oracle,
    Generic,
    Split,
    Trianglefree,
}

impl From<SolverArg> for distlat::solve::Solver {
    fn from(s: SolverArg) -> Self {
        use distlat::solve::Solver;
        match s {
            SolverArg::Auto => Solver::Auto,
            SolverArg::Oracle => Solver::Oracle,
            SolverArg::Generic => Solver::Generic,
            SolverArg::Split => Solver::Split,
            SolverArg::Trianglefree => Solver::TriangleFree,
        }
    }
}

#[derive(Args, Debug)]
struct DualizeArgs {
    #[arg(long)]
    poset: PathBuf,
    #[arg(long)]
    bplus: PathBuf,
    #[arg(long, value_enum, default_value_t = SolverArg::Auto)]
    solver: SolverArg,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Args, Debug)]
struct ItransArgs {
    #[arg(long)]
    hypergraph: PathBuf,
    /// Defaults to the antichain on the hypergraph's vertices.
    #[arg(long)]
    poset: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = SolverArg::Auto)]
    solver: SolverArg,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Args, Debug)]
struct IdomArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Defaults to the antichain on the graph's vertices.
    #[arg(long)]
    poset: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = SolverArg::Auto)]
    solver: SolverArg,
    /// Report membership-test counts between emissions (split solver).
    #[arg(long)]
    delay_stats: bool,
    /// Write the reduced graph, poset and contraction manifest to DIR
    /// (triangle-free solver).
    #[arg(long, value_name = "DIR")]
    dump_reduced: Option<PathBuf>,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Args, Debug)]
struct CheckDualArgs {
    #[arg(long)]
    poset: PathBuf,
    #[arg(long)]
    bplus: PathBuf,
    #[arg(long)]
    bminus: PathBuf,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Bipartite,
    Split,
    Cobipartite,
}

impl From<TargetArg> for distlat::reductions::Target {
    fn from(t: TargetArg) -> Self {
        use distlat::reductions::Target;
        match t {
            TargetArg::Bipartite => Target::Bipartite,
            TargetArg::Split => Target::Split,
            TargetArg::Cobipartite => Target::Cobipartite,
        }
    }
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long)]
    hypergraph: PathBuf,
    #[arg(long)]
    poset: Option<PathBuf>,
    #[arg(long, value_enum)]
    target: TargetArg,
    /// Directory receiving graph.txt, poset.txt and exceptions.txt.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// n elements.
    Poset,
    /// n elements, m edges.
    Itrans,
    /// n elements, at most m ideals in B+.
    Dual,
    /// n vertices, clique of size m, inclusion poset.
    Split,
    /// n vertices, m on the first side, inclusion poset.
    Bipartite,
    /// n vertices, m in the first clique, inclusion poset.
    Cobipartite,
    /// n core vertices plus m pendant leaves, weak inclusion poset.
    Trianglefree,
    /// n vertices, inclusion poset.
    Graph,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(short, long)]
    n: usize,
    #[arg(short, long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability.
    #[arg(long, default_value_t = 0.4)]
    density: f64,
    /// Probability of keeping each candidate comparability.
    #[arg(long, default_value_t = 0.3)]
    order_density: f64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    poset: Option<PathBuf>,
    #[arg(long, conflicts_with_all = ["hypergraph", "graph"], requires = "poset")]
    bplus: Option<PathBuf>,
    #[arg(long, conflicts_with = "graph")]
    hypergraph: Option<PathBuf>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[command(flatten)]
    limits: Limits,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

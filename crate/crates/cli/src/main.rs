//! `icc`: generate graphs, build and check colorings, search feasible sets,
//! evaluate bounds and certify non-colorability from the command line.
//!
//! Exit codes: 0 success or valid, 1 invalid, infeasible or rejected,
//! 2 usage or input-format error, 3 search budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclic_coloring::bounds;
use cyclic_coloring::coloring::{validate, EdgeColoring, SpectrumMode};
use cyclic_coloring::constructions::ConstructionRequest;
use cyclic_coloring::dot::to_dot;
use cyclic_coloring::graph::{self, Graph};
use cyclic_coloring::noncolorable::{self, NoncolorableError};
use cyclic_coloring::solver::{
    self, certify_noncolorable, conjecture_scan, Budget, CertifyOutcome, Decision, FeasibleSetOptions,
    SolverConfig, DEFAULT_NODE_BUDGET,
};

#[derive(Parser)]
#[command(name = "icc", version, about = "Interval cyclic edge-colorings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Graph output path (stdout if omitted).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Build a graph together with an explicit coloring.
    Color {
        #[command(subcommand)]
        construction: Construction,
        /// Graph output path.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        /// Coloring output path.
        #[arg(short, long, global = true)]
        coloring: Option<PathBuf>,
    },
    /// Validate a coloring.
    Check {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Cyclic)]
        mode: Mode,
    },
    /// Decide a single t, or compute the whole feasible set.
    Solve(SolveArgs),
    /// Closed-form bounds: JSON on stdout, a table on stderr.
    Bounds {
        #[arg(short, long)]
        graph: PathBuf,
    },
    /// Produce a coloring or a certificate that none exists.
    Certify {
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Feasible sets and conjectured vertex bounds over a directory of graphs.
    Scan {
        #[arg(long)]
        corpus: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Graphviz DOT, with edge color labels when a coloring is given.
    ExportDot {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        coloring: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    Cycle { n: usize },
    Path { m: usize },
    Complete { n: usize },
    Bipartite { m: usize, n: usize },
    Tripartite { l: usize, m: usize, n: usize },
    Hypercube { n: usize },
    /// Cycle of length n with d-2 pendant vertices on each cycle vertex.
    Gdn { d: usize, n: usize },
    /// K_{2n+1} with a pendant hub carrying m leaves.
    Kstar { n: usize, m: usize },
    /// Center joined to `hubs` hubs, each with `leaves` leaves.
    HubTree { hubs: usize, leaves: usize },
    Fish,
    /// A tree read from a file plus an apex joined to its leaves.
    TreeHat {
        #[arg(short, long)]
        tree: PathBuf,
    },
    /// A certified non-colorable graph.
    Noncolorable(NoncolorableArgs),
}

#[derive(Args)]
struct NoncolorableArgs {
    #[arg(long, value_enum)]
    rule: Rule,
    /// Hubs in the hub tree (tree-hat).
    #[arg(long, default_value_t = 10)]
    hubs: usize,
    /// Leaves per hub (tree-hat).
    #[arg(long, default_value_t = 10)]
    leaves: usize,
    /// Clique order is 2n+1 (kstar).
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Leaves on the pendant hub (kstar).
    #[arg(long, default_value_t = 12)]
    m: usize,
    /// Certificate output path (stderr if omitted).
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    TreeHat,
    Kstar,
}

#[derive(Subcommand)]
enum Construction {
    /// n(d-1) colors on G_{d,n}.
    Gdn { d: usize, n: usize },
    /// 3n colors on K_{2n+1}.
    CompleteOdd { n: usize },
    /// m+n colors on K_{m,n}.
    Bipartite { m: usize, n: usize },
    /// Interval coloring with m+n-1 colors on K_{m,n}.
    BipartiteInterval { m: usize, n: usize },
    /// Interval coloring of K_{m,n} reduced modulo t.
    BipartiteReduced { m: usize, n: usize, t: usize },
    /// l+m+n colors on K_{l,m,n}.
    Tripartite { l: usize, m: usize, n: usize },
    /// 4n-4 colors on Q_n.
    Hypercube { n: usize },
    /// Interval coloring with n+1 colors on Q_n.
    HypercubeInterval { n: usize },
}

impl Construction {
    fn request(&self) -> ConstructionRequest {
        match *self {
            Self::Gdn { d, n } => ConstructionRequest::Gdn { d, n },
            Self::CompleteOdd { n } => ConstructionRequest::CompleteOdd { n },
            Self::Bipartite { m, n } => ConstructionRequest::BipartiteCyclic { m, n },
            Self::BipartiteInterval { m, n } => ConstructionRequest::BipartiteInterval { m, n },
            Self::BipartiteReduced { m, n, t } => ConstructionRequest::BipartiteReduced { m, n, t },
            Self::Tripartite { l, m, n } => ConstructionRequest::Tripartite { l, m, n },
            Self::Hypercube { n } => ConstructionRequest::HypercubeCyclic { n },
            Self::HypercubeInterval { n } => ConstructionRequest::HypercubeInterval { n },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Cyclic,
    Interval,
}

impl From<Mode> for SpectrumMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Cyclic => SpectrumMode::Cyclic,
            Mode::Interval => SpectrumMode::Interval,
        }
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Search node limit per value of t.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Wall-clock limit per value of t, in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_nodes: Some(self.budget),
            time_limit: self.time_limit.map(Duration::from_secs_f64),
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short, long)]
    graph: PathBuf,
    #[arg(long, conflicts_with = "feasible_set", required_unless_present = "feasible_set")]
    t: Option<usize>,
    #[arg(long)]
    feasible_set: bool,
    /// Largest t searched by --feasible-set.
    #[arg(long, requires = "feasible_set")]
    t_hi: Option<usize>,
    /// Search up to |E| instead of the best closed-form bound.
    #[arg(long, requires = "feasible_set")]
    no_bounds: bool,
    #[arg(long, value_enum, default_value_t = Mode::Cyclic, conflicts_with = "feasible_set")]
    mode: Mode,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Errors mapped to exit code 2.
struct UsageError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.into())
    }
}

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::from_json(&text).with_context(|| format!("parsing graph {}", path.display()))
}

fn read_coloring(path: &Path, g: &Graph) -> Result<EdgeColoring> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let c = EdgeColoring::from_json(&text).with_context(|| format!("parsing coloring {}", path.display()))?;
    anyhow::ensure!(
        c.colors.len() == g.edge_count(),
        "coloring {} has {} colors but the graph has {} edges",
        path.display(),
        c.colors.len(),
        g.edge_count()
    );
    anyhow::ensure!(c.t >= 1, "coloring {} has t = 0", path.display());
    Ok(c)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize") + "\n"
}

fn run(command: Command) -> Result<u8, UsageError> {
    match command {
        Command::Gen { family, output } => gen(family, output.as_deref()),
        Command::Color { construction, output, coloring } => {
            let (g, c) = construction.request().build()?;
            emit(output.as_deref(), &g.to_json())?;
            match coloring {
                Some(p) => emit(Some(&p), &c.to_json())?,
                None if output.is_some() => print!("{}", c.to_json()),
                None => {}
            }
            Ok(OK)
        }
        Command::Check { graph, coloring, mode } => {
            let g = read_graph(&graph)?;
            let c = read_coloring(&coloring, &g)?;
            let result = validate(&g, &c, mode.into())?;
            print!("{}", pretty(&result));
            Ok(if result.is_valid() { OK } else { NEGATIVE })
        }
        Command::Solve(args) => solve(args),
        Command::Bounds { graph } => {
            let g = read_graph(&graph)?;
            let report = bounds::report(&g);
            print!("{}", pretty(&report));
            eprintln!("{report}");
            Ok(OK)
        }
        Command::Certify { graph, budget } => {
            let g = read_graph(&graph)?;
            let outcome = certify_noncolorable(&g, budget.budget())?;
            print!("{}", pretty(&outcome));
            Ok(match outcome {
                CertifyOutcome::Certified { .. } => OK,
                CertifyOutcome::Witness { .. } => NEGATIVE,
                CertifyOutcome::Inconclusive { .. } => BUDGET,
            })
        }
        Command::Scan { corpus, budget, jobs } => scan(&corpus, &budget, jobs),
        Command::ExportDot { graph, coloring, output } => {
            let g = read_graph(&graph)?;
            let c = coloring.map(|p| read_coloring(&p, &g)).transpose()?;
            emit(output.as_deref(), &to_dot(&g, c.as_ref()))?;
            Ok(OK)
        }
    }
}

fn gen(family: Family, output: Option<&Path>) -> Result<u8, UsageError> {
    let g = match family {
        Family::Cycle { n } => graph::make_cycle(n)?,
        Family::Path { m } => graph::make_path(m)?,
        Family::Complete { n } => graph::make_complete(n)?,
        Family::Bipartite { m, n } => graph::make_complete_bipartite(m, n)?,
        Family::Tripartite { l, m, n } => graph::make_complete_tripartite(l, m, n)?,
        Family::Hypercube { n } => graph::make_hypercube(n)?,
        Family::Gdn { d, n } => graph::make_gdn(d, n)?,
        Family::Kstar { n, m } => graph::make_kstar(n, m)?,
        Family::HubTree { hubs, leaves } => graph::make_hub_tree(hubs, leaves)?,
        Family::Fish => graph::make_fish(),
        Family::TreeHat { tree } => graph::make_tree_hat(&read_graph(&tree)?)?,
        Family::Noncolorable(args) => {
            let built = match args.rule {
                Rule::TreeHat => graph::make_hub_tree(args.hubs, args.leaves)
                    .map_err(NoncolorableError::from)
                    .and_then(|tree| noncolorable::build_certified_tree_hat(&tree)),
                Rule::Kstar => noncolorable::build_certified_kstar(args.n, args.m),
            };
            match built {
                Ok((g, cert)) => {
                    emit(output, &g.to_json())?;
                    match &args.certificate {
                        Some(p) => emit(Some(p), &cert.to_json())?,
                        None => eprint!("{}", cert.to_json()),
                    }
                    return Ok(OK);
                }
                Err(NoncolorableError::Rejected(r)) => {
                    eprintln!("rejected: {r}");
                    eprint!("{}", pretty(&r));
                    return Ok(NEGATIVE);
                }
                Err(e) => return Err(e.into()),
            }
        }
    };
    emit(output, &g.to_json())?;
    Ok(OK)
}

fn solve(args: SolveArgs) -> Result<u8, UsageError> {
    let g = read_graph(&args.graph)?;
    let budget = args.budget.budget();
    if let Some(t) = args.t {
        let config = SolverConfig { budget, mode: args.mode.into(), ..SolverConfig::default() };
        let outcome = solver::decide_with(&g, t, &config)?;
        emit(args.output.as_deref(), &pretty(&outcome))?;
        return Ok(match outcome.decision {
            Decision::Feasible => OK,
            Decision::Infeasible => NEGATIVE,
            Decision::Timeout => BUDGET,
        });
    }
    let options = FeasibleSetOptions { t_hi: args.t_hi, use_bounds: !args.no_bounds, budget, jobs: args.jobs.max(1) };
    let fs = solver::feasible_set(&g, &options)?;
    emit(args.output.as_deref(), &pretty(&fs))?;
    Ok(if fs.exhausted { OK } else { BUDGET })
}

fn scan(corpus: &Path, budget: &BudgetArgs, jobs: usize) -> Result<u8, UsageError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(corpus)
        .with_context(|| format!("reading corpus directory {}", corpus.display()))?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|ext| ext == "json"));
    paths.sort();
    let graphs = paths
        .iter()
        .map(|p| {
            let name = p.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            read_graph(p).map(|g| (name, g))
        })
        .collect::<Result<Vec<_>>>()?;
    let options = FeasibleSetOptions { budget: budget.budget(), jobs: jobs.max(1), ..Default::default() };
    let report = conjecture_scan(&graphs, &options)?;
    print!("{}", pretty(&report));
    for name in &report.counterexamples {
        eprintln!("COUNTEREXAMPLE: {name} violates a conjectured bound");
    }
    for name in &report.skipped {
        eprintln!("skipped (budget exhausted): {name}");
    }
    Ok(if !report.counterexamples.is_empty() {
        NEGATIVE
    } else if !report.skipped.is_empty() {
        BUDGET
    } else {
        OK
    })
}

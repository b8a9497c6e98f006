//! Subcommand definitions and runners.
//!
//! Every subcommand emits a single JSON document on stdout and a short human
//! summary on stderr. Exit codes: 0 ok, 1 property violation, 2 usage or
//! parse error, 3 enumeration size limit.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kway_core::analysis::{h_split_ratio, theoretical_ratio, verify_facts};
use kway_core::greedy::{derive_h_sequence, iterative_split};
use kway_core::instances::{
    make_random_graph, make_tight_instance, make_tight_union, RandomGraphConfig, TightInstance,
};
use kway_core::rational::Rational;
use kway_core::solvers::min_split_dp;
use kway_core::{Error as CoreError, Graph, SequenceSpec, TieBreakPolicy};

use crate::format::{parse_graph, parse_rational, serialize_graph, ParseError};
use crate::report::{rational_string, trace_summaries, fact_report_json, RatioReport, RoundSummary};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(ParseError),
    Core(CoreError),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::SizeLimit { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

/// What a successful run prints and how it exits.
pub struct RunOutput {
    pub json: String,
    pub summary: String,
    pub exit_code: u8,
}

#[derive(Parser)]
#[command(
    name = "kway",
    about = "Greedy splitting approximations and exact solvers for minimum k-way cuts",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Approximate a minimum k-way cut by greedy iterative splitting
    Solve(PlanArgs),
    /// Compute the exact minimum k-way cut (exhaustive; small graphs only)
    Exact(ExactArgs),
    /// Run greedy and exact solvers and check the approximation bound
    Verify(PlanArgs),
    /// Write generated instances to graph files
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Sweep the analytic inequalities behind the ratio bound
    Facts(FactsArgs),
    /// Print the theoretical approximation ratio for a split plan
    Ratio(RatioArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    /// Lexicographically smallest edge-id set among minima
    Lex,
    /// Among minima, avoid edges of the highest-indexed component
    AvoidLast,
}

impl From<PolicyArg> for TieBreakPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Lex => TieBreakPolicy::CanonicalLex,
            PolicyArg::AvoidLast => TieBreakPolicy::AvoidLastComponent,
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("plan").required(true).args(["h", "sequence"])))]
pub struct PlanArgs {
    /// Input graph file
    #[arg(long)]
    pub input: PathBuf,
    /// Target component count
    #[arg(long)]
    pub k: usize,
    /// Uniform plan: one remainder round, then h-way rounds
    #[arg(long)]
    pub h: Option<usize>,
    /// Explicit nondecreasing plan, e.g. 2,4,4
    #[arg(long, value_delimiter = ',')]
    pub sequence: Option<Vec<usize>>,
    /// Tie-break rule among equal-weight minimum splits
    #[arg(long, value_enum, default_value_t = PolicyArg::Lex)]
    pub policy: PolicyArg,
}

#[derive(Args)]
pub struct ExactArgs {
    /// Input graph file
    #[arg(long)]
    pub input: PathBuf,
    /// Target component count
    #[arg(long)]
    pub k: usize,
    /// Tie-break rule among equal-weight minimum splits
    #[arg(long, value_enum, default_value_t = PolicyArg::Lex)]
    pub policy: PolicyArg,
}

#[derive(Subcommand)]
pub enum GenFamily {
    /// The worst-case family: q+1 cliques weighted so greedy pays its bound
    Tight(TightArgs),
    /// Seeded connected random graph
    Random(RandomArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("plan").required(true).args(["h", "sequence"])))]
pub struct TightArgs {
    /// Target component count
    #[arg(long)]
    pub k: usize,
    /// Uniform plan (see solve)
    #[arg(long)]
    pub h: Option<usize>,
    /// Explicit plan (see solve)
    #[arg(long, value_delimiter = ',')]
    pub sequence: Option<Vec<usize>>,
    /// Emit the raw disconnected clique union instead of the connected form
    #[arg(long)]
    pub raw: bool,
    /// Output graph file
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Args)]
pub struct RandomArgs {
    /// Vertex count
    #[arg(long)]
    pub n: usize,
    /// Edge probability as a rational in (0, 1]
    #[arg(long, default_value = "1/2", value_parser = parse_rational)]
    pub p: Rational,
    /// Smallest edge weight
    #[arg(long, default_value_t = 1)]
    pub wmin: u64,
    /// Largest edge weight
    #[arg(long, default_value_t = 10)]
    pub wmax: u64,
    /// RNG seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output graph file
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Args)]
pub struct FactsArgs {
    /// Largest k in every sweep
    #[arg(long, default_value_t = 12)]
    pub kmax: usize,
    /// Longest sequence in the sequence-indexed sweeps
    #[arg(long, default_value_t = 4)]
    pub qmax: usize,
}

#[derive(Args)]
#[command(group(ArgGroup::new("plan").required(true).args(["h", "sequence"])))]
pub struct RatioArgs {
    /// Target component count
    #[arg(long)]
    pub k: usize,
    /// Uniform plan (see solve)
    #[arg(long)]
    pub h: Option<usize>,
    /// Explicit plan (see solve)
    #[arg(long, value_delimiter = ',')]
    pub sequence: Option<Vec<usize>>,
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(CliError::Parse)
}

fn make_spec(k: usize, h: Option<usize>, sequence: &Option<Vec<usize>>) -> Result<SequenceSpec, CliError> {
    match (h, sequence) {
        (Some(h), None) => Ok(derive_h_sequence(k, h)?),
        (None, Some(seq)) => Ok(SequenceSpec::new(k, seq.clone())?),
        _ => Err(CliError::Usage("exactly one of --h and --sequence is required".to_string())),
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

pub fn run_solve(args: &PlanArgs) -> Result<RunOutput, CliError> {
    let g = load_graph(&args.input)?;
    let spec = make_spec(args.k, args.h, &args.sequence)?;
    let bound = theoretical_ratio(&spec);
    let start = Instant::now();
    let trace = iterative_split(&g, &spec, args.policy.into())?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    let report = RatioReport {
        algorithm: if args.h.is_some() { "iterative-h-split" } else { "iterative-split" }
            .to_string(),
        k: spec.k(),
        sequence: spec.hs().to_vec(),
        achieved_weight: rational_string(&trace.total_weight),
        optimal_weight: None,
        theoretical_bound: rational_string(&bound),
        achieved_ratio: None,
        cut_edge_ids: trace.cut_edge_ids().into_iter().collect(),
        trace: trace_summaries(&trace),
        runtime_ms,
    };
    let summary = format!(
        "{} k={} hs={:?}: achieved weight {} within ratio bound {}",
        report.algorithm,
        spec.k(),
        spec.hs(),
        report.achieved_weight,
        report.theoretical_bound
    );
    Ok(RunOutput { json: pretty(&report), summary, exit_code: 0 })
}

pub fn run_exact(args: &ExactArgs) -> Result<RunOutput, CliError> {
    let g = load_graph(&args.input)?;
    let start = Instant::now();
    let split = min_split_dp(&g, args.k, args.policy.into())?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    let weight = rational_string(&split.weight);
    let components_after = g.components().component_count + args.k - 1;
    let report = RatioReport {
        algorithm: "exact".to_string(),
        k: args.k,
        sequence: vec![args.k],
        achieved_weight: weight.clone(),
        optimal_weight: Some(weight.clone()),
        theoretical_bound: "1".to_string(),
        achieved_ratio: Some("1".to_string()),
        cut_edge_ids: split.edge_ids.iter().copied().collect(),
        trace: vec![RoundSummary {
            h: args.k,
            weight: weight.clone(),
            cut_edge_ids: split.edge_ids.iter().copied().collect(),
            components_after,
        }],
        runtime_ms,
    };
    let summary = format!("exact k={}: minimum split weight {weight}", args.k);
    Ok(RunOutput { json: pretty(&report), summary, exit_code: 0 })
}

pub fn run_verify(args: &PlanArgs) -> Result<RunOutput, CliError> {
    let g = load_graph(&args.input)?;
    let spec = make_spec(args.k, args.h, &args.sequence)?;
    let bound = theoretical_ratio(&spec);
    let start = Instant::now();
    let trace = iterative_split(&g, &spec, args.policy.into())?;
    let optimal = min_split_dp(&g, spec.k(), args.policy.into())?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    let ratio = &trace.total_weight / &optimal.weight;
    let violated = ratio > bound;
    let report = RatioReport {
        algorithm: "verify".to_string(),
        k: spec.k(),
        sequence: spec.hs().to_vec(),
        achieved_weight: rational_string(&trace.total_weight),
        optimal_weight: Some(rational_string(&optimal.weight)),
        theoretical_bound: rational_string(&bound),
        achieved_ratio: Some(rational_string(&ratio)),
        cut_edge_ids: trace.cut_edge_ids().into_iter().collect(),
        trace: trace_summaries(&trace),
        runtime_ms,
    };
    let summary = if violated {
        format!(
            "VIOLATION: achieved/optimal = {} exceeds bound {}",
            rational_string(&ratio),
            report.theoretical_bound
        )
    } else {
        format!(
            "ok: achieved/optimal = {} within bound {}",
            rational_string(&ratio),
            report.theoretical_bound
        )
    };
    Ok(RunOutput { json: pretty(&report), summary, exit_code: u8::from(violated) })
}

fn write_graph_file(path: &Path, g: &Graph) -> Result<(), CliError> {
    fs::write(path, serialize_graph(g))
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn tight_metadata(t: &TightInstance, star_closed: bool, output: &Path) -> serde_json::Value {
    json!({
        "kind": "tight",
        "k": t.spec.k(),
        "sequence": t.spec.hs(),
        "star_closed": star_closed,
        "heavy_weight": rational_string(&t.heavy_weight),
        "vertex_count": t.graph.vertex_count(),
        "edge_count": t.graph.edge_count(),
        "optimal_cut_edge_ids": t.optimal_cut_edge_ids.iter().collect::<Vec<_>>(),
        "adversarial_split_edge_ids": t.adversarial_split_edge_ids.iter()
            .map(|s| s.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
        "heavy_edge_ids": t.heavy_edge_ids.iter().collect::<Vec<_>>(),
        "theoretical_ratio": rational_string(&theoretical_ratio(&t.spec)),
        "output": output.display().to_string(),
    })
}

pub fn run_gen(family: &GenFamily) -> Result<RunOutput, CliError> {
    match family {
        GenFamily::Tight(args) => {
            let spec = make_spec(args.k, args.h, &args.sequence)?;
            let instance =
                if args.raw { make_tight_union(&spec) } else { make_tight_instance(&spec) };
            write_graph_file(&args.output, &instance.graph)?;
            let meta = tight_metadata(&instance, !args.raw, &args.output);
            let summary = format!(
                "wrote tight instance k={} hs={:?} ({} vertices, {} edges) to {}",
                spec.k(),
                spec.hs(),
                instance.graph.vertex_count(),
                instance.graph.edge_count(),
                args.output.display()
            );
            Ok(RunOutput { json: pretty(&meta), summary, exit_code: 0 })
        }
        GenFamily::Random(args) => {
            let cfg = RandomGraphConfig {
                n: args.n,
                edge_probability: args.p.clone(),
                weight_range: (args.wmin, args.wmax),
                seed: args.seed,
            };
            let g = make_random_graph(&cfg)?;
            write_graph_file(&args.output, &g)?;
            let meta = json!({
                "kind": "random",
                "n": args.n,
                "edge_probability": rational_string(&args.p),
                "weight_range": [args.wmin, args.wmax],
                "seed": args.seed,
                "vertex_count": g.vertex_count(),
                "edge_count": g.edge_count(),
                "output": args.output.display().to_string(),
            });
            let summary = format!(
                "wrote random graph n={} seed={} ({} edges) to {}",
                args.n,
                args.seed,
                g.edge_count(),
                args.output.display()
            );
            Ok(RunOutput { json: pretty(&meta), summary, exit_code: 0 })
        }
    }
}

pub fn run_facts(args: &FactsArgs) -> Result<RunOutput, CliError> {
    let reports = verify_facts(args.kmax, args.qmax)?;
    let total_checked: u64 = reports.iter().map(|r| r.checked).sum();
    let total_violations: usize = reports.iter().map(|r| r.violations.len()).sum();
    let jsons: Vec<_> = reports.iter().map(fact_report_json).collect();
    let summary = format!(
        "{} sweeps, {total_checked} grid points, {total_violations} violations",
        reports.len()
    );
    Ok(RunOutput {
        json: pretty(&jsons),
        summary,
        exit_code: u8::from(total_violations > 0),
    })
}

pub fn run_ratio(args: &RatioArgs) -> Result<RunOutput, CliError> {
    let value = match (args.h, &args.sequence) {
        (Some(h), None) => h_split_ratio(args.k, h)?,
        (None, Some(seq)) => theoretical_ratio(&SequenceSpec::new(args.k, seq.clone())?),
        _ => return Err(CliError::Usage("exactly one of --h and --sequence is required".to_string())),
    };
    let text = rational_string(&value);
    Ok(RunOutput {
        json: serde_json::to_string(&text).expect("string serializes") + "\n",
        summary: format!("theoretical ratio {text}"),
        exit_code: 0,
    })
}

pub fn run_command(command: &Command) -> Result<RunOutput, CliError> {
    match command {
        Command::Solve(args) => run_solve(args),
        Command::Exact(args) => run_exact(args),
        Command::Verify(args) => run_verify(args),
        Command::Gen { family } => run_gen(family),
        Command::Facts(args) => run_facts(args),
        Command::Ratio(args) => run_ratio(args),
    }
}

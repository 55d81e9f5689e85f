//! `packlab`: thresholds, constructions, solvers and verification runs from
//! the command line.
//!
//! Exit codes: 0 yes/pass, 1 no/fail, 2 usage or hypothesis error, 3 resource
//! abort (node cap, order cap).

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use packlab::constructions::{square_cx_graph, square_degree_band_holds, ConstructionSpec};
use packlab::graph::{self, Format, Graph};
use packlab::solvers::{
    self, SolveError, SolveOptions, SolveOutcome, DEFAULT_HAMILTON_CAP, DEFAULT_NODE_CAP,
};
use packlab::thresholds::{self, ThresholdValue};
use packlab::verify::{
    self, AuditOptions, EnumerationTask, Filters, Mode, Predicate, RunConfig, Status, VerifyError,
};

const NODE_CAP_ENV: &str = "PACKLAB_NODE_CAP";

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "packlab", version, about = "Clique packings, equitable colourings and their extremal graphs")]
struct Cli {
    /// Solver node cap; overrides PACKLAB_NODE_CAP.
    #[arg(long, global = true)]
    node_cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an edge threshold.
    Threshold {
        #[command(subcommand)]
        kind: ThresholdCmd,
        #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
        output: Output,
    },
    /// Build an extremal or exceptional graph.
    Construct(ConstructArgs),
    /// Run a solver on a graph read from a file or stdin.
    Solve(SolveArgs),
    /// Run an exhaustive or sampled verification and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum ThresholdCmd {
    /// Matching threshold f2(n, d).
    F2 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Colouring threshold f(n, r, D).
    F {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long = "D")]
        d: u64,
    },
    /// Packing threshold g(n, r, D).
    G {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long = "D")]
        d: u64,
    },
    /// Edge counts of T(m, s) and its complement.
    Turan {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        s: u64,
    },
    /// The auxiliary function h(x) and its monotonicity on the grid.
    Appendix {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        /// Evaluate h at this point instead of checking monotonicity.
        #[arg(long)]
        x: Option<f64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "H")]
    H,
    #[value(name = "G1")]
    G1,
    #[value(name = "G2")]
    G2,
    #[value(name = "af_i")]
    AfI,
    #[value(name = "af_ii")]
    AfIi,
    #[value(name = "extremal1")]
    Extremal1,
    #[value(name = "t_star")]
    TStar,
    #[value(name = "extremal2")]
    Extremal2,
    #[value(name = "square_cx")]
    SquareCx,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphOutput {
    Graph6,
    EdgeList,
    Json,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: Option<usize>,
    /// Minimum degree of H.
    #[arg(long)]
    d: Option<usize>,
    /// Maximum degree of G2.
    #[arg(long = "D")]
    big_d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long = "C")]
    c: Option<usize>,
    #[arg(long = "K")]
    big_k: Option<usize>,
    /// Write the graph here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphOutput::Graph6)]
    format: GraphOutput,
    /// Check the claimed properties; exit 1 if any fails.
    #[arg(long)]
    audit: bool,
    /// square_cx only: skip the degree-band parameter check.
    #[arg(long)]
    unchecked: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveTask {
    Matching,
    Pack,
    Colour,
    Krfree,
    TuranPartition,
    Chvatal,
    SquareCheck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(value_enum)]
    task: SolveTask,
    /// Graph file; stdin when absent or "-".
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Largest order for the exact Hamilton path search.
    #[arg(long, default_value_t = DEFAULT_HAMILTON_CAP)]
    order_cap: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyPredicate {
    Matching,
    T1,
    Mainthm1,
    Conj1,
    Question1,
    Chvatal,
    Audit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliMode {
    Exhaustive,
    Sampled,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    predicate: VerifyPredicate,
    /// Order of the graphs; the largest order for `audit`.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: Option<usize>,
    /// Restrict threshold predicates to one degree bound.
    #[arg(long, alias = "D")]
    d: Option<usize>,
    #[arg(long, value_enum, default_value_t = CliMode::Exhaustive)]
    mode: CliMode,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    edge_probability: Option<f64>,
    /// Worker threads; 0 uses all cores. Does not change the report.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, default_value_t = verify::DEFAULT_EXHAUSTIVE_CAP)]
    exhaustive_cap: usize,
    /// Solver range for `audit`.
    #[arg(long, default_value_t = 12)]
    solver_max_n: usize,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    min_edges: Option<usize>,
    #[arg(long)]
    max_edges: Option<usize>,
    /// Include elapsed_ms in the report (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure mapped to an exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, msg: msg.to_string() }
    }
}

impl From<packlab::Error> for Failure {
    fn from(e: packlab::Error) -> Self {
        Failure::usage(e)
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::NodeCapExceeded(_) | SolveError::Cancelled | SolveError::OrderCapExceeded { .. } => {
                EXIT_RESOURCE
            }
            SolveError::HypothesisViolated(_) | SolveError::InvalidParameter(_) => EXIT_USAGE,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e)
    }
}

type CmdResult = Result<u8, Failure>;

fn node_cap(cli: Option<u64>) -> Result<u64, Failure> {
    let cap = match cli {
        Some(c) => c,
        None => match std::env::var(NODE_CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("{NODE_CAP_ENV}={v:?} is not a positive integer")))?,
            Err(_) => DEFAULT_NODE_CAP,
        },
    };
    if cap == 0 {
        return Err(Failure::usage("node cap must be positive"));
    }
    Ok(cap)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn threshold_text(name: &str, v: &ThresholdValue) -> String {
    format!(
        "{name} = {}\nbranch: {}\nterms: {} {}\n",
        v.value,
        serde_json::to_value(v.branch).expect("branch serializes").as_str().unwrap_or("?"),
        v.terms[0],
        v.terms[1]
    )
}

fn cmd_threshold(kind: ThresholdCmd, output: Output) -> CmdResult {
    let (text, value) = match kind {
        ThresholdCmd::F2 { n, d } => {
            let v = thresholds::f2(n, d)?;
            (threshold_text("f2", &v), serde_json::to_value(v))
        }
        ThresholdCmd::F { n, r, d } => {
            let v = thresholds::f(n, r, d)?;
            (threshold_text("f", &v), serde_json::to_value(v))
        }
        ThresholdCmd::G { n, r, d } => {
            let v = thresholds::g(n, r, d)?;
            (threshold_text("g", &v), serde_json::to_value(v))
        }
        ThresholdCmd::Turan { m, s } => {
            let t = thresholds::turan_edges(m, s)?;
            let c = thresholds::turan_complement_edges(m, s)?;
            let bound = thresholds::turan_bound_holds(m, s)?;
            (
                format!("turan = {t}\ncomplement = {c}\nbound holds: {bound}\n"),
                Ok(json!({"turan": t, "complement": c, "bound_holds": bound})),
            )
        }
        ThresholdCmd::Appendix { n, r, x: Some(x) } => {
            let h = thresholds::appendix_h(n, r, x);
            (format!("h({x}) = {h}\n"), Ok(json!({"x": x, "h": h})))
        }
        ThresholdCmd::Appendix { n, r, x: None } => {
            let ok = thresholds::appendix_h_monotone(n, r)?;
            let text = format!("strictly decreasing on grid: {ok}\n");
            emit(None, &render(output, text, Ok(json!({"decreasing": ok}))))?;
            return Ok(if ok { EXIT_YES } else { EXIT_NO });
        }
    };
    emit(None, &render(output, text, value))?;
    Ok(EXIT_YES)
}

fn render(output: Output, text: String, value: serde_json::Result<serde_json::Value>) -> String {
    match output {
        Output::Text => text,
        Output::Json => format!("{}\n", value.expect("value serializes")),
    }
}

fn need(name: &str, v: Option<usize>) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::usage(format!("missing --{name}")))
}

fn construct_spec(a: &ConstructArgs) -> Result<ConstructionSpec, Failure> {
    let n = a.n;
    Ok(match a.family {
        Family::H => ConstructionSpec::HMatching { n, d: need("d", a.d)? },
        Family::G1 => ConstructionSpec::G1 { n, r: need("r", a.r)? },
        Family::G2 => ConstructionSpec::G2 { n, r: need("r", a.r)?, d: need("D", a.big_d)? },
        Family::AfI => ConstructionSpec::AfExceptionI { n, r: need("r", a.r)? },
        Family::AfIi => ConstructionSpec::AfExceptionIi { n, r: need("r", a.r)?, j: need("j", a.j)? },
        Family::Extremal1 => ConstructionSpec::Extremal1 { n, r: need("r", a.r)?, k: need("k", a.k)? },
        Family::TStar => ConstructionSpec::TStar { n, r: need("r", a.r)? },
        Family::Extremal2 => ConstructionSpec::Extremal2 { n, r: need("r", a.r)?, k: need("k", a.k)? },
        Family::SquareCx => ConstructionSpec::SquareCx { n, c: need("C", a.c)?, k: need("K", a.big_k)? },
    })
}

fn graph_text(g: &Graph, format: GraphOutput, spec: &ConstructionSpec) -> String {
    match format {
        GraphOutput::Graph6 => format!("{}\n", graph::encode_graph6(g)),
        GraphOutput::EdgeList => graph::encode_edge_list(g),
        GraphOutput::Json => format!(
            "{}\n",
            json!({
                "spec": spec,
                "n": g.n(),
                "edges": g.edge_count(),
                "graph6": graph::encode_graph6(g),
                "degree_sequence": g.degree_sequence(),
            })
        ),
    }
}

fn cmd_construct(a: ConstructArgs, cap: u64) -> CmdResult {
    let spec = construct_spec(&a)?;
    if a.unchecked {
        let ConstructionSpec::SquareCx { n, c, k } = spec else {
            return Err(Failure::usage("--unchecked applies to square_cx only"));
        };
        let g = square_cx_graph(n, c, k)?;
        emit(a.out.as_ref(), &graph_text(&g, a.format, &spec))?;
        if !a.audit {
            return Ok(EXIT_YES);
        }
        let band = square_degree_band_holds(&g.degree_sequence(), c);
        let flagged = solvers::square_necessary_condition(&g);
        eprintln!("degree band d_i >= n/3 + C + i: {}", if band { "holds" } else { "fails" });
        eprintln!("vertices with no P4 in their neighbourhood: {flagged:?}");
        return Ok(if band && flagged.contains(&0) { EXIT_YES } else { EXIT_NO });
    }
    let g = spec.build()?;
    emit(a.out.as_ref(), &graph_text(&g, a.format, &spec))?;
    if !a.audit {
        return Ok(EXIT_YES);
    }
    let opts = AuditOptions { node_cap: cap, ..AuditOptions::default() };
    let audit = verify::audit_instance(&spec, &opts);
    let claims = spec.claims()?;
    eprintln!("{spec}: e = {}, degrees {}..{}", g.edge_count(), claims.min_degree, claims.max_degree);
    match audit.obstruction_confirmed {
        Some(true) => eprintln!("{:?} confirmed by exact solver", claims.obstruction),
        Some(false) => eprintln!("{:?} refuted by exact solver", claims.obstruction),
        None => eprintln!("{:?} not solver-checked at this order", claims.obstruction),
    }
    for f in &audit.failures {
        eprintln!("FAIL {f}");
    }
    if audit.aborted {
        return Ok(EXIT_RESOURCE);
    }
    Ok(if audit.passed() { EXIT_YES } else { EXIT_NO })
}

fn read_graph(a: &SolveArgs) -> Result<Graph, Failure> {
    let text = match &a.input {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let format = match a.format {
        InputFormat::Auto => None,
        InputFormat::Graph6 => Some(Format::Graph6),
        InputFormat::EdgeList => Some(Format::EdgeList),
    };
    Ok(graph::parse_graph(&text, format)?)
}

fn blocks_text(label: &str, blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| {
            let items: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            format!("{label} {}\n", items.join(" "))
        })
        .collect()
}

fn outcome_text(out: &SolveOutcome) -> String {
    let mut s = format!("{}\n", if out.decision { "yes" } else { "no" });
    if let Some(p) = out.packing() {
        s += &blocks_text("block", &p.blocks);
    }
    if let Some(c) = out.colouring() {
        s += &blocks_text("class", &c.classes);
    }
    if let Some(p) = out.path() {
        s += &blocks_text("path", &[p.to_vec()]);
    }
    s
}

fn cmd_solve(a: SolveArgs, cap: u64) -> CmdResult {
    let g = read_graph(&a)?;
    let opts = SolveOptions::with_node_cap(cap);
    let (text, value, decision) = match a.task {
        SolveTask::Matching => {
            let out = solvers::perfect_matching(&g);
            (outcome_text(&out), json!(out), out.decision)
        }
        SolveTask::Pack => {
            let out = solvers::perfect_kr_packing(&g, need("r", a.r)?, &opts)?;
            (outcome_text(&out), json!(out), out.decision)
        }
        SolveTask::Colour => {
            let out = solvers::equitable_colouring(&g, need("k", a.k)?, &opts)?;
            (outcome_text(&out), json!(out), out.decision)
        }
        SolveTask::Krfree => {
            let out = solvers::krfree_greedy_packing(&g, need("r", a.r)?, &opts)?;
            (outcome_text(&out), json!(out), out.decision)
        }
        SolveTask::TuranPartition => {
            let classes: Vec<Vec<usize>> = solvers::turan_partition(&g, need("r", a.r)?)?
                .iter()
                .map(|c| c.to_vec())
                .collect();
            let text = format!("yes\n{}", blocks_text("class", &classes));
            (text, json!({"decision": true, "classes": classes}), true)
        }
        SolveTask::Chvatal => {
            let condition = solvers::chvatal_hampath_condition(&g);
            match solvers::hamilton_path_exact(&g, a.order_cap, &opts) {
                Ok(out) => {
                    let text = format!("degree condition: {condition}\n{}", outcome_text(&out));
                    let value = json!({"condition": condition, "outcome": out});
                    (text, value, out.decision)
                }
                Err(SolveError::OrderCapExceeded { .. }) if condition => {
                    let text = "degree condition: true\nyes\n".to_string();
                    (text, json!({"condition": true, "decision": true}), true)
                }
                Err(e) => return Err(e.into()),
            }
        }
        SolveTask::SquareCheck => {
            let flagged = solvers::square_necessary_condition(&g);
            let text = if flagged.is_empty() {
                "necessary condition holds\n".to_string()
            } else {
                format!("no: vertices without a P4 in their neighbourhood: {flagged:?}\n")
            };
            (text, json!({"decision": flagged.is_empty(), "flagged": flagged}), flagged.is_empty())
        }
    };
    emit(None, &render(a.output, text, Ok(value)))?;
    Ok(if decision { EXIT_YES } else { EXIT_NO })
}

fn cmd_verify(a: VerifyArgs, cap: u64) -> CmdResult {
    let report = if a.predicate == VerifyPredicate::Audit {
        let opts = AuditOptions {
            solver_max_n: a.solver_max_n,
            node_cap: cap,
            workers: a.workers,
        };
        verify::audit_constructions(a.n, opts)
    } else {
        let predicate = match a.predicate {
            VerifyPredicate::Matching => Predicate::Matching,
            VerifyPredicate::T1 => Predicate::T1,
            VerifyPredicate::Mainthm1 => Predicate::Mainthm1,
            VerifyPredicate::Conj1 => Predicate::Conj1,
            VerifyPredicate::Question1 => Predicate::Question1,
            VerifyPredicate::Chvatal => Predicate::Chvatal,
            VerifyPredicate::Audit => unreachable!("handled above"),
        };
        let mode = match a.mode {
            CliMode::Exhaustive => Mode::Exhaustive,
            CliMode::Sampled => Mode::Sampled,
        };
        if mode == Mode::Sampled && a.seed.is_none() {
            return Err(Failure::usage("sampled mode needs --seed"));
        }
        let task = EnumerationTask {
            predicate,
            n: a.n,
            r: a.r,
            d: a.d,
            mode,
            samples: a.samples,
            seed: a.seed,
            edge_probability: a.edge_probability,
            filters: Filters {
                min_degree: a.min_degree,
                max_degree: a.max_degree,
                min_edges: a.min_edges,
                max_edges: a.max_edges,
            },
            node_cap: cap,
            exhaustive_cap: a.exhaustive_cap,
        };
        verify::run(&task, RunConfig { workers: a.workers })?
    };
    let report = if a.timing { report } else { report.without_timing() };
    emit(a.out.as_ref(), &format!("{}\n", report.to_json()))?;
    Ok(match report.status {
        Status::Pass => EXIT_YES,
        Status::Fail => EXIT_NO,
        Status::Aborted => EXIT_RESOURCE,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = node_cap(cli.node_cap).and_then(|cap| match cli.command {
        Command::Threshold { kind, output } => cmd_threshold(kind, output),
        Command::Construct(a) => cmd_construct(a, cap),
        Command::Solve(a) => cmd_solve(a, cap),
        Command::Verify(a) => cmd_verify(a, cap),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("packlab: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

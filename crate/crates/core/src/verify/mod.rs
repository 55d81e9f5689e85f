//! Small-scale empirical checks of the thresholds and conjectures.
//!
//! Exhaustive mode walks every labeled graph on `n` vertices as an edge mask;
//! sampled mode draws graphs from a seeded ChaCha8 stream. Work is split
//! into fixed-size contiguous ranges that may run in parallel, and partial
//! results are merged in range order, so reports do not depend on the
//! number of workers.

mod audit;
mod scan;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::graph::{self, Graph};
use crate::solvers::{question1_failures, alpha_beta_condition, AlphaBetaViolation, DEFAULT_NODE_CAP};
use crate::constructions::{build_extremal1, build_extremal2};
use crate::thresholds;

pub use audit::{audit_constructions, audit_instance, AuditOptions, InstanceAudit};
use scan::{Check, Condition, Property, Rule};

/// Largest order allowed in exhaustive mode unless raised explicitly.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 7;
/// Hard limit for exhaustive mode: edge masks must fit in 64 bits.
pub const MAX_EXHAUSTIVE_N: usize = 11;
/// Witnesses kept per check; counts are always exact.
pub const MAX_WITNESSES: usize = 64;
/// Identifier of the sampling generator recorded in reports.
pub const RNG_ID: &str = "chacha8:seed_from_u64:stream=sample_index:bernoulli_per_slot";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("exhaustive mode is capped at n <= {cap}, got n={n}")]
    ExhaustiveCap { n: usize, cap: usize },
    #[error("invalid task: {0}")]
    InvalidTask(String),
    #[error(transparent)]
    Graph(#[from] Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    /// Edge threshold for perfect matchings under a minimum degree.
    Matching,
    /// Edge threshold for equitable `n/r`-colourings under a maximum degree.
    T1,
    /// Edge threshold for perfect `K_r`-packings under a minimum degree.
    Mainthm1,
    /// Degree-sequence condition `(alpha)`/`(beta)` for packings.
    Conj1,
    /// Disjunctive degree-sequence condition for packings.
    Question1,
    /// Degree-sequence condition for Hamilton paths.
    Chvatal,
}

impl Predicate {
    pub const ALL: [Predicate; 6] = [
        Predicate::Matching,
        Predicate::T1,
        Predicate::Mainthm1,
        Predicate::Conj1,
        Predicate::Question1,
        Predicate::Chvatal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Matching => "matching",
            Predicate::T1 => "t1",
            Predicate::Mainthm1 => "mainthm1",
            Predicate::Conj1 => "conj1",
            Predicate::Question1 => "question1",
            Predicate::Chvatal => "chvatal",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| VerifyError::InvalidTask(format!("unknown predicate {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

/// Extra restrictions applied to every graph before any check.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Filters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_edges: Option<usize>,
}

impl Filters {
    fn is_empty(&self) -> bool {
        *self == Filters::default()
    }

    fn accepts(&self, edges: usize, degrees: &[usize]) -> bool {
        let lo = degrees.first().copied().unwrap_or(0);
        let hi = degrees.last().copied().unwrap_or(0);
        self.min_degree.is_none_or(|d| lo >= d)
            && self.max_degree.is_none_or(|d| hi <= d)
            && self.min_edges.is_none_or(|e| edges >= e)
            && self.max_edges.is_none_or(|e| edges <= e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnumerationTask {
    pub predicate: Predicate,
    pub n: usize,
    pub r: Option<usize>,
    /// Restricts threshold predicates to one degree bound.
    pub d: Option<usize>,
    pub mode: Mode,
    /// Number of graphs drawn in sampled mode.
    pub samples: u64,
    pub seed: Option<u64>,
    /// Edge probability for sampled mode; a predicate-specific default when unset.
    pub edge_probability: Option<f64>,
    pub filters: Filters,
    pub node_cap: u64,
    pub exhaustive_cap: usize,
}

impl EnumerationTask {
    pub fn exhaustive(predicate: Predicate, n: usize, r: Option<usize>) -> Self {
        EnumerationTask {
            predicate,
            n,
            r,
            d: None,
            mode: Mode::Exhaustive,
            samples: 0,
            seed: None,
            edge_probability: None,
            filters: Filters::default(),
            node_cap: DEFAULT_NODE_CAP,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }

    pub fn sampled(predicate: Predicate, n: usize, r: Option<usize>, samples: u64, seed: u64) -> Self {
        EnumerationTask {
            mode: Mode::Sampled,
            samples,
            seed: Some(seed),
            ..EnumerationTask::exhaustive(predicate, n, r)
        }
    }
}

/// The task as recorded in a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaskEcho {
    pub predicate: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_probability: Option<f64>,
    #[serde(skip_serializing_if = "Filters::is_empty")]
    pub filters: Filters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver_max_n: Option<usize>,
    pub node_cap: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub edges: u64,
    pub graph6: String,
}

/// Outcome of one check within a task, e.g. one value of the degree bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<u64>,
    /// Graphs that passed the check's filter.
    pub examined: u64,
    /// Filtered graphs that have the obstruction under test.
    pub bad: u64,
    /// Boundary witness among the `bad` graphs.
    pub extremal: Option<Extremal>,
    /// Whether the boundary witness meets the threshold exactly; exhaustive
    /// threshold checks only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharp: Option<bool>,
    pub violation_count: u64,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// A side assertion attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Note {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Aborted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub task: TaskEcho,
    /// Graphs generated: every mask in exhaustive mode, every draw in
    /// sampled mode, every instance in an audit.
    pub examined: u64,
    pub violations: Vec<String>,
    pub extremal: Option<Extremal>,
    pub checks: Vec<CheckSummary>,
    pub notes: Vec<Note>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    fn finish(task: TaskEcho, examined: u64, checks: Vec<CheckSummary>, notes: Vec<Note>, aborted: bool) -> Self {
        let violations = checks.iter().flat_map(|c| c.violations.iter().cloned()).collect();
        let extremal = checks.first().and_then(|c| c.extremal.clone());
        let status = if aborted {
            Status::Aborted
        } else if checks.iter().all(|c| c.passed) && notes.iter().all(|n| n.passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            task,
            examined,
            violations,
            extremal,
            checks,
            notes,
            status,
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Same report without timing, for byte-level comparisons.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// How the work is scheduled. Never affects report contents.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunConfig {
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
}

fn invalid(msg: impl Into<String>) -> VerifyError {
    VerifyError::InvalidTask(msg.into())
}

fn need_r(task: &EnumerationTask, min_r: usize) -> Result<usize, VerifyError> {
    let n = task.n;
    let r = task
        .r
        .ok_or_else(|| invalid(format!("predicate {} needs r", task.predicate)))?;
    if r < min_r || !n.is_multiple_of(r) || n < r {
        return Err(invalid(format!("needs r >= {min_r} and r | n, got n={n}, r={r}")));
    }
    Ok(r)
}

fn pick(range: std::ops::RangeInclusive<u64>, d: Option<usize>, what: &str) -> Result<Vec<u64>, VerifyError> {
    let all: Vec<u64> = range.clone().collect();
    match d {
        None if all.is_empty() => Err(invalid(format!("empty {what} range"))),
        None => Ok(all),
        Some(d) if range.contains(&(d as u64)) => Ok(vec![d as u64]),
        Some(d) => Err(invalid(format!("{what} = {d} outside {}..={}", range.start(), range.end()))),
    }
}

/// Default sampling density for the degree-sequence searches: a little above
/// the `(r-1)/r` needed by `(beta)`, so most draws meet the condition without
/// all of them being near-complete.
fn boundary_density(r: usize) -> f64 {
    (4 * r - 3) as f64 / (4 * r) as f64
}

/// The checks a task runs and its default sampling density.
fn plan(task: &EnumerationTask) -> Result<(Vec<Check>, f64), VerifyError> {
    let n = task.n;
    let slots = graph::binom2(n).max(1) as f64;
    let density = |edges: u64| (edges as f64 / slots).clamp(0.0, 1.0);
    Ok(match task.predicate {
        Predicate::Matching => {
            if n < 4 || !n.is_multiple_of(2) {
                return Err(invalid(format!("matching needs even n >= 4, got n={n}")));
            }
            let ds = pick(1..=(n / 2 - 1) as u64, task.d, "d")?;
            let mut checks = Vec::new();
            for &d in &ds {
                let t = thresholds::f2(n as u64, d)?.value;
                checks.push(Check::new(format!("d={d}"), Some(d as usize), Property::NoPerfectMatching)
                    .min_degree(d as usize)
                    .rule(Rule::MaxEdges(t)));
            }
            (checks, 0.5)
        }
        Predicate::T1 => {
            let r = need_r(task, 3)?;
            let ds = pick(thresholds::f_range(n as u64, r as u64), task.d, "D")?;
            let mut checks = Vec::new();
            for &d in &ds {
                let t = thresholds::f(n as u64, r as u64, d)?.value;
                checks.push(Check::new(format!("D={d}"), Some(d as usize), Property::NotColourable { k: n / r })
                    .max_degree(d as usize)
                    .rule(Rule::MinEdges(t)));
            }
            let first = thresholds::f(n as u64, r as u64, ds[0])?.value;
            (checks, density(first.saturating_sub(1)))
        }
        Predicate::Mainthm1 => {
            let r = need_r(task, 3)?;
            let ds = pick(thresholds::g_range(n as u64, r as u64), task.d, "D")?;
            let mut checks = Vec::new();
            for &d in &ds {
                let t = thresholds::g(n as u64, r as u64, d)?.value;
                checks.push(Check::new(format!("D={d}"), Some(d as usize), Property::NotPackable { r })
                    .min_degree(d as usize)
                    .rule(Rule::MaxEdges(t)));
            }
            // the same question asked of the complements
            for &d in &ds {
                let dual = n as u64 - 1 - d;
                let t = thresholds::f(n as u64, r as u64, dual)?.value;
                checks.push(
                    Check::new(format!("complement D={dual}"), Some(dual as usize), Property::NotColourable { k: n / r })
                        .complemented()
                        .max_degree(dual as usize)
                        .rule(Rule::MinEdges(t)),
                );
            }
            let first = thresholds::g(n as u64, r as u64, ds[0])?.value;
            (checks, density(first + 1))
        }
        Predicate::Conj1 => {
            let r = need_r(task, 2)?;
            let check = Check::new("(alpha) and (beta)".into(), None, Property::NotPackable { r })
                .condition(Condition::AlphaBeta { r })
                .rule(Rule::Never);
            (vec![check], boundary_density(r))
        }
        Predicate::Question1 => {
            let r = need_r(task, 2)?;
            let check = Check::new("question 1 condition".into(), None, Property::NotPackable { r })
                .condition(Condition::Question1 { r })
                .rule(Rule::Never);
            (vec![check], boundary_density(r))
        }
        Predicate::Chvatal => {
            if n == 0 {
                return Err(invalid("chvatal needs n >= 1"));
            }
            let check = Check::new("degree condition".into(), None, Property::NoHamiltonPath)
                .condition(Condition::Chvatal)
                .rule(Rule::Never);
            (vec![check], 0.5)
        }
    })
}

/// Runs a task and returns its report. Node-cap hits give status `aborted`.
pub fn run(task: &EnumerationTask, config: RunConfig) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let (checks, default_p) = plan(task)?;
    let p = match task.mode {
        Mode::Exhaustive => {
            let cap = task.exhaustive_cap.min(MAX_EXHAUSTIVE_N);
            if task.n > cap {
                return Err(VerifyError::ExhaustiveCap { n: task.n, cap });
            }
            None
        }
        Mode::Sampled => {
            if task.seed.is_none() {
                return Err(invalid("sampled mode needs a seed"));
            }
            let p = task.edge_probability.unwrap_or(default_p);
            if !(0.0..=1.0).contains(&p) {
                return Err(invalid(format!("edge probability {p} outside [0, 1]")));
            }
            Some(p)
        }
    };
    let echo = TaskEcho {
        predicate: task.predicate.name().to_string(),
        n: task.n,
        r: task.r,
        d: task.d,
        mode: Some(task.mode),
        samples: p.map(|_| task.samples),
        seed: task.seed.filter(|_| p.is_some()),
        rng: p.map(|_| RNG_ID),
        edge_probability: p,
        filters: task.filters.clone(),
        solver_max_n: None,
        node_cap: task.node_cap,
    };
    let scan = scan::Scan {
        n: task.n,
        checks: &checks,
        filters: &task.filters,
        node_cap: task.node_cap,
        exhaustive: task.mode == Mode::Exhaustive,
    };
    let outcome = match p {
        None => scan::in_pool(config.workers, || scan.exhaustive()),
        Some(p) => scan::in_pool(config.workers, || scan.sampled(task.samples, task.seed.unwrap_or(0), p)),
    };
    let summaries = outcome.summaries;
    let mut notes = Vec::new();
    if !outcome.aborted {
        match task.predicate {
            Predicate::Mainthm1 => notes.extend(duality_notes(task.n, &summaries)),
            Predicate::Conj1 => notes.extend(extremal1_notes(task.n, task.r.unwrap_or(2))),
            Predicate::Question1 => notes.extend(extremal2_notes(task.n, task.r.unwrap_or(2))),
            _ => {}
        }
    }
    let mut report = VerificationReport::finish(echo, outcome.examined, summaries, notes, outcome.aborted);
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// The packing checks and their complemented colouring checks must agree.
fn duality_notes(n: usize, checks: &[CheckSummary]) -> Vec<Note> {
    let half = checks.len() / 2;
    let total = graph::binom2(n) as u64;
    let complement_all = |list: &[String]| -> Option<Vec<String>> {
        let mut out = list
            .iter()
            .map(|s| graph::decode_graph6(s).ok().map(|g| graph::encode_graph6(&g.complement())))
            .collect::<Option<Vec<_>>>()?;
        out.sort();
        Some(out)
    };
    (0..half)
        .map(|i| {
            let (a, b) = (&checks[i], &checks[half + i]);
            let mut dual_witnesses = b.violations.clone();
            dual_witnesses.sort();
            let edges_match = match (&a.extremal, &b.extremal) {
                (Some(x), Some(y)) => x.edges + y.edges == total,
                (None, None) => true,
                _ => false,
            };
            let passed = a.examined == b.examined
                && a.bad == b.bad
                && a.violation_count == b.violation_count
                && edges_match
                && (a.violation_count > MAX_WITNESSES as u64
                    || complement_all(&a.violations) == Some(dual_witnesses));
            Note {
                label: format!("{} matches {}", a.label, b.label),
                passed,
                detail: (!passed).then(|| {
                    format!(
                        "examined {}/{}, bad {}/{}, violations {}/{}",
                        a.examined, b.examined, a.bad, b.bad, a.violation_count, b.violation_count
                    )
                }),
            }
        })
        .collect()
}

/// Each extremal1 graph fails `(alpha)` exactly at index `k` and satisfies `(beta)`.
fn extremal1_notes(n: usize, r: usize) -> Vec<Note> {
    (1..n / r)
        .map(|k| {
            let label = format!("extremal1(n={n}, r={r}, k={k}) fails (alpha) only at i={k}");
            let got = build_extremal1(n, r, k).map(|g| alpha_beta_condition(&g.degree_sequence(), r));
            let want = Err(AlphaBetaViolation { alpha: vec![k], beta: false });
            match got {
                Ok(res) if res == want => Note { label, passed: true, detail: None },
                other => Note { label, passed: false, detail: Some(format!("{other:?}")) },
            }
        })
        .collect()
}

/// Each extremal2 graph fails the question 1 condition exactly at index `k`.
fn extremal2_notes(n: usize, r: usize) -> Vec<Note> {
    (1..=n / r)
        .map(|k| {
            let label = format!("extremal2(n={n}, r={r}, k={k}) fails the condition only at i={k}");
            match build_extremal2(n, r, k).map(|g| question1_failures(&g.degree_sequence(), r)) {
                Ok(f) if f == [k] => Note { label, passed: true, detail: None },
                other => Note { label, passed: false, detail: Some(format!("{other:?}")) },
            }
        })
        .collect()
}

fn exhaustive(predicate: Predicate, n: usize, r: Option<usize>) -> Result<VerificationReport, VerifyError> {
    run(&EnumerationTask::exhaustive(predicate, n, r), RunConfig::default())
}

/// Exhaustive check of the perfect-matching edge threshold for every `d`.
pub fn verify_matching_threshold(n: usize) -> Result<VerificationReport, VerifyError> {
    exhaustive(Predicate::Matching, n, None)
}

/// Exhaustive check of the equitable-colouring edge threshold for every `D`.
pub fn verify_t1_threshold(n: usize, r: usize) -> Result<VerificationReport, VerifyError> {
    exhaustive(Predicate::T1, n, Some(r))
}

/// Exhaustive check of the packing edge threshold for every `D`, with the
/// complemented colouring run as a cross-check.
pub fn verify_mainthm1_threshold(n: usize, r: usize) -> Result<VerificationReport, VerifyError> {
    exhaustive(Predicate::Mainthm1, n, Some(r))
}

/// Searches for graphs satisfying `(alpha)` and `(beta)` without a perfect packing.
pub fn conjecture1_search(task: &EnumerationTask, config: RunConfig) -> Result<VerificationReport, VerifyError> {
    run(&EnumerationTask { predicate: Predicate::Conj1, ..task.clone() }, config)
}

/// Searches for graphs satisfying the question 1 condition without a perfect packing.
pub fn question1_search(task: &EnumerationTask, config: RunConfig) -> Result<VerificationReport, VerifyError> {
    run(&EnumerationTask { predicate: Predicate::Question1, ..task.clone() }, config)
}

/// Exhaustive check that the degree condition forces a Hamilton path.
pub fn verify_chvatal(n: usize) -> Result<VerificationReport, VerifyError> {
    exhaustive(Predicate::Chvatal, n, None)
}

/// Decodes a witness and reports whether it still has the obstruction the
/// predicate looks for.
pub fn witness_has_obstruction(predicate: Predicate, n: usize, r: Option<usize>, graph6: &str) -> Result<bool, VerifyError> {
    let g: Graph = graph::decode_graph6(graph6)?;
    if g.n() != n {
        return Err(invalid(format!("witness has {} vertices, expected {n}", g.n())));
    }
    let r = r.unwrap_or(2);
    let property = match predicate {
        Predicate::Matching => Property::NoPerfectMatching,
        Predicate::T1 => Property::NotColourable { k: n / r },
        Predicate::Mainthm1 | Predicate::Conj1 | Predicate::Question1 => Property::NotPackable { r },
        Predicate::Chvatal => Property::NoHamiltonPath,
    };
    property
        .holds(&g, &crate::solvers::SolveOptions::default())
        .map_err(|e| invalid(e.to_string()))
}

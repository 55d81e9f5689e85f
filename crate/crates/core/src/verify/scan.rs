use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{CheckSummary, Extremal, Filters, MAX_WITNESSES};
use crate::graph::{self, Graph};
use crate::solvers::{
    alpha_beta_condition, chvatal_hampath_condition, equitable_colouring, hamilton_path_exact,
    perfect_kr_packing, perfect_matching, question1_failures, SolveError, SolveOptions,
};

/// Graphs per work unit. Fixed so that merging never depends on scheduling.
const CHUNK: u64 = 1 << 12;

/// The obstruction a check looks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Property {
    NoPerfectMatching,
    NotColourable { k: usize },
    NotPackable { r: usize },
    NoHamiltonPath,
}

impl Property {
    pub(crate) fn holds(self, g: &Graph, opts: &SolveOptions) -> Result<bool, SolveError> {
        Ok(!match self {
            Property::NoPerfectMatching => perfect_matching(g).decision,
            Property::NotColourable { k } => equitable_colouring(g, k, opts)?.decision,
            Property::NotPackable { r } => perfect_kr_packing(g, r, opts)?.decision,
            Property::NoHamiltonPath => hamilton_path_exact(g, 64, opts)?.decision,
        })
    }
}

/// A degree-sequence condition a graph must meet to be examined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Condition {
    None,
    AlphaBeta { r: usize },
    Question1 { r: usize },
    Chvatal,
}

/// What counts as a violation among graphs with the obstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rule {
    /// More edges than the threshold.
    MaxEdges(u64),
    /// Fewer edges than the threshold.
    MinEdges(u64),
    /// Any graph at all.
    Never,
}

#[derive(Debug, Clone)]
pub(crate) struct Check {
    label: String,
    parameter: Option<usize>,
    property: Property,
    complemented: bool,
    min_degree: Option<usize>,
    max_degree: Option<usize>,
    condition: Condition,
    rule: Rule,
}

impl Check {
    pub(crate) fn new(label: String, parameter: Option<usize>, property: Property) -> Self {
        Check {
            label,
            parameter,
            property,
            complemented: false,
            min_degree: None,
            max_degree: None,
            condition: Condition::None,
            rule: Rule::Never,
        }
    }

    /// Evaluate on the complement of each generated graph.
    pub(crate) fn complemented(mut self) -> Self {
        self.complemented = true;
        self
    }

    pub(crate) fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub(crate) fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub(crate) fn condition(mut self, c: Condition) -> Self {
        self.condition = c;
        self
    }

    pub(crate) fn rule(mut self, rule: Rule) -> Self {
        self.rule = rule;
        self
    }

    fn accepts(&self, g: &Graph, degrees: &[usize]) -> bool {
        let lo = degrees.first().copied().unwrap_or(0);
        let hi = degrees.last().copied().unwrap_or(0);
        if self.min_degree.is_some_and(|d| lo < d) || self.max_degree.is_some_and(|d| hi > d) {
            return false;
        }
        match self.condition {
            Condition::None => true,
            Condition::AlphaBeta { r } => alpha_beta_condition(degrees, r).is_ok(),
            Condition::Question1 { r } => question1_failures(degrees, r).is_empty(),
            Condition::Chvatal => chvatal_hampath_condition(g),
        }
    }
}

/// Running totals of one check over a range of graphs.
#[derive(Debug, Clone, Default)]
struct Tally {
    examined: u64,
    bad: u64,
    extreme: Option<(u64, u64, String)>,
    violation_count: u64,
    violations: Vec<String>,
}

impl Tally {
    fn better(rule: Rule, new: (u64, u64), old: (u64, u64)) -> bool {
        match rule {
            Rule::MaxEdges(_) => new.0 > old.0 || new.0 == old.0 && new.1 < old.1,
            Rule::MinEdges(_) => new.0 < old.0 || new.0 == old.0 && new.1 < old.1,
            Rule::Never => false,
        }
    }

    fn offer_extreme(&mut self, rule: Rule, edges: u64, key: u64, g: impl FnOnce() -> String) {
        let replace = match &self.extreme {
            None => rule != Rule::Never,
            Some((e, k, _)) => Tally::better(rule, (edges, key), (*e, *k)),
        };
        if replace {
            self.extreme = Some((edges, key, g()));
        }
    }

    /// Appends a later range.
    fn absorb(&mut self, rule: Rule, other: Tally) {
        self.examined += other.examined;
        self.bad += other.bad;
        self.violation_count += other.violation_count;
        let room = MAX_WITNESSES.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
        if let Some((e, k, s)) = other.extreme {
            self.offer_extreme(rule, e, k, || s);
        }
    }
}

pub(crate) struct Scan<'a> {
    pub n: usize,
    pub checks: &'a [Check],
    pub filters: &'a Filters,
    pub node_cap: u64,
    pub exhaustive: bool,
}

pub(crate) struct ScanOutcome {
    pub examined: u64,
    pub summaries: Vec<CheckSummary>,
    pub aborted: bool,
}

struct Partial {
    examined: u64,
    tallies: Vec<Tally>,
}

/// Runs `f` on a pool with `workers` threads, or the global pool for 0.
pub(crate) fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

impl Scan<'_> {
    fn evaluate(&self, g: &Graph, key: u64, opts: &SolveOptions, tallies: &mut [Tally]) -> Result<(), SolveError> {
        let degrees = g.degree_sequence();
        let edges = g.edge_count();
        if !self.filters.accepts(edges, &degrees) {
            return Ok(());
        }
        let mut dual: Option<(Graph, Vec<usize>)> = None;
        let mut cache: Vec<(Property, bool, bool)> = Vec::new();
        for (check, tally) in self.checks.iter().zip(tallies.iter_mut()) {
            let (h, hdeg, hedges) = if check.complemented {
                let (c, cd) = dual.get_or_insert_with(|| {
                    let c = g.complement();
                    let d = c.degree_sequence();
                    (c, d)
                });
                (&*c, cd.as_slice(), graph::binom2(self.n) - edges)
            } else {
                (g, degrees.as_slice(), edges)
            };
            if !check.accepts(h, hdeg) {
                continue;
            }
            tally.examined += 1;
            let bad = match cache.iter().find(|c| c.0 == check.property && c.1 == check.complemented) {
                Some(c) => c.2,
                None => {
                    let b = check.property.holds(h, opts)?;
                    cache.push((check.property, check.complemented, b));
                    b
                }
            };
            if !bad {
                continue;
            }
            tally.bad += 1;
            let e = hedges as u64;
            tally.offer_extreme(check.rule, e, key, || graph::encode_graph6(h));
            let violates = match check.rule {
                Rule::MaxEdges(t) => e > t,
                Rule::MinEdges(t) => e < t,
                Rule::Never => true,
            };
            if violates {
                tally.violation_count += 1;
                if tally.violations.len() < MAX_WITNESSES {
                    tally.violations.push(graph::encode_graph6(h));
                }
            }
        }
        Ok(())
    }

    fn run_chunks<F>(&self, total: u64, make: F) -> ScanOutcome
    where
        F: Fn(u64) -> Graph + Sync,
    {
        let opts = SolveOptions::with_node_cap(self.node_cap);
        let chunks = total.div_ceil(CHUNK);
        let partials: Vec<Result<Partial, SolveError>> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut tallies = vec![Tally::default(); self.checks.len()];
                let lo = c * CHUNK;
                let hi = (lo + CHUNK).min(total);
                for key in lo..hi {
                    self.evaluate(&make(key), key, &opts, &mut tallies)?;
                }
                Ok(Partial { examined: hi - lo, tallies })
            })
            .collect();

        let mut examined = 0;
        let mut aborted = false;
        let mut totals = vec![Tally::default(); self.checks.len()];
        for p in partials {
            match p {
                Ok(p) => {
                    examined += p.examined;
                    for ((t, part), check) in totals.iter_mut().zip(p.tallies).zip(self.checks) {
                        t.absorb(check.rule, part);
                    }
                }
                Err(_) => aborted = true,
            }
        }
        let summaries = self
            .checks
            .iter()
            .zip(totals)
            .map(|(check, t)| self.summarize(check, t, aborted))
            .collect();
        ScanOutcome { examined, summaries, aborted }
    }

    fn summarize(&self, check: &Check, t: Tally, aborted: bool) -> CheckSummary {
        let threshold = match check.rule {
            Rule::MaxEdges(x) | Rule::MinEdges(x) => Some(x),
            Rule::Never => None,
        };
        let extremal = t.extreme.map(|(edges, _, graph6)| Extremal { edges, graph6 });
        let sharp = match (self.exhaustive, threshold) {
            (true, Some(x)) => Some(extremal.as_ref().is_some_and(|e| e.edges == x)),
            _ => None,
        };
        CheckSummary {
            label: check.label.clone(),
            parameter: check.parameter,
            threshold,
            examined: t.examined,
            bad: t.bad,
            extremal,
            sharp,
            violation_count: t.violation_count,
            violations: t.violations,
            passed: !aborted && t.violation_count == 0 && sharp != Some(false),
        }
    }

    pub(crate) fn exhaustive(&self) -> ScanOutcome {
        let n = self.n;
        self.run_chunks(1u64 << graph::binom2(n), |mask| Graph::from_edge_mask(n, mask))
    }

    pub(crate) fn sampled(&self, samples: u64, seed: u64, p: f64) -> ScanOutcome {
        let n = self.n;
        self.run_chunks(samples, |i| sample_graph(n, seed, i, p))
    }
}

/// Draw `index` of the stream for `seed`: each edge slot, in graph6 order,
/// is present with probability `p`.
pub(crate) fn sample_graph(n: usize, seed: u64, index: u64, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut g = Graph::new(n);
    for (u, v) in graph::edge_slots(n) {
        if rng.random_bool(p) {
            g.add_edge(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_reproducible_and_distinct() {
        let a = sample_graph(10, 7, 3, 0.5);
        assert_eq!(a, sample_graph(10, 7, 3, 0.5));
        assert_ne!(a, sample_graph(10, 7, 4, 0.5));
        assert_ne!(a, sample_graph(10, 8, 3, 0.5));
        assert_eq!(sample_graph(6, 1, 0, 0.0).edge_count(), 0);
        assert_eq!(sample_graph(6, 1, 0, 1.0).edge_count(), 15);
    }

    #[test]
    fn tally_keeps_lowest_key_on_ties() {
        let mut t = Tally::default();
        t.offer_extreme(Rule::MaxEdges(0), 5, 9, || "a".into());
        t.offer_extreme(Rule::MaxEdges(0), 5, 3, || "b".into());
        t.offer_extreme(Rule::MaxEdges(0), 4, 1, || "c".into());
        assert_eq!(t.extreme, Some((5, 3, "b".into())));
    }
}

//! Greedy perfect `K_r`-packing for graphs whose low-degree vertices lie in
//! no `K_{r+1}`.
//!
//! Each round works on the still-uncovered vertices `W`, `n' = |W|`. If every
//! vertex has degree at least `(r-1)n'/r` in `G[W]`, the rest is handed to the
//! exact packing search. Otherwise a minimum-degree vertex `x_1` is extended
//! to an `r`-clique by repeatedly taking a common neighbour of degree at
//! least `(r-1)n'/r`, and that clique is removed.

use super::conditions::{alpha_beta_condition, vertex_in_clique};
use super::packing::perfect_kr_packing;
use super::{Certificate, SolveError, SolveOptions, SolveOutcome};
use crate::certificate::PackingCertificate;
use crate::graph::{bitset, Graph, VertexSet};

fn check_hypotheses(g: &Graph, r: usize) -> Result<(), SolveError> {
    let n = g.n();
    if r < 2 || !n.is_multiple_of(r) || n == 0 {
        return Err(SolveError::InvalidParameter(format!(
            "need r >= 2 and r | n > 0, got n={n}, r={r}"
        )));
    }
    if let Err(v) = alpha_beta_condition(&g.degree_sequence(), r) {
        let mut parts = Vec::new();
        if !v.alpha.is_empty() {
            parts.push(format!("(alpha) at {:?}", v.alpha));
        }
        if v.beta {
            parts.push("(beta)".to_string());
        }
        return Err(SolveError::HypothesisViolated(format!(
            "degree sequence fails {}",
            parts.join(" and ")
        )));
    }
    let high = (r - 1) * n;
    for x in 0..n {
        if g.degree(x) * r < high && vertex_in_clique(g, x, r + 1) {
            return Err(SolveError::HypothesisViolated(format!(
                "vertex {x} of degree {} lies in a K_{}",
                g.degree(x),
                r + 1
            )));
        }
    }
    Ok(())
}

/// Runs the greedy packing after checking its hypotheses.
pub fn krfree_greedy_packing(
    g: &Graph,
    r: usize,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    check_hypotheses(g, r)?;
    let n = g.n();
    let mut live = VertexSet::full(n);
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(n / r);
    let mut nodes = 0u64;

    while !live.is_empty() {
        nodes += 1;
        let m = live.len();
        let deg = |v: usize| g.degree_into(v, &live);
        let is_high = |v: usize| deg(v) * r >= (r - 1) * m;
        let x1 = live
            .iter()
            .min_by_key(|&v| (deg(v), v))
            .expect("live set is nonempty");

        if is_high(x1) {
            let (sub, labels) = g.induced(&live);
            let out = perfect_kr_packing(&sub, r, opts)?;
            nodes += out.nodes_explored;
            let Some(p) = out.packing() else {
                return Err(SolveError::HypothesisViolated(format!(
                    "remaining {m} vertices meet the minimum-degree bound but have no packing"
                )));
            };
            blocks.extend(
                p.blocks
                    .iter()
                    .map(|b| b.iter().map(|&i| labels[i]).collect::<Vec<_>>()),
            );
            break;
        }

        let mut clique = vec![x1];
        let mut common: Vec<u64> = g
            .row(x1)
            .iter()
            .zip(live.words())
            .map(|(a, b)| a & b)
            .collect();
        while clique.len() < r {
            let next = if r == 2 {
                bitset::first(&common)
            } else {
                bitset::Ones::new(&common).find(|&v| is_high(v))
            };
            let Some(x) = next else {
                return Err(SolveError::HypothesisViolated(format!(
                    "no high-degree common neighbour extends {clique:?}"
                )));
            };
            clique.push(x);
            for (c, a) in common.iter_mut().zip(g.row(x)) {
                *c &= a;
            }
        }
        if bitset::count(&common) > 0 {
            return Err(SolveError::HypothesisViolated(format!(
                "low-degree vertex {x1} lies in a K_{} with {clique:?}",
                r + 1
            )));
        }
        for &v in &clique {
            live.remove(v);
        }
        clique.sort_unstable();
        blocks.push(clique);
    }

    Ok(SolveOutcome::yes(
        Certificate::Packing(PackingCertificate { blocks }),
        nodes,
    ))
}

//! Partition of a `K_{r+1}`-free graph with `d_{n/r} >= (r-1)n/r` into `r`
//! independent classes of size `n/r`, witnessing `G ⊆ T(n,r)`.
//!
//! Classes are built one at a time. For class `j+1`, take one high-degree
//! vertex (degree at least `(r-1)n/r`) from each of `V_1..V_j`, extend them
//! greedily to a `K_{r-1}` of high-degree vertices, and let `V_{j+1}` be the
//! first `n/r` vertices of their common neighbourhood. `K_{r+1}`-freeness
//! makes that neighbourhood independent, and a high-degree vertex of `V_k`
//! is adjacent to everything outside `V_k`, so the new class avoids the old
//! ones.

use super::conditions::find_clique;
use super::SolveError;
use crate::graph::{bitset, Graph, VertexSet};

fn violated(msg: String) -> SolveError {
    SolveError::HypothesisViolated(msg)
}

/// Returns `r` pairwise disjoint independent sets of size `n/r` covering the
/// vertex set, after checking the hypotheses (the `K_{r+1}` check is an exact
/// clique search).
pub fn turan_partition(g: &Graph, r: usize) -> Result<Vec<VertexSet>, SolveError> {
    let n = g.n();
    if r == 0 || !n.is_multiple_of(r) || n < r {
        return Err(SolveError::InvalidParameter(format!(
            "need r >= 1, r | n and n >= r, got n={n}, r={r}"
        )));
    }
    let k = n / r;
    let threshold = (r - 1) * k;
    let d = g.degree_sequence();
    if d[k - 1] < threshold {
        return Err(violated(format!(
            "d_{k} = {} is below (r-1)n/r = {threshold}",
            d[k - 1]
        )));
    }
    if let Some(c) = find_clique(g, r + 1) {
        return Err(violated(format!("graph contains the K_{} {c:?}", r + 1)));
    }

    let high: Vec<u64> = {
        let mut h = VertexSet::empty(n);
        for v in (0..n).filter(|&v| g.degree(v) >= threshold) {
            h.insert(v);
        }
        h.words().to_vec()
    };
    let mut classes: Vec<VertexSet> = Vec::with_capacity(r);

    while classes.len() < r {
        let mut clique = Vec::with_capacity(r - 1);
        for class in &classes {
            let pick = bitset::Ones::new(class.words()).find(|&v| bitset::test(&high, v));
            let Some(v) = pick else {
                return Err(violated(format!(
                    "class {:?} has no vertex of degree >= {threshold}",
                    class.to_vec()
                )));
            };
            clique.push(v);
        }
        let mut common = bitset::full(n);
        for &v in &clique {
            for (c, a) in common.iter_mut().zip(g.row(v)) {
                *c &= a;
            }
        }
        while clique.len() < r - 1 {
            let pick = bitset::Ones::new(&common).find(|&v| bitset::test(&high, v));
            let Some(v) = pick else {
                return Err(violated(format!("cannot extend {clique:?} to a K_{}", r - 1)));
            };
            clique.push(v);
            for (c, a) in common.iter_mut().zip(g.row(v)) {
                *c &= a;
            }
        }
        let chosen: Vec<usize> = bitset::Ones::new(&common).take(k).collect();
        if chosen.len() < k {
            return Err(violated(format!(
                "common neighbourhood of {clique:?} has only {} vertices",
                chosen.len()
            )));
        }
        let class = VertexSet::from_vertices(n, chosen).expect("vertices in range");
        if !g.is_independent(&class) || classes.iter().any(|c| !c.is_disjoint(&class)) {
            return Err(violated(format!(
                "class {:?} is not an independent set disjoint from earlier classes",
                class.to_vec()
            )));
        }
        classes.push(class);
    }
    Ok(classes)
}

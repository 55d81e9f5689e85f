//! Degree-sequence conditions and small structural checks.

use serde::Serialize;

use crate::graph::bitset::{self, Ones};
use crate::graph::{Graph, VertexSet};

/// `delta(G) >= (r-1)n/r`, the minimum degree that guarantees a perfect
/// `K_r`-packing when `r | n`.
pub fn hajnal_szemeredi_guarantee(g: &Graph, r: usize) -> bool {
    r >= 1 && g.n().is_multiple_of(r) && g.min_degree() * r >= (r - 1) * g.n()
}

/// For all `1 <= i <= n/2`: `d_i >= i` or `d_{n-i+1} >= n-i` (1-indexed,
/// ascending degrees). A sufficient condition for a Hamilton path.
pub fn chvatal_hampath_condition(g: &Graph) -> bool {
    let d = g.degree_sequence();
    let n = d.len();
    (1..=n / 2).all(|i| d[i - 1] >= i || d[n - i] >= n - i)
}

/// Which part of the `(alpha)`/`(beta)` degree-sequence condition fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaBetaViolation {
    /// Indices `i < n/r` with `d_i < (r-2)n/r + i`.
    pub alpha: Vec<usize>,
    /// Whether `d_{n/r+1} < (r-1)n/r`.
    pub beta: bool,
}

/// Checks `(alpha)` `d_i >= (r-2)n/r + i` for all `i < n/r` and `(beta)`
/// `d_{n/r+1} >= (r-1)n/r` on an ascending degree sequence. Needs `r >= 2`
/// and `r | n`.
pub fn alpha_beta_condition(degrees: &[usize], r: usize) -> Result<(), AlphaBetaViolation> {
    let n = degrees.len();
    assert!(r >= 2 && n.is_multiple_of(r) && n >= r, "need r >= 2 and r | n");
    let k = n / r;
    let alpha: Vec<usize> = (1..k)
        .filter(|&i| degrees[i - 1] < (r - 2) * k + i)
        .collect();
    let beta = degrees[k] < (r - 1) * k;
    if alpha.is_empty() && !beta {
        Ok(())
    } else {
        Err(AlphaBetaViolation { alpha, beta })
    }
}

/// Indices `i <= n/r` where both `d_i >= (r-2)n/r + i` and
/// `d_{n-i(r-1)+1} >= n-i` fail. Empty means the condition holds.
pub fn question1_failures(degrees: &[usize], r: usize) -> Vec<usize> {
    let n = degrees.len();
    assert!(r >= 2 && n.is_multiple_of(r), "need r >= 2 and r | n");
    let k = n / r;
    (1..=k)
        .filter(|&i| {
            let first = degrees[i - 1] >= (r - 2) * k + i;
            let second = degrees[n - i * (r - 1)] >= n - i;
            !(first || second)
        })
        .collect()
}

fn clique_in(g: &Graph, cand: &[u64], size: usize, acc: &mut Vec<usize>) -> bool {
    if size == 0 {
        return true;
    }
    if bitset::count(cand) < size {
        return false;
    }
    let mut rest = cand.to_vec();
    while let Some(u) = bitset::first(&rest) {
        bitset::clear(&mut rest, u);
        let next: Vec<u64> = rest.iter().zip(g.row(u)).map(|(a, b)| a & b).collect();
        acc.push(u);
        if clique_in(g, &next, size - 1, acc) {
            return true;
        }
        acc.pop();
        if bitset::count(&rest) < size {
            break;
        }
    }
    false
}

/// Lexicographically first clique on `size` vertices, if any.
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    let mut acc = Vec::with_capacity(size);
    clique_in(g, &bitset::full(g.n()), size, &mut acc).then_some(acc)
}

pub fn contains_clique(g: &Graph, size: usize) -> bool {
    find_clique(g, size).is_some()
}

/// Whether `v` lies in a clique on `size` vertices.
pub fn vertex_in_clique(g: &Graph, v: usize, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    let mut acc = vec![v];
    clique_in(g, g.row(v), size - 1, &mut acc)
}

/// Whether the graph induced on `set` contains a path with three edges.
fn has_p4(g: &Graph, set: &VertexSet) -> bool {
    let s = set.words();
    for b in set.iter() {
        for c in Ones::new(g.row(b)).filter(|&c| c > b && set.contains(c)) {
            // a ~ b and d ~ c, with a, b, c, d distinct
            let mut ends_b: Vec<u64> = g.row(b).iter().zip(s).map(|(x, y)| x & y).collect();
            bitset::clear(&mut ends_b, c);
            let mut ends_c: Vec<u64> = g.row(c).iter().zip(s).map(|(x, y)| x & y).collect();
            bitset::clear(&mut ends_c, b);
            let nb = bitset::count(&ends_b);
            let nc = bitset::count(&ends_c);
            if nb == 0 || nc == 0 {
                continue;
            }
            let union: Vec<u64> = ends_b.iter().zip(&ends_c).map(|(x, y)| x | y).collect();
            if bitset::count(&union) >= 2 {
                return true;
            }
        }
    }
    false
}

/// Vertices `x` whose neighbourhood `G[N(x)]` contains no path with three
/// edges. Such a vertex rules out the square of a Hamilton cycle.
pub fn square_necessary_condition(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&x| !has_p4(g, &g.neighbor_set(x))).collect()
}

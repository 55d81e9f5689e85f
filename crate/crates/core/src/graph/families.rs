//! Standard graph families. Vertices are labeled class by class in the
//! order the classes are listed.

use super::Graph;
use crate::error::{ensure_range, Result};

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

/// Complete multipartite graph with the given class sizes (empty classes allowed).
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut g = Graph::new(n);
    let class = class_labels(sizes);
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Disjoint union of cliques with the given sizes.
pub fn disjoint_cliques(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut g = Graph::new(n);
    let class = class_labels(sizes);
    for u in 0..n {
        for v in u + 1..n {
            if class[u] == class[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn class_labels(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
        .collect()
}

/// Near-equal class sizes of `T(m, s)`: `m mod s` classes of size
/// `ceil(m/s)` first, then the rest of size `floor(m/s)`. When `m < s` only
/// the `m` singleton classes are returned.
pub fn turan_class_sizes(m: usize, s: usize) -> Vec<usize> {
    assert!(s >= 1, "Turán graph needs at least one part");
    let parts = s.min(m);
    if parts == 0 {
        return Vec::new();
    }
    let (q, a) = (m / parts, m % parts);
    (0..parts).map(|i| if i < a { q + 1 } else { q }).collect()
}

/// Turán graph `T(m, s)`; with `m <= s` this is `K_m`.
pub fn turan_graph(m: usize, s: usize) -> Graph {
    complete_multipartite(&turan_class_sizes(m, s))
}

/// Complement of `T(m, s)`: disjoint near-equal cliques.
pub fn turan_complement(m: usize, s: usize) -> Graph {
    disjoint_cliques(&turan_class_sizes(m, s))
}

/// `T*(n, r)`: complete `r`-partite with `r-2` classes of size `n/r`, then
/// one of size `n/r - 1` and one of size `n/r + 1`.
pub fn t_star(n: usize, r: usize) -> Result<Graph> {
    ensure_range!(r >= 2, "T*(n,r) needs r >= 2, got r={r}");
    ensure_range!(n.is_multiple_of(r) && n >= r, "T*(n,r) needs r | n and n >= r, got n={n}, r={r}");
    let k = n / r;
    let mut sizes = vec![k; r - 2];
    sizes.push(k - 1);
    sizes.push(k + 1);
    Ok(complete_multipartite(&sizes))
}

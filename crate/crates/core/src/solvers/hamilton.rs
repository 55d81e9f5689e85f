use super::{Budget, Certificate, SolveError, SolveOptions, SolveOutcome};
use crate::graph::Graph;

pub const DEFAULT_HAMILTON_CAP: usize = 14;

struct PathSearch<'a, 'b> {
    g: &'a Graph,
    adj: Vec<u64>,
    full: u64,
    path: Vec<usize>,
    budget: Budget<'b>,
}

impl PathSearch<'_, '_> {
    fn grow(&mut self, last: usize, visited: u64) -> Result<bool, SolveError> {
        self.budget.tick()?;
        if visited == self.full {
            return Ok(true);
        }
        let unvisited = self.full & !visited;
        // an unvisited vertex with no unvisited or endpoint neighbour is unreachable
        let mut m = unvisited;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[u] & (unvisited | 1 << last) == 0 {
                return Ok(false);
            }
        }
        let mut next = self.adj[last] & unvisited;
        while next != 0 {
            let u = next.trailing_zeros() as usize;
            next &= next - 1;
            self.path.push(u);
            if self.grow(u, visited | 1 << u)? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }
}

/// Exact Hamilton path search for graphs with at most `order_cap` vertices
/// (and never more than 64). The certificate is the vertex order.
pub fn hamilton_path_exact(
    g: &Graph,
    order_cap: usize,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    let n = g.n();
    let cap = order_cap.min(64);
    if n > cap {
        return Err(SolveError::OrderCapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(SolveOutcome::yes(Certificate::Path(Vec::new()), 0));
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let mut search = PathSearch {
        g,
        adj,
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        path: Vec::with_capacity(n),
        budget: Budget::new(opts),
    };
    for start in 0..n {
        search.path.clear();
        search.path.push(start);
        if search.grow(start, 1 << start)? {
            let path = std::mem::take(&mut search.path);
            debug_assert!(path.windows(2).all(|w| search.g.has_edge(w[0], w[1])));
            return Ok(SolveOutcome::yes(Certificate::Path(path), search.budget.nodes));
        }
    }
    Ok(SolveOutcome::no(search.budget.nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    fn ham(g: &Graph) -> SolveOutcome {
        let out = hamilton_path_exact(g, DEFAULT_HAMILTON_CAP, &SolveOptions::default()).unwrap();
        if let Some(p) = out.path() {
            let mut seen = p.to_vec();
            seen.sort();
            assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
            assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
        out
    }

    /// Oracle: every permutation of the vertex set.
    fn brute(g: &Graph) -> bool {
        fn perms(g: &Graph, prefix: &mut Vec<usize>, left: &mut Vec<usize>) -> bool {
            if left.is_empty() {
                return true;
            }
            for i in 0..left.len() {
                let v = left.remove(i);
                let ok = prefix.last().is_none_or(|&u| g.has_edge(u, v));
                prefix.push(v);
                if ok && perms(g, prefix, left) {
                    return true;
                }
                prefix.pop();
                left.insert(i, v);
            }
            false
        }
        perms(g, &mut Vec::new(), &mut (0..g.n()).collect())
    }

    #[test]
    fn small_examples() {
        assert!(ham(&path(4)).decision);
        assert!(!ham(&star(3)).decision);
        assert!(ham(&cycle(6)).decision);
        assert!(ham(&complete(1)).decision);
        assert!(!ham(&Graph::new(2)).decision);
    }

    #[test]
    fn order_cap() {
        let res = hamilton_path_exact(&path(15), DEFAULT_HAMILTON_CAP, &SolveOptions::default());
        assert_eq!(res, Err(SolveError::OrderCapExceeded { n: 15, cap: 14 }));
        assert!(hamilton_path_exact(&path(15), 20, &SolveOptions::default()).unwrap().decision);
    }

    #[test]
    fn agrees_with_permutation_oracle() {
        for mask in (0..(1u64 << 15)).step_by(11) {
            let g = Graph::from_edge_mask(6, mask);
            assert_eq!(ham(&g).decision, brute(&g), "mask {mask}");
        }
    }
}

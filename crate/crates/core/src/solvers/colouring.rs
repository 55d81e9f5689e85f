//! Exact equitable colouring.
//!
//! When `k | n` an equitable `k`-colouring is a partition into independent
//! sets of size `n/k`, i.e. a perfect `K_{n/k}`-packing of the complement,
//! and the packing search is reused. Otherwise classes are filled by direct
//! backtracking with size caps `floor(n/k)` / `ceil(n/k)`.

use super::{packing::perfect_kr_packing, Budget, Certificate, SolveError, SolveOptions, SolveOutcome};
use crate::certificate::ColouringCertificate;
use crate::graph::Graph;

struct Filler<'a, 'b> {
    g: &'a Graph,
    k: usize,
    small: usize,
    big_allowed: usize,
    classes: Vec<Vec<usize>>,
    big_used: usize,
    budget: Budget<'b>,
}

impl Filler<'_, '_> {
    fn fits(&self, class: &[usize], v: usize) -> bool {
        class.iter().all(|&u| !self.g.has_edge(u, v))
    }

    fn deficit(&self) -> usize {
        let open: usize = self.classes.iter().map(|c| self.small.saturating_sub(c.len())).sum();
        open + (self.k - self.classes.len()) * self.small
    }

    fn assign(&mut self, v: usize) -> Result<bool, SolveError> {
        self.budget.tick()?;
        let n = self.g.n();
        if v == n {
            let all_open = self.classes.len() == self.k || self.small == 0;
            return Ok(all_open && self.classes.iter().all(|c| c.len() >= self.small));
        }
        if self.deficit() > n - v {
            return Ok(false);
        }
        for i in 0..self.classes.len() {
            let len = self.classes[i].len();
            let grows_big = len == self.small;
            if len > self.small || (grows_big && self.big_used == self.big_allowed) {
                continue;
            }
            if !self.fits(&self.classes[i], v) {
                continue;
            }
            self.classes[i].push(v);
            self.big_used += grows_big as usize;
            if self.assign(v + 1)? {
                return Ok(true);
            }
            self.big_used -= grows_big as usize;
            self.classes[i].pop();
        }
        // classes are unlabeled, so opening a new one is a single branch
        if self.classes.len() < self.k {
            let grows_big = self.small == 0;
            if !grows_big || self.big_used < self.big_allowed {
                self.classes.push(vec![v]);
                self.big_used += grows_big as usize;
                if self.assign(v + 1)? {
                    return Ok(true);
                }
                self.big_used -= grows_big as usize;
                self.classes.pop();
            }
        }
        Ok(false)
    }
}

/// Decides whether `g` has an equitable `k`-colouring (`k >= 1`). The
/// certificate always has exactly `k` classes, some possibly empty when
/// `k > n`.
pub fn equitable_colouring(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidParameter("need at least one colour".into()));
    }
    let n = g.n();
    if n.is_multiple_of(k) {
        if n == 0 {
            return Ok(SolveOutcome::yes(
                Certificate::Colouring(ColouringCertificate { classes: vec![Vec::new(); k] }),
                0,
            ));
        }
        let out = perfect_kr_packing(&g.complement(), n / k, opts)?;
        return Ok(match out.packing() {
            Some(p) => SolveOutcome::yes(
                Certificate::Colouring(ColouringCertificate { classes: p.blocks.clone() }),
                out.nodes_explored,
            ),
            None => SolveOutcome::no(out.nodes_explored),
        });
    }
    let mut filler = Filler {
        g,
        k,
        small: n / k,
        big_allowed: n % k,
        classes: Vec::with_capacity(k),
        big_used: 0,
        budget: Budget::new(opts),
    };
    let found = filler.assign(0)?;
    let nodes = filler.budget.nodes;
    Ok(if found {
        let mut classes = filler.classes;
        classes.resize(k, Vec::new());
        SolveOutcome::yes(Certificate::Colouring(ColouringCertificate { classes }), nodes)
    } else {
        SolveOutcome::no(nodes)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_cliques, empty, path, star};

    fn colour(g: &Graph, k: usize) -> SolveOutcome {
        let out = equitable_colouring(g, k, &SolveOptions::default()).unwrap();
        if let Some(c) = out.colouring() {
            c.validate(g, k).unwrap();
        }
        out
    }

    /// Oracle: all k^n colour assignments.
    fn brute(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let mut col = vec![0; n];
            for c in col.iter_mut() {
                *c = code % k;
                code /= k;
            }
            let proper = g.edges().all(|(u, v)| col[u] != col[v]);
            let mut sizes = vec![0usize; k];
            for &c in &col {
                sizes[c] += 1;
            }
            let (lo, hi) = (sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
            proper && hi - lo <= 1
        })
    }

    #[test]
    fn spec_examples() {
        let g1 = disjoint_cliques(&[3, 1, 1, 1]);
        assert!(!colour(&g1, 2).decision);
        for k in 1..=5 {
            assert!(colour(&empty(5), k).decision);
        }
        let p4 = path(4);
        let out = colour(&p4, 2);
        assert!(out.decision);
        let mut classes = out.colouring().unwrap().classes.clone();
        classes.sort();
        assert_eq!(classes, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn non_divisible_cases() {
        // a star is 2-colourable but not equitably
        assert!(!colour(&star(4), 2).decision);
        assert!(colour(&star(4), 4).decision);
        assert!(colour(&cycle(5), 3).decision);
        assert!(!colour(&complete(5), 4).decision);
        assert!(colour(&complete(3), 7).decision);
        assert!(equitable_colouring(&empty(2), 0, &SolveOptions::default()).is_err());
    }

    #[test]
    fn agrees_with_assignment_oracle() {
        for mask in (0..(1u64 << 10)).step_by(7) {
            let g = Graph::from_edge_mask(5, mask);
            for k in 1..=4 {
                assert_eq!(colour(&g, k).decision, brute(&g, k), "mask {mask} k {k}");
            }
        }
    }
}

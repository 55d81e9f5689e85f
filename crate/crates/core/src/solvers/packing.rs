//! Exact perfect `K_r`-packing by backtracking.
//!
//! The lowest-indexed uncovered vertex must lie in some block, so the search
//! branches over the `r`-cliques through it inside the uncovered set, in
//! lexicographic order. A branch dies as soon as an uncovered vertex has
//! fewer than `r - 1` uncovered neighbours.

use super::{Budget, Certificate, SolveError, SolveOptions, SolveOutcome};
use crate::certificate::PackingCertificate;
use crate::graph::bitset::{self, Ones};
use crate::graph::Graph;

struct Packer<'a, 'b> {
    g: &'a Graph,
    r: usize,
    budget: Budget<'b>,
    blocks: Vec<Vec<usize>>,
    clique: Vec<usize>,
}

impl Packer<'_, '_> {
    fn dead_end(&self, uncovered: &[u64]) -> bool {
        Ones::new(uncovered).any(|u| bitset::count_and(self.g.row(u), uncovered) + 1 < self.r)
    }

    fn cover(&mut self, uncovered: &mut Vec<u64>) -> Result<bool, SolveError> {
        self.budget.tick()?;
        let Some(v) = bitset::first(uncovered) else {
            return Ok(true);
        };
        if self.dead_end(uncovered) {
            return Ok(false);
        }
        bitset::clear(uncovered, v);
        let cand: Vec<u64> = self
            .g
            .row(v)
            .iter()
            .zip(uncovered.iter())
            .map(|(a, b)| a & b)
            .collect();
        self.clique.clear();
        self.clique.push(v);
        let found = self.extend(uncovered, &cand)?;
        if !found {
            bitset::set(uncovered, v);
        }
        Ok(found)
    }

    /// Extends the partial block in `self.clique` by vertices of `cand`
    /// taken in increasing order.
    fn extend(&mut self, uncovered: &mut Vec<u64>, cand: &[u64]) -> Result<bool, SolveError> {
        if self.clique.len() == self.r {
            let block = self.clique.clone();
            for &u in &block[1..] {
                bitset::clear(uncovered, u);
            }
            self.blocks.push(block);
            let mut rest = uncovered.clone();
            if self.cover(&mut rest)? {
                return Ok(true);
            }
            let block = self.blocks.pop().expect("block pushed above");
            for &u in &block[1..] {
                bitset::set(uncovered, u);
            }
            self.clique = block;
            return Ok(false);
        }
        let need = self.r - self.clique.len();
        if bitset::count(cand) < need {
            return Ok(false);
        }
        let mut remaining = cand.to_vec();
        while let Some(u) = bitset::first(&remaining) {
            self.budget.tick()?;
            bitset::clear(&mut remaining, u);
            if bitset::count(&remaining) + 1 < need {
                break;
            }
            let next: Vec<u64> = remaining
                .iter()
                .zip(self.g.row(u))
                .map(|(a, b)| a & b)
                .collect();
            self.clique.push(u);
            if self.extend(uncovered, &next)? {
                return Ok(true);
            }
            self.clique.pop();
        }
        Ok(false)
    }
}

/// Decides whether `g` has a perfect `K_r`-packing (`r >= 1`).
pub fn perfect_kr_packing(
    g: &Graph,
    r: usize,
    opts: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    if r == 0 {
        return Err(SolveError::InvalidParameter("clique size must be at least 1".into()));
    }
    if !g.n().is_multiple_of(r) {
        return Ok(SolveOutcome::no(0));
    }
    let mut packer = Packer {
        g,
        r,
        budget: Budget::new(opts),
        blocks: Vec::with_capacity(g.n() / r),
        clique: Vec::with_capacity(r),
    };
    let mut uncovered = bitset::full(g.n());
    let found = packer.cover(&mut uncovered)?;
    let nodes = packer.budget.nodes;
    Ok(if found {
        SolveOutcome::yes(
            Certificate::Packing(PackingCertificate { blocks: packer.blocks }),
            nodes,
        )
    } else {
        SolveOutcome::no(nodes)
    })
}

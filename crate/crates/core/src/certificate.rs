//! Witnesses returned by the solvers and the validators that check them.
//!
//! Validation only uses the raw adjacency of the graph; it shares no code
//! with the search routines that produce the certificates.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("block {block} has {size} vertices, expected {expected}")]
    BlockSize { block: usize, size: usize, expected: usize },
    #[error("vertex {0} is covered more than once")]
    Overlap(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("vertex {0} outside the graph")]
    OutOfRange(usize),
    #[error("vertices {0} and {1} in the same block are not adjacent")]
    NotClique(usize, usize),
    #[error("vertices {0} and {1} in the same class are adjacent")]
    NotIndependent(usize, usize),
    #[error("class sizes range from {min} to {max}")]
    Unbalanced { min: usize, max: usize },
    #[error("expected {expected} classes, found {found}")]
    ClassCount { expected: usize, found: usize },
}

/// Partition of the vertex set into cliques of a common size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingCertificate {
    pub blocks: Vec<Vec<usize>>,
}

/// Partition of the vertex set into independent classes whose sizes differ
/// by at most one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColouringCertificate {
    pub classes: Vec<Vec<usize>>,
}

fn check_partition(n: usize, parts: &[Vec<usize>]) -> Result<(), CertificateError> {
    let mut seen = vec![false; n];
    for &v in parts.iter().flatten() {
        if v >= n {
            return Err(CertificateError::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(CertificateError::Overlap(v));
        }
    }
    match seen.iter().position(|s| !s) {
        Some(v) => Err(CertificateError::Uncovered(v)),
        None => Ok(()),
    }
}

impl PackingCertificate {
    pub fn from_sets(sets: &[VertexSet]) -> Self {
        PackingCertificate {
            blocks: sets.iter().map(VertexSet::to_vec).collect(),
        }
    }

    /// Checks that the blocks are disjoint `r`-cliques covering `g`.
    pub fn validate(&self, g: &Graph, r: usize) -> Result<(), CertificateError> {
        for (i, b) in self.blocks.iter().enumerate() {
            if b.len() != r {
                return Err(CertificateError::BlockSize { block: i, size: b.len(), expected: r });
            }
        }
        check_partition(g.n(), &self.blocks)?;
        for b in &self.blocks {
            for (i, &u) in b.iter().enumerate() {
                for &v in &b[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Err(CertificateError::NotClique(u, v));
                    }
                }
            }
        }
        Ok(())
    }
}

impl ColouringCertificate {
    pub fn from_sets(sets: &[VertexSet]) -> Self {
        ColouringCertificate {
            classes: sets.iter().map(VertexSet::to_vec).collect(),
        }
    }

    /// Checks that there are exactly `k` classes, independent, balanced and
    /// covering `g`. Empty classes count towards `k`.
    pub fn validate(&self, g: &Graph, k: usize) -> Result<(), CertificateError> {
        if self.classes.len() != k {
            return Err(CertificateError::ClassCount { expected: k, found: self.classes.len() });
        }
        check_partition(g.n(), &self.classes)?;
        for c in &self.classes {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    if g.has_edge(u, v) {
                        return Err(CertificateError::NotIndependent(u, v));
                    }
                }
            }
        }
        let min = self.classes.iter().map(Vec::len).min().unwrap_or(0);
        let max = self.classes.iter().map(Vec::len).max().unwrap_or(0);
        if max > min + 1 {
            return Err(CertificateError::Unbalanced { min, max });
        }
        Ok(())
    }
}

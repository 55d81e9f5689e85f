//! Exact decision procedures and the two constructive algorithms.
//!
//! Every search is single-threaded and deterministic: the same input and
//! options always explore the same nodes in the same order. Searches stop
//! with [`SolveError::NodeCapExceeded`] rather than reporting "no" when the
//! node budget runs out.

mod colouring;
mod conditions;
mod hamilton;
mod krfree;
mod matching;
mod packing;
mod turan_partition;

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::certificate::{ColouringCertificate, PackingCertificate};

pub use colouring::equitable_colouring;
pub use conditions::{
    alpha_beta_condition, chvatal_hampath_condition, contains_clique, find_clique,
    hajnal_szemeredi_guarantee, question1_failures, square_necessary_condition,
    vertex_in_clique, AlphaBetaViolation,
};
pub use hamilton::{hamilton_path_exact, DEFAULT_HAMILTON_CAP};
pub use krfree::krfree_greedy_packing;
pub use matching::perfect_matching;
pub use packing::perfect_kr_packing;
pub use turan_partition::turan_partition;

pub const DEFAULT_NODE_CAP: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search exceeded the node cap of {0}")]
    NodeCapExceeded(u64),
    #[error("search cancelled")]
    Cancelled,
    #[error("graph order {n} exceeds the cap of {cap} for this solver")]
    OrderCapExceeded { n: usize, cap: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Budget and cancellation for exponential searches.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub node_cap: u64,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_cap: DEFAULT_NODE_CAP,
            cancel: None,
        }
    }
}

impl SolveOptions {
    pub fn with_node_cap(node_cap: u64) -> Self {
        SolveOptions { node_cap, cancel: None }
    }
}

/// Node counter shared by the backtracking searches.
pub(crate) struct Budget<'a> {
    pub nodes: u64,
    cap: u64,
    cancel: Option<&'a AtomicBool>,
}

impl<'a> Budget<'a> {
    pub fn new(opts: &'a SolveOptions) -> Self {
        Budget {
            nodes: 0,
            cap: opts.node_cap,
            cancel: opts.cancel.as_deref(),
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(SolveError::NodeCapExceeded(self.cap));
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(c) = self.cancel {
                if c.load(Ordering::Relaxed) {
                    return Err(SolveError::Cancelled);
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Packing(PackingCertificate),
    Colouring(ColouringCertificate),
    Path(Vec<usize>),
}

/// Result of an exact decision procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub decision: bool,
    pub certificate: Option<Certificate>,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    pub(crate) fn yes(certificate: Certificate, nodes_explored: u64) -> Self {
        SolveOutcome {
            decision: true,
            certificate: Some(certificate),
            nodes_explored,
        }
    }

    pub(crate) fn no(nodes_explored: u64) -> Self {
        SolveOutcome {
            decision: false,
            certificate: None,
            nodes_explored,
        }
    }

    pub fn packing(&self) -> Option<&PackingCertificate> {
        match &self.certificate {
            Some(Certificate::Packing(p)) => Some(p),
            _ => None,
        }
    }

    pub fn colouring(&self) -> Option<&ColouringCertificate> {
        match &self.certificate {
            Some(Certificate::Colouring(c)) => Some(c),
            _ => None,
        }
    }

    pub fn path(&self) -> Option<&[usize]> {
        match &self.certificate {
            Some(Certificate::Path(p)) => Some(p),
            _ => None,
        }
    }
}

//! Exact tools for perfect `K_r`-packings and equitable colourings: edge
//! thresholds, extremal constructions, exact solvers, the greedy packing and
//! Turán-partition algorithms, and exhaustive small-graph verification.

pub mod certificate;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod solvers;
pub mod thresholds;
pub mod verify;

pub use certificate::{ColouringCertificate, PackingCertificate};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};

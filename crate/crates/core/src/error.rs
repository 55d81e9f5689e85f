use thiserror::Error;

/// Errors raised by graph construction, parsing and parameter validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {n} exceeds the configured cap of {cap} vertices")]
    TooManyVertices { n: usize, cap: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! ensure_range {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Range(format!($($fmt)+)));
        }
    };
}
pub(crate) use ensure_range;

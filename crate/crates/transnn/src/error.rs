//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by network construction, file I/O, and the analysis
/// operations. Validation findings are not errors; see
/// [`crate::model::Violation`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("no parameter frames")]
    NoFrames,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("node index {node} out of range for {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("state space too large: n = {n} exceeds cap {cap}")]
    StateSpaceTooLarge { n: usize, cap: usize },

    #[error("infeasible probability pair at node {node}: p = {p} exceeds pi = {pi}")]
    InfeasibleProbabilityPair { node: usize, p: f64, pi: f64 },

    #[error("probability lambda/a*p = {value} exceeds 1")]
    RateExceedsCount { value: f64 },

    #[error("bound requires finite initial information (entry {node} is not finite)")]
    NonFiniteInitial { node: usize },

    #[error("stability certificate requires constant parameters (frame {frame} differs from frame 0)")]
    NonConstantSpec { frame: usize },

    #[error("power iteration did not converge within {iterations} iterations; last estimate {estimate}")]
    PowerIterationStalled { iterations: usize, estimate: f64 },

    #[error("truth table has {inputs} inputs, more than the cap of {cap}")]
    TableTooLarge { inputs: usize, cap: usize },

    #[error("malformed truth table: {0}")]
    MalformedTable(String),

    #[error("malformed document: {0}")]
    MalformedDocument(String),

    #[error("population rescale needs a >= lambda on every edge; edge ({dst}, {src}) has lambda = {lambda} > a = {a}")]
    RescaleOverflow { dst: usize, src: usize, lambda: f64, a: u32 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

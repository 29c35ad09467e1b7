//! Error type shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong when building graphs or computing invariants.
#[derive(Debug, Error)]
pub enum Error {
    /// An edge endpoint is not a vertex of the graph under construction.
    #[error("edge endpoint {endpoint} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { endpoint: u32, n: usize },

    /// Simple graphs carry no self-loops.
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(u32),

    /// A vertex id was used that the graph does not contain.
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(u32),

    /// A vertex function is missing a rank for a vertex it must cover.
    #[error("no rank assigned to vertex {0}")]
    MissingRank(u32),

    /// An operation required a locally injective vertex function.
    #[error("vertex function is not locally injective: adjacent vertices {0} and {1} share rank {2}")]
    NotLocallyInjective(u32, u32, i64),

    /// A polynomial was handed to a conversion that expects an f-function.
    #[error("not an f-function: {0}")]
    NotAnFFunction(String),

    /// A generator or algorithm parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Guard against factorial blow-up in exhaustive rank-permutation sweeps.
    #[error("exhaustive rank enumeration capped at {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    /// An internal cross-check failed; indicates a bug, never bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// Reading or writing a graph file failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A graph file (edge-list or JSON) could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

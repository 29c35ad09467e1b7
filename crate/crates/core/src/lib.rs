//! Exact invariants of the clique complex of a finite simple graph.

pub mod bench;
pub mod error;
pub mod fcalc;
pub mod generators;
pub mod graph;
pub mod intersection;
pub mod io;
pub mod poly;

pub use error::Error;
pub use graph::{Graph, VertexFunction, VertexId};
pub use poly::{BiPoly, FVector, RatPoly, UniPoly};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

//! JSON schemas emitted under `--json`.
//!
//! Every numeric coefficient is carried as a decimal string (the library's
//! polynomial serialization), so arbitrarily large counts survive any JSON
//! reader.  Rationals are `"p/q"` strings.

use serde::{Deserialize, Serialize};
use whitney::poly::RatPoly;
use whitney::{BiPoly, FVector, UniPoly};

/// `fvector FILE --json`
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct FVectorReport {
    pub n: usize,
    pub algo: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub fvector: FVector,
    pub fpoly: UniPoly,
}

/// `euler FILE --json`
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct EulerReport {
    pub euler: i64,
}

/// One vertex of a `curvature --json` report.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct CurvatureEntry {
    pub vertex: u32,
    /// Exact rational as `"p/q"` (or a plain integer string).
    pub curvature: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<RatPoly>,
}

/// `curvature FILE --json`
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct CurvatureJson {
    pub entries: Vec<CurvatureEntry>,
    pub total: String,
    pub euler: i64,
}

/// One vertex of an `indices --json` report.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct IndexEntry {
    pub vertex: u32,
    pub index: i64,
    pub poly: UniPoly,
}

/// `indices FILE --seed S --json`
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct IndicesReport {
    pub seed: u64,
    pub entries: Vec<IndexEntry>,
    pub index_sum: i64,
}

/// `wu FILE [FILE2] --json`
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct WuReport {
    pub algo: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Dense intersection counts, rows indexed by the first graph's
    /// dimension.
    pub matrix: Vec<Vec<String>>,
    pub poly: BiPoly,
    pub omega: String,
}

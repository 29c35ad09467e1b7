//! Clique generating functions, curvature, and vertex indices.
//!
//! The central object is the counting polynomial
//! `f_G(t) = 1 + f_0 t + f_1 t^2 + ... + f_d t^{d+1}` of the clique complex
//! of a graph `G`, from which the Euler characteristic is
//! `chi(G) = 1 - f_G(-1)`.  Three independent routes compute it:
//!
//! * [`f_vector_bruteforce`] enumerates every clique explicitly,
//! * [`f_function_ph`] recurses over sub-level spheres of a random vertex
//!   ordering: `f_G(t) = 1 + t * sum_v f_{S_g(v)}(t)`,
//! * [`f_function_gb`] recurses over unit spheres and integrates:
//!   `f_G(t) = 1 + sum_v F_{S(v)}(t)` with `F' = f`, `F(0) = 0`.
//!
//! The brute-force count is the oracle the two recursions are tested
//! against.  Per-vertex quantities — index polynomials, integer indices,
//! curvature and the curvature polynomial — plus the exact average of the
//! index polynomial over all vertex orderings round out the module.
//!
//! Determinism: the sub-level recursion draws a fresh random ordering for
//! every subgraph it visits, with the RNG seed derived from the top-level
//! seed and the subgraph's sorted vertex ids.  Results are therefore a pure
//! function of `(graph, seed)`, independent of evaluation order and thread
//! count, and the memo table (keyed by those same vertex ids) is a pure
//! cache.

use dashmap::DashMap;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::graph::{Graph, VertexFunction, VertexId};
use crate::poly::{FVector, RatPoly, UniPoly};
use crate::{Error, Result};

/// Tuning knobs for [`f_function_ph_with`] and [`f_function_gb_with`].
#[derive(Clone, Copy, Debug)]
pub struct RecursionOptions {
    /// Maximum number of memoized subgraph results; once full, further
    /// results are recomputed instead of stored.
    pub memo_cap: usize,
    /// Fan subproblems out across the current rayon pool.  Results are
    /// bit-identical either way.
    pub parallel: bool,
}

impl Default for RecursionOptions {
    fn default() -> Self {
        RecursionOptions {
            memo_cap: 1 << 20,
            parallel: true,
        }
    }
}

/// Subgraphs at or below this vertex count are recursed sequentially; the
/// scheduling overhead dwarfs the work.
const PAR_FANOUT_MIN: usize = 24;

/// Derive a child seed from a parent seed and a sequence of identifying
/// words (SplitMix64-style fold, fixed constants — stable across platforms
/// and releases, unlike the std hasher).
pub(crate) fn derive_seed<I: IntoIterator<Item = u64>>(seed: u64, parts: I) -> u64 {
    let mut h = seed ^ 0x9E37_79B9_7F4A_7C15;
    for p in parts {
        h = (h ^ p).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        h ^= h >> 31;
    }
    h = h.wrapping_mul(0x94D0_49BB_1331_11EB);
    h ^ (h >> 29)
}

fn seed_for(seed: u64, vertices: &[VertexId]) -> u64 {
    derive_seed(seed, vertices.iter().map(|v| u64::from(v.0)))
}

/// `(1+t)^n`, the counting polynomial of a complete graph on `n` vertices.
fn complete_poly(n: usize) -> UniPoly {
    let n = BigInt::from(n);
    let mut coeffs = Vec::new();
    let mut k = BigInt::zero();
    while k <= n {
        coeffs.push(binomial(n.clone(), k.clone()));
        k += 1;
    }
    UniPoly::from_coeffs(coeffs)
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

/// Count all cliques by explicit enumeration.
///
/// Every clique is visited exactly once, as its sorted vertex sequence: the
/// recursion extends a clique only by vertices later in the ordering that
/// are adjacent to all current members.
pub fn f_vector_bruteforce(g: &Graph) -> FVector {
    fn extend(g: &Graph, candidates: &[VertexId], depth: usize, counts: &mut Vec<u64>) {
        if counts.len() == depth {
            counts.push(0);
        }
        for (i, &v) in candidates.iter().enumerate() {
            counts[depth] += 1;
            let next = crate::graph::intersect_sorted(
                &candidates[i + 1..],
                g.neighbors_of(v).expect("candidate vertex is in the graph"),
            );
            if !next.is_empty() {
                extend(g, &next, depth + 1, counts);
            }
        }
    }

    let mut counts = Vec::new();
    if !g.is_empty() {
        extend(g, g.vertices(), 0, &mut counts);
    }
    // A clique of k+1 vertices forces cliques of every smaller size, so the
    // enumeration never leaves interior zeros.
    FVector::from_counts(counts.into_iter().map(BigInt::from).collect())
}

// ---------------------------------------------------------------------------
// Sub-level-sphere recursion
// ---------------------------------------------------------------------------

struct PhCtx {
    top_seed: u64,
    memo: DashMap<Vec<VertexId>, UniPoly>,
    opts: RecursionOptions,
}

/// Counting polynomial via the sub-level-sphere recursion.
///
/// The result does not depend on `seed` (any locally injective ordering
/// yields the same polynomial); the seed only shapes the recursion tree.
pub fn f_function_ph(g: &Graph, seed: u64) -> UniPoly {
    f_function_ph_with(g, seed, RecursionOptions::default())
}

pub fn f_function_ph_with(g: &Graph, seed: u64, opts: RecursionOptions) -> UniPoly {
    if g.is_complete() {
        return complete_poly(g.n());
    }
    let ctx = PhCtx {
        top_seed: seed,
        memo: DashMap::new(),
        opts,
    };
    ph_rec(&ctx, g)
}

fn ph_rec(ctx: &PhCtx, g: &Graph) -> UniPoly {
    if g.is_complete() {
        return complete_poly(g.n());
    }
    let key: Vec<VertexId> = g.vertices().to_vec();
    if let Some(hit) = ctx.memo.get(&key) {
        return hit.clone();
    }

    let ranks = VertexFunction::random(g, seed_for(ctx.top_seed, &key));
    let child = |&v: &VertexId| -> UniPoly {
        let below = g
            .sub_level_sphere(&ranks, v)
            .expect("ranks cover the whole subgraph");
        ph_rec(ctx, &below)
    };
    let sum: UniPoly = if ctx.opts.parallel && g.n() >= PAR_FANOUT_MIN {
        g.vertices().par_iter().map(child).sum()
    } else {
        g.vertices().iter().map(child).sum()
    };
    let poly = &UniPoly::one() + &sum.times_t();

    if ctx.memo.len() < ctx.opts.memo_cap {
        ctx.memo.insert(key, poly.clone());
    }
    poly
}

// ---------------------------------------------------------------------------
// Sphere-integral recursion
// ---------------------------------------------------------------------------

struct GbCtx {
    memo: DashMap<Vec<VertexId>, UniPoly>,
    opts: RecursionOptions,
}

/// Counting polynomial via unit-sphere antiderivatives.
///
/// All intermediate arithmetic is exact rational; the final coefficients
/// must cancel back to integers, and failure to do so reports an internal
/// inconsistency rather than a rounded answer.
pub fn f_function_gb(g: &Graph) -> Result<UniPoly> {
    f_function_gb_with(g, RecursionOptions::default())
}

pub fn f_function_gb_with(g: &Graph, opts: RecursionOptions) -> Result<UniPoly> {
    if g.is_complete() {
        return Ok(complete_poly(g.n()));
    }
    let ctx = GbCtx {
        memo: DashMap::new(),
        opts,
    };
    gb_rec(&ctx, g)
}

fn gb_rec(ctx: &GbCtx, g: &Graph) -> Result<UniPoly> {
    if g.is_complete() {
        return Ok(complete_poly(g.n()));
    }
    let key: Vec<VertexId> = g.vertices().to_vec();
    if let Some(hit) = ctx.memo.get(&key) {
        return Ok(hit.clone());
    }

    let child = |&v: &VertexId| -> Result<RatPoly> {
        let sphere = g.unit_sphere(v)?;
        Ok(gb_rec(ctx, &sphere)?.antiderivative())
    };
    let sum: RatPoly = if ctx.opts.parallel && g.n() >= PAR_FANOUT_MIN {
        g.vertices()
            .par_iter()
            .map(child)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum()
    } else {
        g.vertices()
            .iter()
            .map(child)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum()
    };
    let total = &RatPoly::from(&UniPoly::one()) + &sum;
    let poly = total.to_int_poly()?;

    if ctx.memo.len() < ctx.opts.memo_cap {
        ctx.memo.insert(key, poly.clone());
    }
    Ok(poly)
}

// ---------------------------------------------------------------------------
// Per-vertex quantities
// ---------------------------------------------------------------------------

/// Index polynomial of `v` under ranks `f`: the counting polynomial of the
/// sub-level sphere `S_f(v)`.
///
/// Requires distinct ranks across the edges of the closed unit ball of `v`
/// (checked); ranks must cover the ball.
pub fn index_poly(g: &Graph, f: &VertexFunction, v: VertexId) -> Result<UniPoly> {
    let mut ball: Vec<VertexId> = g.neighbors_of(v)?.to_vec();
    ball.push(v);
    f.require_locally_injective(&g.induced(&ball)?)?;
    let below = g.sub_level_sphere(f, v)?;
    Ok(f_function_ph(&below, 0))
}

/// Integer index `1 - chi(S_f(v))`, i.e. the index polynomial at `t = -1`.
pub fn integer_index(g: &Graph, f: &VertexFunction, v: VertexId) -> Result<i64> {
    let p = index_poly(g, f, v)?;
    big_to_i64(p.eval_int(&BigInt::from(-1)))
}

/// Euler characteristic `1 - f_G(-1)`.
pub fn euler_characteristic(g: &Graph) -> i64 {
    let f = f_function_ph(g, 0);
    let chi = BigInt::one() - f.eval_int(&BigInt::from(-1));
    big_to_i64(chi).expect("graphs that fit in memory have Euler characteristics far below 2^63")
}

fn big_to_i64(x: BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| {
        Error::Inconsistency("integer invariant overflowed a 64-bit integer".to_string())
    })
}

/// Curvature of a vertex: with `(f_{-1}, f_0, f_1, ...)` the counts of the
/// unit sphere and `f_{-1} = 1`,
/// `K(v) = sum_k (-1)^k f_{k-1}(S(v)) / (k+1)`.
pub fn curvature(g: &Graph, v: VertexId) -> Result<BigRational> {
    let fv = f_vector_bruteforce(&g.unit_sphere(v)?);
    let mut acc = BigRational::one();
    for (k, c) in fv.counts().iter().enumerate() {
        // This is the k+1 term of the sum: sign (-1)^{k+1}, weight 1/(k+2).
        let term = BigRational::new(c.clone(), BigInt::from(k as u64 + 2));
        if k % 2 == 0 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// Curvature polynomial `K_v(t) = F_{S(v)}(t) / t` where `F` is the
/// antiderivative of the unit sphere's counting polynomial.  Its value at
/// `t = -1` is the curvature of `v`, and it equals the exact average of the
/// index polynomial over all vertex orderings.
pub fn curvature_poly(g: &Graph, v: VertexId) -> Result<RatPoly> {
    let f = f_vector_bruteforce(&g.unit_sphere(v)?).to_poly();
    f.antiderivative().div_by_t()
}

/// Hard cap for [`exact_index_expectation`]: 9! orderings is the most this
/// exhaustive sweep is willing to enumerate.
pub const MAX_EXPECTATION_VERTICES: usize = 9;

/// Average of `index_poly(g, ., v)` over all `n!` rank bijections, computed
/// exactly.  Errors on graphs with more than [`MAX_EXPECTATION_VERTICES`]
/// vertices.
pub fn exact_index_expectation(g: &Graph, v: VertexId) -> Result<RatPoly> {
    use itertools::Itertools;

    let n = g.n();
    if n > MAX_EXPECTATION_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_EXPECTATION_VERTICES,
        });
    }
    if !g.contains(v) {
        return Err(Error::NoSuchVertex(v.0));
    }

    let mut total = UniPoly::zero();
    let mut count: u64 = 0;
    for perm in (0..n as i64).permutations(n) {
        let f = VertexFunction::from_pairs(g.vertices().iter().copied().zip(perm));
        total = &total + &index_poly(g, &f, v)?;
        count += 1;
    }
    let inv = BigRational::new(BigInt::one(), BigInt::from(count));
    Ok(RatPoly::from(&total).scale(&inv))
}

/// Both sides of the index-sum identity, for exact comparison:
/// the recursion side `1 + t * sum_v index_poly(v)` and the enumeration
/// side `f_vector_bruteforce(g)` as a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhVerification {
    pub from_indices: UniPoly,
    pub from_cliques: UniPoly,
}

impl PhVerification {
    pub fn holds(&self) -> bool {
        self.from_indices == self.from_cliques
    }
}

/// Evaluate the identity `f_G(t) = 1 + t * sum_v f_{S_f(v)}(t)` for a given
/// locally injective rank function, against the brute-force count.
pub fn verify_ph_identity(g: &Graph, f: &VertexFunction) -> Result<PhVerification> {
    f.require_locally_injective(g)?;
    let sum: UniPoly = g
        .vertices()
        .iter()
        .map(|&v| index_poly(g, f, v))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    Ok(PhVerification {
        from_indices: &UniPoly::one() + &sum.times_t(),
        from_cliques: f_vector_bruteforce(g).to_poly(),
    })
}

// ---------------------------------------------------------------------------
// Whole-graph reports
// ---------------------------------------------------------------------------

/// Index data of one vertex.
#[derive(Clone, Debug)]
pub struct VertexIndex {
    pub vertex: VertexId,
    pub poly: UniPoly,
    pub index: i64,
}

/// Per-vertex index polynomials and integer indices for one rank function.
#[derive(Clone, Debug)]
pub struct IndexReport {
    pub entries: Vec<VertexIndex>,
}

impl IndexReport {
    pub fn poly_sum(&self) -> UniPoly {
        self.entries.iter().map(|e| e.poly.clone()).sum()
    }

    /// Sum of integer indices; equals the Euler characteristic.
    pub fn index_sum(&self) -> i64 {
        self.entries.iter().map(|e| e.index).sum()
    }
}

pub fn index_report(g: &Graph, f: &VertexFunction) -> Result<IndexReport> {
    let entries = g
        .vertices()
        .iter()
        .map(|&v| {
            let poly = index_poly(g, f, v)?;
            let index = big_to_i64(poly.eval_int(&BigInt::from(-1)))?;
            Ok(VertexIndex {
                vertex: v,
                poly,
                index,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IndexReport { entries })
}

/// Curvature data of one vertex.
#[derive(Clone, Debug)]
pub struct VertexCurvature {
    pub vertex: VertexId,
    pub curvature: BigRational,
    pub poly: RatPoly,
}

/// Per-vertex curvatures and curvature polynomials.
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    pub entries: Vec<VertexCurvature>,
}

impl CurvatureReport {
    pub fn total(&self) -> BigRational {
        self.entries
            .iter()
            .fold(BigRational::zero(), |acc, e| acc + &e.curvature)
    }

    /// The total curvature, asserted to collapse to an integer (it equals
    /// the Euler characteristic; a leftover denominator is a bug).
    pub fn euler(&self) -> Result<i64> {
        let total = self.total();
        if !total.denom().is_one() {
            return Err(Error::Inconsistency(format!(
                "total curvature {total} is not an integer"
            )));
        }
        big_to_i64(total.numer().clone())
    }
}

pub fn curvature_report(g: &Graph) -> Result<CurvatureReport> {
    let entries = g
        .vertices()
        .iter()
        .map(|&v| {
            Ok(VertexCurvature {
                vertex: v,
                curvature: curvature(g, v)?,
                poly: curvature_poly(g, v)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurvatureReport { entries })
}

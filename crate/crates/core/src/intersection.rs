//! Intersection calculus of pairs of simplices.
//!
//! For graphs `G`, `H` sharing one vertex-id universe, `f_ij(G, H)` counts
//! pairs `(x, y)` of an `i`-dimensional clique of `G` and a `j`-dimensional
//! clique of `H` with `x ∩ y ≠ ∅`.  The generating function
//! `f_{G,H}(t, s) = sum_ij f_ij t^i s^j` uses *dimension* exponents, so a
//! vertex against a vertex contributes `1`, not `t*s`.  At `t = s = -1` it
//! evaluates to the Wu characteristic
//! `omega(G, H) = sum_{x ∩ y ≠ ∅} omega(x) omega(y)` with
//! `omega(x) = (-1)^{dim x}`.
//!
//! Two routes compute the matrix: [`f_matrix_bruteforce`] enumerates the
//! pairs, and [`f_matrix_ph`] sums a per-vertex-pair index — a four-term
//! inclusion–exclusion over sub-level balls and spheres of random vertex
//! orderings ([`pair_index`]) — recursing until subproblems are small
//! enough to enumerate directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::fcalc::derive_seed;
use crate::graph::{Graph, VertexFunction, VertexId};
use crate::poly::BiPoly;
use crate::{Error, Result};

/// All cliques of a graph, each as its sorted vertex sequence, ordered by
/// dimension and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexList {
    simplices: Vec<Vec<VertexId>>,
}

impl SimplexList {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[VertexId]> {
        self.simplices.iter().map(Vec::as_slice)
    }

    /// Cliques of dimension `k` (on `k+1` vertices).
    pub fn of_dim(&self, k: usize) -> impl Iterator<Item = &[VertexId]> {
        self.iter().filter(move |s| s.len() == k + 1)
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.len() - 1)
    }

    pub fn as_slice(&self) -> &[Vec<VertexId>] {
        &self.simplices
    }
}

/// Enumerate every clique, reusing the brute-force counter's extension
/// scheme but keeping the cliques themselves.
pub fn enumerate_simplices(g: &Graph) -> SimplexList {
    fn extend(
        g: &Graph,
        current: &mut Vec<VertexId>,
        candidates: &[VertexId],
        out: &mut Vec<Vec<VertexId>>,
    ) {
        for (i, &v) in candidates.iter().enumerate() {
            current.push(v);
            out.push(current.clone());
            let next = crate::graph::intersect_sorted(
                &candidates[i + 1..],
                g.neighbors_of(v).expect("candidate vertex is in the graph"),
            );
            if !next.is_empty() {
                extend(g, current, &next, out);
            }
            current.pop();
        }
    }

    let mut out = Vec::new();
    if !g.is_empty() {
        let mut current = Vec::new();
        extend(g, &mut current, g.vertices(), &mut out);
    }
    out.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    SimplexList { simplices: out }
}

/// Do two sorted vertex sequences share an element?
fn meets(a: &[VertexId], b: &[VertexId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Intersection generating function by direct enumeration of clique pairs.
pub fn f_matrix_bruteforce(g: &Graph, h: &Graph) -> BiPoly {
    let xs = enumerate_simplices(g);
    let ys = enumerate_simplices(h);
    let mut out = BiPoly::zero();
    for x in xs.iter() {
        for y in ys.iter() {
            if meets(x, y) {
                out.add_term(x.len() as u32 - 1, y.len() as u32 - 1, BigInt::one());
            }
        }
    }
    out
}

/// Wu characteristic `sum omega(x) omega(y)` over intersecting clique pairs,
/// `omega(x) = (-1)^{dim x}`.
pub fn wu_characteristic(g: &Graph, h: &Graph) -> i64 {
    let xs = enumerate_simplices(g);
    let ys = enumerate_simplices(h);
    let mut total: i64 = 0;
    for x in xs.iter() {
        for y in ys.iter() {
            if meets(x, y) {
                // Signs depend on cardinality parity: (-1)^{dim x + dim y}.
                if (x.len() + y.len()) % 2 == 0 {
                    total += 1;
                } else {
                    total -= 1;
                }
            }
        }
    }
    total
}

/// Wu curvature of a vertex: the Wu characteristic of `g` against itself,
/// localized by charging each intersecting pair `(x, y)` with `v ∈ x` the
/// amount `omega(x) omega(y) / |x|`.  Summing over all vertices recovers
/// `wu_characteristic(g, g)` since each pair is charged `|x|` times with
/// weight `1/|x|`.
pub fn wu_curvature(g: &Graph, v: VertexId) -> Result<BigRational> {
    if !g.contains(v) {
        return Err(Error::NoSuchVertex(v.0));
    }
    let all = enumerate_simplices(g);
    let mut total = BigRational::zero();
    for x in all.iter() {
        if x.binary_search(&v).is_err() {
            continue;
        }
        let card = BigInt::from(x.len());
        for y in all.iter() {
            if meets(x, y) {
                let w = BigRational::new(BigInt::one(), card.clone());
                if (x.len() + y.len()) % 2 == 0 {
                    total += w;
                } else {
                    total -= w;
                }
            }
        }
    }
    Ok(total)
}

/// The pair index of `(v, w)`: with `B`, `S` the sub-level balls and
/// spheres of the rank functions,
/// `f_{B(v),B(w)} - f_{B(v),S(w)} - f_{S(v),B(w)} + f_{S(v),S(w)}`.
///
/// Summed over all vertex pairs this telescopes to the full intersection
/// matrix.  Rank functions must be locally injective on the respective unit
/// balls.
pub fn pair_index(
    g: &Graph,
    h: &Graph,
    fg: &VertexFunction,
    fh: &VertexFunction,
    v: VertexId,
    w: VertexId,
) -> Result<BiPoly> {
    let mut ball = g.neighbors_of(v)?.to_vec();
    ball.push(v);
    fg.require_locally_injective(&g.induced(&ball)?)?;
    let mut ball = h.neighbors_of(w)?.to_vec();
    ball.push(w);
    fh.require_locally_injective(&h.induced(&ball)?)?;

    let bv = g.sub_level_ball(fg, v)?;
    let sv = g.sub_level_sphere(fg, v)?;
    let bw = h.sub_level_ball(fh, w)?;
    let sw = h.sub_level_sphere(fh, w)?;
    Ok(pair_index_from_parts(
        &bv,
        &sv,
        &bw,
        &sw,
        &mut |a, b| f_matrix_bruteforce(a, b),
    ))
}

fn pair_index_from_parts(
    bv: &Graph,
    sv: &Graph,
    bw: &Graph,
    sw: &Graph,
    fm: &mut dyn FnMut(&Graph, &Graph) -> BiPoly,
) -> BiPoly {
    let bb = fm(bv, bw);
    let bs = fm(bv, sw);
    let sb = fm(sv, bw);
    let ss = fm(sv, sw);
    &(&bb - &bs) - &(&sb - &ss)
}

/// Graphs at or below this vertex count are enumerated directly inside
/// [`f_matrix_ph`]; the pair-index split only pays off above it.
pub const DIRECT_ENUMERATION_CUTOFF: usize = 15;

/// Intersection generating function via the pair-index decomposition with
/// seeded random vertex orderings.  Exact: equals [`f_matrix_bruteforce`]
/// for every seed and cutoff.
pub fn f_matrix_ph(g: &Graph, h: &Graph, seed: u64) -> BiPoly {
    f_matrix_ph_with_cutoff(g, h, seed, DIRECT_ENUMERATION_CUTOFF)
}

/// [`f_matrix_ph`] with an explicit direct-enumeration cutoff (mainly for
/// tests, which force deep recursion with small cutoffs).
pub fn f_matrix_ph_with_cutoff(g: &Graph, h: &Graph, seed: u64, cutoff: usize) -> BiPoly {
    if g.is_empty() || h.is_empty() {
        return BiPoly::zero();
    }
    if g.n() <= cutoff && h.n() <= cutoff {
        return f_matrix_bruteforce(g, h);
    }

    if g == h {
        // One ordering, and the matrix of a graph against itself is
        // symmetric: compute unordered pairs and mirror.
        let fg = VertexFunction::random(g, derive_seed(seed, [0]));
        let task = PairTask {
            g,
            h: g,
            fg: &fg,
            fh: &fg,
            seed,
            cutoff,
        };
        let verts = g.vertices();
        let mut pairs = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for &w in &verts[i..] {
                pairs.push((v, w));
            }
        }
        let total: BiPoly = pairs
            .par_iter()
            .map(|&(v, w)| {
                let p = task.contribution(v, w);
                if v == w {
                    p
                } else {
                    &p + &p.transpose()
                }
            })
            .sum();
        // The shortcut must agree with the plain double sum.
        debug_assert_eq!(total, {
            let mut full = BiPoly::zero();
            for &v in verts {
                for &w in verts {
                    full = &full + &task.contribution(v, w);
                }
            }
            full
        });
        return total;
    }

    let fg = VertexFunction::random(g, derive_seed(seed, [0]));
    let fh = VertexFunction::random(h, derive_seed(seed, [1]));
    let task = PairTask {
        g,
        h,
        fg: &fg,
        fh: &fh,
        seed,
        cutoff,
    };
    let mut pairs = Vec::new();
    for &v in g.vertices() {
        for &w in h.vertices() {
            pairs.push((v, w));
        }
    }
    pairs
        .par_iter()
        .map(|&(v, w)| task.contribution(v, w))
        .sum()
}

/// One level of the decomposition: the graph pair, its rank functions, and
/// the recursion parameters.
struct PairTask<'a> {
    g: &'a Graph,
    h: &'a Graph,
    fg: &'a VertexFunction,
    fh: &'a VertexFunction,
    seed: u64,
    cutoff: usize,
}

impl PairTask<'_> {
    /// The `(v, w)` term.  Sub-matrices recurse when the subproblem
    /// shrinks, otherwise fall back to direct enumeration — sub-level
    /// balls can be as large as the whole graph (the top-ranked vertex of
    /// a complete graph keeps everything), so recursing on the total
    /// vertex count is what guarantees termination.
    fn contribution(&self, v: VertexId, w: VertexId) -> BiPoly {
        let bv = self.g.sub_level_ball(self.fg, v).expect("ranks cover g");
        let sv = self.g.sub_level_sphere(self.fg, v).expect("ranks cover g");
        let bw = self.h.sub_level_ball(self.fh, w).expect("ranks cover h");
        let sw = self.h.sub_level_sphere(self.fh, w).expect("ranks cover h");

        let pair_seed = derive_seed(self.seed, [u64::from(v.0), u64::from(w.0)]);
        let budget = self.g.n() + self.h.n();
        let mut part = 0u64;
        pair_index_from_parts(&bv, &sv, &bw, &sw, &mut |a, b| {
            part += 1;
            if a.n() + b.n() < budget {
                f_matrix_ph_with_cutoff(a, b, derive_seed(pair_seed, [part]), self.cutoff)
            } else {
                f_matrix_bruteforce(a, b)
            }
        })
    }
}

/// Dense matrix view of an intersection generating function:
/// `entry(i, j) = f_ij`, rows indexed by the `t`-exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl FMatrix {
    pub fn from_bipoly(p: &BiPoly) -> FMatrix {
        let Some((di, dj)) = p.max_degrees() else {
            return FMatrix {
                entries: Vec::new(),
            };
        };
        let entries = (0..=di)
            .map(|i| (0..=dj).map(|j| p.coeff(i, j)).collect())
            .collect();
        FMatrix { entries }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        self.entries
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows() != self.cols() {
            return false;
        }
        for i in 0..self.rows() {
            for j in 0..i {
                if self.entries[i][j] != self.entries[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Tab-separated rows, one line per `t`-degree.
    pub fn to_tsv(&self) -> String {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join("\t")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

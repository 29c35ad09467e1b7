//! Finite simple graphs and integer-valued vertex functions.
//!
//! A [`Graph`] is immutable once built: sorted vertex ids and sorted
//! adjacency lists.  Subgraph operations (`induced`, `unit_sphere`,
//! `sub_level_sphere`, `sub_level_ball`) keep the parent's vertex ids, so a
//! vertex means the same thing at every level of a recursion and sorted id
//! sequences can serve as cache keys.
//!
//! A [`VertexFunction`] assigns integer ranks to vertices.  The recursions in
//! this crate only ever compare ranks across edges, so *local* injectivity
//! (distinct ranks on adjacent vertices) is the property that matters;
//! [`VertexFunction::random`] produces globally injective functions, which is
//! stronger and always sufficient.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Identifier of a vertex.  Opaque: ids survive into subgraphs unchanged.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An immutable finite simple graph.
///
/// Vertices are held sorted; `neighbors[i]` is the sorted adjacency list of
/// `vertices[i]`.  Two graphs compare equal exactly when they have the same
/// vertex ids and the same edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertices: Vec<VertexId>,
    neighbors: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Build a graph on vertex ids `0..n` from an edge list.
    ///
    /// Duplicate edges (in either orientation) collapse to one.  Endpoints
    /// must lie in `0..n` and self-loops are rejected.
    pub fn build(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut neighbors: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(Error::EndpointOutOfRange { endpoint: u, n });
            }
            if v as usize >= n {
                return Err(Error::EndpointOutOfRange { endpoint: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            neighbors[u as usize].push(VertexId(v));
            neighbors[v as usize].push(VertexId(u));
        }
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            vertices: (0..n as u32).map(VertexId).collect(),
            neighbors,
        })
    }

    /// Graph with no vertices at all.
    pub fn empty() -> Graph {
        Graph {
            vertices: Vec::new(),
            neighbors: Vec::new(),
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Sorted vertex ids.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    fn index_of(&self, v: VertexId) -> Result<usize> {
        self.vertices
            .binary_search(&v)
            .map_err(|_| Error::NoSuchVertex(v.0))
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors_of(&self, v: VertexId) -> Result<&[VertexId]> {
        Ok(&self.neighbors[self.index_of(v)?])
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors_of(v)?.len())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match self.index_of(u) {
            Ok(i) => self.neighbors[i].binary_search(&v).is_ok(),
            Err(_) => false,
        }
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, &u) in self.vertices.iter().enumerate() {
            for &v in &self.neighbors[i] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Does every pair of vertices share an edge?  (Vacuously true for the
    /// empty graph and single vertices.)
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced on `keep` (order and duplicates do not matter).
    /// Vertex ids are preserved.  Errors if some id is not in the graph.
    pub fn induced(&self, keep: &[VertexId]) -> Result<Graph> {
        let mut kept: Vec<VertexId> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut neighbors = Vec::with_capacity(kept.len());
        for &v in &kept {
            let all = self.neighbors_of(v)?;
            neighbors.push(intersect_sorted(all, &kept));
        }
        Ok(Graph {
            vertices: kept,
            neighbors,
        })
    }

    /// The unit sphere `S(v)`: subgraph induced on the neighbors of `v`.
    pub fn unit_sphere(&self, v: VertexId) -> Result<Graph> {
        let nbrs = self.neighbors_of(v)?.to_vec();
        self.induced(&nbrs)
    }

    /// The part of the unit sphere where `f` drops below its value at `v`:
    /// subgraph induced on `{ y ~ v : f(y) < f(v) }`.
    ///
    /// Every vertex of the closed ball around `v` needs a rank.
    pub fn sub_level_sphere(&self, f: &VertexFunction, v: VertexId) -> Result<Graph> {
        let fv = f.try_rank(v)?;
        let mut below = Vec::new();
        for &y in self.neighbors_of(v)? {
            if f.try_rank(y)? < fv {
                below.push(y);
            }
        }
        self.induced(&below)
    }

    /// Like [`Graph::sub_level_sphere`] but with the center vertex included.
    pub fn sub_level_ball(&self, f: &VertexFunction, v: VertexId) -> Result<Graph> {
        let fv = f.try_rank(v)?;
        let mut below = vec![v];
        for &y in self.neighbors_of(v)? {
            if f.try_rank(y)? < fv {
                below.push(y);
            }
        }
        self.induced(&below)
    }
}

/// Intersection of two sorted id slices, by linear merge.
pub(crate) fn intersect_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Integer ranks on vertices.
///
/// May cover more vertices than a given graph has (useful when restricting
/// attention to subgraphs) but never fewer, as far as the consuming
/// operations are concerned: they error on a missing rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexFunction {
    ranks: BTreeMap<VertexId, i64>,
}

impl VertexFunction {
    pub fn from_pairs<I: IntoIterator<Item = (VertexId, i64)>>(pairs: I) -> VertexFunction {
        VertexFunction {
            ranks: pairs.into_iter().collect(),
        }
    }

    /// A uniformly random bijection `V(g) -> {0, .., n-1}`, fully determined
    /// by `seed`.
    pub fn random(g: &Graph, seed: u64) -> VertexFunction {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ranks: Vec<i64> = (0..g.n() as i64).collect();
        ranks.shuffle(&mut rng);
        VertexFunction {
            ranks: g
                .vertices()
                .iter()
                .copied()
                .zip(ranks)
                .collect(),
        }
    }

    pub fn rank(&self, v: VertexId) -> Option<i64> {
        self.ranks.get(&v).copied()
    }

    pub fn try_rank(&self, v: VertexId) -> Result<i64> {
        self.rank(v).ok_or(Error::MissingRank(v.0))
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Iterate `(vertex, rank)` pairs in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, i64)> + '_ {
        self.ranks.iter().map(|(&v, &r)| (v, r))
    }

    /// Injective on everything it covers?
    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<i64> = self.ranks.values().copied().collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Distinct ranks on every edge of `g`?  Errors if a vertex of `g` has
    /// no rank.
    pub fn is_locally_injective(&self, g: &Graph) -> Result<bool> {
        for &u in g.vertices() {
            let ru = self.try_rank(u)?;
            for &v in g.neighbors_of(u)? {
                if u < v && ru == self.try_rank(v)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Like [`VertexFunction::is_locally_injective`] but pinpoints a clash,
    /// for error reporting.
    pub(crate) fn require_locally_injective(&self, g: &Graph) -> Result<()> {
        for &u in g.vertices() {
            let ru = self.try_rank(u)?;
            for &v in g.neighbors_of(u)? {
                if u < v && ru == self.try_rank(v)? {
                    return Err(Error::NotLocallyInjective(u.0, v.0, ru));
                }
            }
        }
        Ok(())
    }
}

//! Graph generators and transforms: standard families, Erdős–Rényi graphs,
//! a triangulated torus, barycentric refinement, and the join.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexFunction, VertexId};
use crate::intersection::enumerate_simplices;
use crate::{Error, Result};

/// A standard graph family and its size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Complete graph on `m` vertices (`m >= 1`).
    Complete(usize),
    /// Cycle on `n` vertices (`n >= 3`).
    Cycle(usize),
    /// Path on `n` vertices (`n >= 1`).
    Path(usize),
    /// Star with `n` leaves around a hub (`n >= 1`).
    Star(usize),
    /// Wheel: a cycle rim on `n` vertices plus a hub (`n >= 3`).
    Wheel(usize),
}

/// Build the standard family member with canonical small vertex ids.
pub fn generate(kind: GeneratorKind) -> Result<Graph> {
    match kind {
        GeneratorKind::Complete(m) => complete(m),
        GeneratorKind::Cycle(n) => cycle(n),
        GeneratorKind::Path(n) => path(n),
        GeneratorKind::Star(n) => star(n),
        GeneratorKind::Wheel(n) => wheel(n),
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

/// Complete graph on `m >= 1` vertices.
pub fn complete(m: usize) -> Result<Graph> {
    require(m >= 1, "complete graph needs at least 1 vertex")?;
    let edges: Vec<(u32, u32)> = (0..m as u32)
        .flat_map(|u| ((u + 1)..m as u32).map(move |v| (u, v)))
        .collect();
    Graph::build(m, &edges)
}

/// Cycle on `n >= 3` vertices, edges `i -> i+1 mod n`.
pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs at least 3 vertices")?;
    let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    Graph::build(n, &edges)
}

/// Path on `n >= 1` vertices, edges `i -> i+1`.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs at least 1 vertex")?;
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges)
}

/// Star with leaves `0..n` and hub `n` (`n >= 1` leaves).
pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, "star needs at least 1 leaf")?;
    let hub = n as u32;
    let edges: Vec<(u32, u32)> = (0..hub).map(|i| (i, hub)).collect();
    Graph::build(n + 1, &edges)
}

/// Wheel: rim cycle `0..n` plus hub `n` joined to every rim vertex
/// (`n >= 3`).  The hub's unit sphere is exactly [`cycle`]`(n)`, ids
/// included.
pub fn wheel(n: usize) -> Result<Graph> {
    require(n >= 3, "wheel needs a rim of at least 3 vertices")?;
    let hub = n as u32;
    let mut edges: Vec<(u32, u32)> = (0..hub).map(|i| (i, (i + 1) % hub)).collect();
    edges.extend((0..hub).map(|i| (i, hub)));
    Graph::build(n + 1, &edges)
}

/// Erdős–Rényi graph `G(n, p)`: each of the `C(n, 2)` possible edges is
/// present independently with probability `p`, drawn deterministically from
/// `seed` in a fixed edge order.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// Triangulated torus on 16 vertices: a 4×4 grid with wraparound, vertex
/// `(i, j)` having id `4 i + j` and edges to its right and lower neighbors
/// plus the lower-right diagonal of its cell (the same diagonal in every
/// cell).  Every unit sphere is a 6-cycle; the counting vector is
/// (16, 48, 32) and the Euler characteristic 0.
pub fn torus_16() -> Graph {
    let id = |i: u32, j: u32| 4 * (i % 4) + (j % 4);
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            edges.push((id(i, j), id(i, j + 1)));
            edges.push((id(i, j), id(i + 1, j)));
            edges.push((id(i, j), id(i + 1, j + 1)));
        }
    }
    Graph::build(16, &edges).expect("the fixed torus edge list is valid")
}

/// The barycentric refinement of a graph together with bookkeeping that
/// locates each new vertex's originating clique.
#[derive(Clone, Debug)]
pub struct Refinement {
    /// The refinement: one vertex per clique of the original graph, edges
    /// between cliques where one properly contains the other.
    pub graph: Graph,
    /// `simplices[k]` is the original clique behind refinement vertex `k`,
    /// as its sorted vertex list.  Order is by dimension, then
    /// lexicographic, so ids are canonical for the original graph.
    pub simplices: Vec<Vec<VertexId>>,
    /// Clique dimension as a rank function.  Not injective, but locally
    /// injective: adjacent refinement vertices are strictly nested cliques,
    /// which forces distinct dimensions.
    pub dimensions: VertexFunction,
    /// An injective refinement of `dimensions`: ranks follow the
    /// (dimension, lexicographic) vertex order.  Ties in `dimensions` never
    /// occur across an edge, so every sub-level sphere agrees.
    pub ranks: VertexFunction,
}

/// Is sorted `a` a subset of sorted `b`?
fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut j = 0;
    'outer: for &x in a {
        while j < b.len() {
            match b[j].cmp(&x) {
                std::cmp::Ordering::Less => j += 1,
                std::cmp::Ordering::Equal => {
                    j += 1;
                    continue 'outer;
                }
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// Barycentric refinement: vertices are the cliques of `g`, joined when one
/// properly contains the other.
pub fn barycentric(g: &Graph) -> Refinement {
    let simplices: Vec<Vec<VertexId>> = enumerate_simplices(g)
        .iter()
        .map(<[VertexId]>::to_vec)
        .collect();
    let mut edges = Vec::new();
    for (a, x) in simplices.iter().enumerate() {
        for (b, y) in simplices.iter().enumerate().skip(a + 1) {
            // The list is sorted by size, so only x ⊂ y is possible here.
            if x.len() < y.len() && is_subset(x, y) {
                edges.push((a as u32, b as u32));
            }
        }
    }
    let graph =
        Graph::build(simplices.len(), &edges).expect("refinement edges index the clique list");
    let dimensions = VertexFunction::from_pairs(
        simplices
            .iter()
            .enumerate()
            .map(|(k, s)| (VertexId(k as u32), s.len() as i64 - 1)),
    );
    let ranks = VertexFunction::from_pairs(
        (0..simplices.len()).map(|k| (VertexId(k as u32), k as i64)),
    );
    Refinement {
        graph,
        simplices,
        dimensions,
        ranks,
    }
}

/// Join of two graphs: their disjoint union plus every edge between the two
/// sides.  Vertices are relabeled onto `0..`: the `i`-th smallest vertex of
/// `g` becomes `i` and the `j`-th smallest vertex of `h` becomes
/// `g.n() + j`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let ng = g.n() as u32;
    let pos = |side: &Graph, v: VertexId| -> u32 {
        side.vertices()
            .binary_search(&v)
            .expect("edge endpoints are vertices") as u32
    };
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((pos(g, u), pos(g, v)));
    }
    for (u, v) in h.edges() {
        edges.push((ng + pos(h, u), ng + pos(h, v)));
    }
    for i in 0..ng {
        for j in 0..h.n() as u32 {
            edges.push((i, ng + j));
        }
    }
    Graph::build(g.n() + h.n(), &edges).expect("relabeled join edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fcalc::{
        euler_characteristic, f_function_ph, f_vector_bruteforce, index_poly, integer_index,
    };
    use crate::poly::UniPoly;
    use num_bigint::BigInt;

    #[test]
    fn standard_families() {
        let k4 = complete(4).unwrap();
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));

        let c4 = cycle(4).unwrap();
        assert_eq!((c4.n(), c4.edge_count()), (4, 4));

        let p4 = path(4).unwrap();
        assert_eq!((p4.n(), p4.edge_count()), (4, 3));
        assert_eq!(path(1).unwrap().n(), 1);

        let s3 = star(3).unwrap();
        assert_eq!((s3.n(), s3.edge_count()), (4, 3));
        assert_eq!(s3.degree(VertexId(3)).unwrap(), 3);

        let w4 = wheel(4).unwrap();
        assert_eq!((w4.n(), w4.edge_count()), (5, 8));
        // The hub sees exactly the rim cycle, ids and all.
        assert_eq!(w4.unit_sphere(VertexId(4)).unwrap(), cycle(4).unwrap());

        assert_eq!(generate(GeneratorKind::Cycle(5)).unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn parameters_below_family_minimums_are_rejected() {
        for bad in [
            complete(0),
            cycle(2),
            path(0),
            star(0),
            wheel(2),
            generate(GeneratorKind::Cycle(0)),
        ] {
            assert!(matches!(bad, Err(Error::InvalidParameter(_))));
        }
    }

    #[test]
    fn random_graphs_honor_probability_extremes_and_seeds() {
        assert_eq!(erdos_renyi(7, 0.0, 5).unwrap().edge_count(), 0);
        assert_eq!(erdos_renyi(7, 1.0, 5).unwrap(), complete(7).unwrap());

        let a = erdos_renyi(12, 0.5, 42).unwrap();
        let b = erdos_renyi(12, 0.5, 42).unwrap();
        assert_eq!(a, b);
        let c = erdos_renyi(12, 0.5, 43).unwrap();
        assert_ne!(a, c);

        for bad_p in [-0.1, 1.1, f64::NAN] {
            assert!(matches!(
                erdos_renyi(5, bad_p, 0),
                Err(Error::InvalidParameter(_))
            ));
        }
    }

    #[test]
    fn torus_counts_and_spheres() {
        let g = torus_16();
        assert_eq!(
            f_vector_bruteforce(&g).counts(),
            &[BigInt::from(16), BigInt::from(48), BigInt::from(32)]
        );
        assert_eq!(euler_characteristic(&g), 0);

        // Each unit sphere is a 6-cycle: 6 vertices of degree 2, 6 edges,
        // and no triangles — which rules out every other disjoint union of
        // cycles on 6 vertices.
        for &v in g.vertices() {
            let s = g.unit_sphere(v).unwrap();
            assert_eq!((s.n(), s.edge_count()), (6, 6));
            assert!(s.vertices().iter().all(|&w| s.degree(w).unwrap() == 2));
            assert_eq!(f_vector_bruteforce(&s).counts().len(), 2);
        }
    }

    #[test]
    fn refinement_of_an_edge_is_a_path() {
        let r = barycentric(&complete(2).unwrap());
        // Vertices 0, 1 are the endpoints, 2 is the edge; the new graph is
        // the path 0 - 2 - 1.
        assert_eq!(
            r.simplices,
            vec![
                vec![VertexId(0)],
                vec![VertexId(1)],
                vec![VertexId(0), VertexId(1)],
            ]
        );
        assert_eq!(
            r.graph.edges(),
            vec![(VertexId(0), VertexId(2)), (VertexId(1), VertexId(2))]
        );
        assert_eq!(r.dimensions.rank(VertexId(2)), Some(1));
        assert_eq!(r.ranks.rank(VertexId(2)), Some(2));
    }

    #[test]
    fn refinement_of_a_triangle() {
        let r = barycentric(&complete(3).unwrap());
        assert_eq!(
            f_vector_bruteforce(&r.graph).counts(),
            &[BigInt::from(7), BigInt::from(12), BigInt::from(6)]
        );
        assert_eq!(euler_characteristic(&r.graph), 1);
    }

    #[test]
    fn refinement_preserves_euler_characteristic() {
        for g in [
            complete(2).unwrap(),
            complete(4).unwrap(),
            cycle(5).unwrap(),
            wheel(4).unwrap(),
            star(3).unwrap(),
            torus_16(),
        ] {
            let chi = euler_characteristic(&g);
            let r = barycentric(&g);
            assert_eq!(euler_characteristic(&r.graph), chi);
            assert!(r.dimensions.is_locally_injective(&r.graph).unwrap());
            assert!(r.ranks.is_injective());
        }
    }

    /// Stirling numbers of the second kind, small table.
    fn stirling2(n: usize, k: usize) -> u64 {
        if n == 0 || k == 0 {
            return u64::from(n == 0 && k == 0);
        }
        k as u64 * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
    }

    #[test]
    fn refinement_vertex_indices_under_the_dimension_ranks() {
        // Under the dimension function, the sub-level sphere of the vertex
        // for a clique x is the refined boundary of x: its k-cliques are
        // the chains of k+1 proper nonempty subsets of x, counted by
        // ordered set partitions into k+2 blocks.  The index polynomial is
        // therefore 1 + sum_k (k+2)! S(m, k+2) t^{k+1} for m = |x|, and the
        // integer index alternates with dimension.
        for g in [complete(3).unwrap(), complete(4).unwrap(), wheel(4).unwrap()] {
            let r = barycentric(&g);
            for (k, simplex) in r.simplices.iter().enumerate() {
                let v = VertexId(k as u32);
                let m = simplex.len();
                let mut expect = vec![1i64];
                for j in 0.. {
                    let chains = factorial(j + 2) * stirling2(m, j + 2);
                    if chains == 0 {
                        break;
                    }
                    expect.push(chains as i64);
                }
                let idx = index_poly(&r.graph, &r.dimensions, v).unwrap();
                assert_eq!(idx, UniPoly::from_i64(&expect));
                assert_eq!(
                    integer_index(&r.graph, &r.dimensions, v).unwrap(),
                    if m % 2 == 1 { 1 } else { -1 },
                );
            }
        }
    }

    fn factorial(n: usize) -> u64 {
        (1..=n as u64).product()
    }

    #[test]
    fn join_builds_wheels_and_edges() {
        let k1 = complete(1).unwrap();
        assert_eq!(join(&k1, &k1), complete(2).unwrap());

        // Hub-first labeling: the K_1 vertex becomes 0, the rim 1..4.
        let w = join(&k1, &cycle(4).unwrap());
        let expected: Vec<(VertexId, VertexId)> = [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 4),
            (2, 3),
            (3, 4),
        ]
        .into_iter()
        .map(|(a, b)| (VertexId(a), VertexId(b)))
        .collect();
        assert_eq!(w.edges(), expected);
        assert_eq!(
            f_function_ph(&w, 0),
            f_function_ph(&wheel(4).unwrap(), 0)
        );
    }

    #[test]
    fn join_multiplies_counting_polynomials() {
        let pairs = [
            (complete(1).unwrap(), cycle(4).unwrap()),
            (complete(2).unwrap(), path(3).unwrap()),
            (cycle(4).unwrap(), cycle(5).unwrap()),
            (star(3).unwrap(), complete(3).unwrap()),
        ];
        for (g, h) in &pairs {
            let product = &f_function_ph(g, 7) * &f_function_ph(h, 7);
            assert_eq!(f_function_ph(&join(g, h), 7), product);
        }
    }

    /// Ranks on the join that keep every h-value above every g-value.
    fn stacked_ranks(g: &Graph, h: &Graph, gf: &VertexFunction, hf: &VertexFunction) -> VertexFunction {
        let ng = g.n() as u32;
        let max_g = g
            .vertices()
            .iter()
            .map(|&v| gf.rank(v).unwrap())
            .max()
            .unwrap();
        let min_h = h
            .vertices()
            .iter()
            .map(|&w| hf.rank(w).unwrap())
            .min()
            .unwrap();
        let lift = max_g - min_h + 1;
        VertexFunction::from_pairs(
            g.vertices()
                .iter()
                .enumerate()
                .map(|(i, &v)| (VertexId(i as u32), gf.rank(v).unwrap()))
                .chain(
                    h.vertices()
                        .iter()
                        .enumerate()
                        .map(|(j, &w)| (VertexId(ng + j as u32), hf.rank(w).unwrap() + lift)),
                ),
        )
    }

    #[test]
    fn stacked_ranks_split_the_join_spheres() {
        let cases = [
            (complete(2).unwrap(), cycle(4).unwrap()),
            (path(3).unwrap(), complete(3).unwrap()),
        ];
        for (g, h) in &cases {
            let j = join(g, h);
            for seed in [1, 2, 3] {
                let gf = VertexFunction::random(g, seed);
                let hf = VertexFunction::random(h, seed + 100);
                let stacked = stacked_ranks(g, h, &gf, &hf);
                let ng = g.n() as u32;

                for (jj, &w) in h.vertices().iter().enumerate() {
                    let w_join = VertexId(ng + jj as u32);
                    // Sphere below w in the join = all of g plus the sphere
                    // below w in h, as vertex sets.
                    let sphere = j.sub_level_sphere(&stacked, w_join).unwrap();
                    let mut expect: Vec<VertexId> =
                        (0..ng).map(VertexId).collect();
                    for (kk, &y) in h.vertices().iter().enumerate() {
                        if h.has_edge(w, y) && hf.rank(y) < hf.rank(w) {
                            expect.push(VertexId(ng + kk as u32));
                        }
                    }
                    assert_eq!(sphere.vertices(), expect.as_slice());

                    // Hence the index polynomial picks up a factor f_g.
                    let lifted = index_poly(&j, &stacked, w_join).unwrap();
                    let inner = index_poly(h, &hf, w).unwrap();
                    assert_eq!(lifted, &f_function_ph(g, 0) * &inner);
                }

                for (i, &v) in g.vertices().iter().enumerate() {
                    let v_join = VertexId(i as u32);
                    assert_eq!(
                        index_poly(&j, &stacked, v_join).unwrap(),
                        index_poly(g, &gf, v).unwrap()
                    );
                }
            }
        }
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use crate::fcalc::{euler_characteristic, f_function_ph};
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(proptest::bool::ANY, len).prop_map(move |mask| {
                let edges: Vec<(u32, u32)> = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &m)| m)
                    .map(|(&e, _)| e)
                    .collect();
                Graph::build(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Joining multiplies counting polynomials.
        #[test]
        fn join_is_multiplicative(g in arb_graph(5), h in arb_graph(5)) {
            let product = &f_function_ph(&g, 3) * &f_function_ph(&h, 3);
            prop_assert_eq!(f_function_ph(&join(&g, &h), 3), product);
        }

        /// Refinement preserves the Euler characteristic, and the dimension
        /// ranks stay locally injective.
        #[test]
        fn refinement_preserves_chi(g in arb_graph(5)) {
            let chi = euler_characteristic(&g);
            let r = barycentric(&g);
            prop_assert_eq!(euler_characteristic(&r.graph), chi);
            prop_assert!(r.dimensions.is_locally_injective(&r.graph).unwrap());
        }

        /// Same seed, same graph — different seeds almost surely differ.
        #[test]
        fn random_graphs_are_reproducible(n in 2usize..12, seed in 0u64..500) {
            let a = erdos_renyi(n, 0.5, seed).unwrap();
            let b = erdos_renyi(n, 0.5, seed).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

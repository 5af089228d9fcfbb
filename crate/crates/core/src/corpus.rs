//! Test instances and independent ground truth.
//!
//! Nothing here touches the walk/canon pipeline: the isomorphism oracle is a
//! plain backtracking search and enumeration deduplicates with that oracle.

use std::collections::HashMap;

use crate::connectivity::{is_3_connected, is_connected};
use crate::embed::is_planar;
use crate::error::{Error, Result};
use crate::graph::{degree_sequence, Graph};
use crate::regularize::{ColoredGraph, EdgeColor};
use crate::stream::{SeededStream, DOMAIN_PERMUTATION, DOMAIN_TRIANGULATION};

/// Largest `n` accepted by [`oracle_iso`].
pub const ORACLE_LIMIT: usize = 9;
/// Largest `n` accepted by the enumerators.
pub const ENUMERATION_LIMIT: usize = 8;

/// Stacked triangulation on `n >= 4` vertices: K4 followed by `n - 4`
/// insertions of a vertex into a uniformly chosen face.
///
/// # Panics
/// If `n < 4`.
pub fn gen_triangulation(n: usize, seed: u64) -> Graph {
    assert!(n >= 4, "a stacked triangulation needs at least 4 vertices");
    let mut stream = SeededStream::new(DOMAIN_TRIANGULATION, n as u64, seed);
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    // consistently oriented: each directed edge lies on exactly one face
    let mut faces = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]];
    for x in 4..n {
        let i = stream.index(faces.len());
        let [a, b, c] = faces[i];
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
        edges.extend([(a, x), (b, x), (c, x)]);
    }
    Graph::new(n, edges).expect("stacked triangulation is simple")
}

/// Uniform random permutation of `0..n`, deterministic in `(n, seed)`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    SeededStream::new(DOMAIN_PERMUTATION, n as u64, seed).shuffle(&mut perm);
    perm
}

/// Exhaustive isomorphism search for graphs with at most
/// [`ORACLE_LIMIT`] vertices. Returns `phi` with `phi[v]` in `g2`.
pub fn oracle_iso(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    let size = g1.n().max(g2.n());
    if size > ORACLE_LIMIT {
        return Err(Error::InfeasibleSize {
            size,
            limit: ORACLE_LIMIT,
        });
    }
    if g1.n() != g2.n() || g1.m() != g2.m() || degree_sequence(g1) != degree_sequence(g2) {
        return Ok(None);
    }
    let phi = backtrack(g1, g2, &|_, _| true);
    if let Some(phi) = &phi {
        assert!(
            crate::iso::verify_mapping(g1, g2, phi),
            "oracle produced a non-isomorphism"
        );
    }
    Ok(phi)
}

/// Brute-force colour-preserving isomorphism between two colored graphs,
/// ignoring embeddings. No size cap; intended for expanded graphs of small
/// inputs, where BFS-ordered backtracking prunes hard.
pub fn oracle_colored_iso(c1: &ColoredGraph, c2: &ColoredGraph) -> Option<Vec<usize>> {
    let (g1, g2) = (c1.graph(), c2.graph());
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return None;
    }
    let count = |c: &ColoredGraph| c.colors().iter().filter(|&&k| k == EdgeColor::Cycle).count();
    if count(c1) != count(c2) {
        return None;
    }
    backtrack(g1, g2, &|(a, b), (x, y)| c1.color(a, b) == c2.color(x, y))
}

/// Backtracking over g1's vertices in BFS order. `edge_ok` checks a pair of
/// corresponding edges for extra labels (colours).
fn backtrack(
    g1: &Graph,
    g2: &Graph,
    edge_ok: &dyn Fn((usize, usize), (usize, usize)) -> bool,
) -> Option<Vec<usize>> {
    let n = g1.n();
    let profile = |g: &Graph, v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let prof1: Vec<_> = (0..n).map(|v| profile(g1, v)).collect();
    let prof2: Vec<_> = (0..n).map(|v| profile(g2, v)).collect();

    // BFS order, components started at their highest-degree vertex
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![None; n];
    let mut placed = vec![false; n];
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (g1.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g1.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    anchor[w] = Some(v);
                    order.push(w);
                }
            }
        }
    }

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn consistent(
        g1: &Graph,
        g2: &Graph,
        order: &[usize],
        depth: usize,
        phi: &[usize],
        x: usize,
        y: usize,
        edge_ok: &dyn Fn((usize, usize), (usize, usize)) -> bool,
    ) -> bool {
        order[..depth].iter().all(|&z| {
            let (a, b) = (g1.has_edge(x, z), g2.has_edge(y, phi[z]));
            a == b && (!a || edge_ok((x, z), (y, phi[z])))
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        g1: &Graph,
        g2: &Graph,
        order: &[usize],
        anchor: &[Option<usize>],
        prof1: &[(usize, Vec<usize>)],
        prof2: &[(usize, Vec<usize>)],
        depth: usize,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        edge_ok: &dyn Fn((usize, usize), (usize, usize)) -> bool,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        let candidates: Vec<usize> = match anchor[x] {
            Some(a) => g2.neighbors(phi[a]).to_vec(),
            None => (0..g2.n()).collect(),
        };
        for y in candidates {
            if used[y] || prof1[x] != prof2[y] {
                continue;
            }
            if !consistent(g1, g2, order, depth, phi, x, y, edge_ok) {
                continue;
            }
            phi[x] = y;
            used[y] = true;
            if go(g1, g2, order, anchor, prof1, prof2, depth + 1, phi, used, edge_ok) {
                return true;
            }
            used[y] = false;
            phi[x] = usize::MAX;
        }
        false
    }

    go(
        g1, g2, &order, &anchor, &prof1, &prof2, 0, &mut phi, &mut used, edge_ok,
    )
    .then_some(phi)
}

/// Relabeling-invariant fingerprint used to bucket graphs before running the
/// oracle.
fn fingerprint(g: &Graph) -> Vec<(usize, Vec<usize>, usize)> {
    let mut key: Vec<(usize, Vec<usize>, usize)> = (0..g.n())
        .map(|v| {
            let nb = g.neighbors(v);
            let mut nd: Vec<usize> = nb.iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            let triangles = nb
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| nb[i + 1..].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| g.has_edge(a, b))
                .count();
            (g.degree(v), nd, triangles)
        })
        .collect();
    key.sort_unstable();
    key
}

type Fingerprint = (usize, Vec<(usize, Vec<usize>, usize)>);

/// Isomorphism classes accumulated one graph at a time.
#[derive(Default)]
struct ClassSet {
    buckets: HashMap<Fingerprint, Vec<usize>>,
    reps: Vec<Graph>,
}

impl ClassSet {
    fn insert(&mut self, g: Graph) -> Result<()> {
        let bucket = self.buckets.entry((g.m(), fingerprint(&g))).or_default();
        for &i in bucket.iter() {
            if oracle_iso(&self.reps[i], &g)?.is_some() {
                return Ok(());
            }
        }
        bucket.push(self.reps.len());
        self.reps.push(g);
        Ok(())
    }
}

fn with_new_vertex(g: &Graph, subset: u32) -> Graph {
    let x = g.n();
    let extra = (0..x).filter(|&v| subset >> v & 1 == 1).map(|v| (v, x));
    Graph::new(x + 1, g.edges().iter().copied().chain(extra)).expect("simple extension")
}

/// All pairwise non-isomorphic 3-connected planar graphs on exactly `n`
/// vertices, `n <= 8`.
///
/// Connected planar graphs are grown one vertex at a time (every connected
/// graph has a vertex whose deletion keeps it connected), deduplicated with
/// [`oracle_iso`]; the last step keeps only 3-connected planar graphs.
pub fn enumerate_small_3conn_planar(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::InfeasibleSize {
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::new(1, []).expect("single vertex")];
    for k in 1..n {
        let last = k + 1 == n;
        let mut classes = ClassSet::default();
        for g in &level {
            for subset in 1u32..(1 << k) {
                if last && subset.count_ones() < 3 {
                    continue;
                }
                let h = with_new_vertex(g, subset);
                if last && !is_3_connected(&h) {
                    continue;
                }
                if is_planar(&h)? {
                    classes.insert(h)?;
                }
            }
        }
        level = classes.reps;
    }
    debug_assert!(level.iter().all(is_connected));
    Ok(level)
}

/// All pairwise non-isomorphic connected simple 3-regular graphs with at
/// most `n` vertices, `n <= 8`, smallest first.
pub fn enumerate_connected_cubic(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::InfeasibleSize {
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    for k in (4..=n).step_by(2) {
        let mut classes = ClassSet::default();
        let mut edges = Vec::new();
        let mut deg = vec![0usize; k];
        cubic_fill(k, 0, &mut deg, &mut edges, &mut |es| {
            let g = Graph::new(k, es.iter().copied()).expect("simple cubic graph");
            if is_connected(&g) {
                classes.insert(g).expect("within oracle limit");
            }
        });
        out.extend(classes.reps);
    }
    Ok(out)
}

type EdgeList = [(usize, usize)];

/// Completes the neighbourhood of vertices `v..` with higher-numbered
/// partners, emitting every labeled cubic graph.
fn cubic_fill(
    k: usize,
    v: usize,
    deg: &mut [usize],
    edges: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&EdgeList),
) {
    if v == k {
        emit(edges);
        return;
    }
    if deg[v] == 3 {
        cubic_fill(k, v + 1, deg, edges, emit);
        return;
    }
    let lowest = edges
        .iter()
        .filter(|&&(a, _)| a == v)
        .map(|&(_, b)| b + 1)
        .max()
        .unwrap_or(v + 1);
    for w in lowest..k {
        if deg[w] < 3 {
            deg[v] += 1;
            deg[w] += 1;
            edges.push((v, w));
            cubic_fill(k, v, deg, edges, emit);
            edges.pop();
            deg[v] -= 1;
            deg[w] -= 1;
        }
    }
}

/// Small named graphs used throughout tests and documentation.
pub mod named {
    use crate::graph::Graph;

    fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).expect("named graph is simple")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("simple")
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("simple")
    }

    /// Rim `0..k` and hub `k`.
    pub fn wheel(k: usize) -> Graph {
        Graph::new(k + 1, (0..k).flat_map(|i| [(i, (i + 1) % k), (i, k)])).expect("simple")
    }

    pub fn cube() -> Graph {
        build(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
    }

    pub fn octahedron() -> Graph {
        // all pairs except the three antipodal ones (0,5), (1,3), (2,4)
        Graph::new(
            6,
            (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|e| ![(0, 5), (1, 3), (2, 4)].contains(e)),
        )
        .expect("simple")
    }

    /// Triangular prism.
    pub fn prism() -> Graph {
        build(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
    }

    pub fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).expect("simple")
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        build(10, &e)
    }

    pub fn icosahedron() -> Graph {
        // two poles 0 and 11, upper ring 1..=5, lower ring 6..=10
        let mut e = Vec::new();
        for i in 0..5 {
            let (u, u_next) = (1 + i, 1 + (i + 1) % 5);
            let (l, l_next) = (6 + i, 6 + (i + 1) % 5);
            e.extend([(0, u), (u, u_next), (u, l), (u_next, l), (l, l_next), (l, 11)]);
        }
        build(12, &e)
    }

    pub fn dodecahedron() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5)); // inner pentagon
            e.push((i, 5 + 2 * i)); // spokes to the middle ring
            e.push((15 + i, 15 + (i + 1) % 5)); // outer pentagon
            e.push((6 + 2 * i, 15 + i));
        }
        for j in 0..10 {
            e.push((5 + j, 5 + (j + 1) % 10));
        }
        build(20, &e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::verify_mapping;

    #[test]
    fn triangulation_k4_and_edge_count() {
        for s in 0..5 {
            assert_eq!(gen_triangulation(4, s), named::complete(4));
        }
        for n in 4..40 {
            for s in 0..3 {
                assert_eq!(gen_triangulation(n, s).m(), 3 * n - 6);
            }
        }
        assert_eq!(gen_triangulation(30, 7), gen_triangulation(30, 7));
    }

    #[test]
    fn triangulations_are_three_connected() {
        for n in 4..=12 {
            for s in 0..50 {
                assert!(is_3_connected(&gen_triangulation(n, s)), "n={n} seed={s}");
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let k4 = named::complete(4);
        assert!(oracle_iso(&k4, &k4).unwrap().is_some());
        assert!(oracle_iso(&named::prism(), &k4).unwrap().is_none());
        let w5 = named::wheel(5);
        let perm = random_permutation(6, 3);
        let h = w5.relabel(&perm).unwrap();
        let phi = oracle_iso(&w5, &h).unwrap().unwrap();
        assert!(verify_mapping(&w5, &h, &phi));
        assert!(oracle_iso(&named::prism(), &named::k33()).unwrap().is_none());
        assert!(matches!(
            oracle_iso(&named::petersen(), &named::petersen()),
            Err(Error::InfeasibleSize { .. })
        ));
    }

    #[test]
    fn oracle_symmetric_and_reflexive() {
        let gs: Vec<Graph> = enumerate_small_3conn_planar(6).unwrap();
        for a in &gs {
            assert!(oracle_iso(a, a).unwrap().is_some());
            for b in &gs {
                assert_eq!(
                    oracle_iso(a, b).unwrap().is_some(),
                    oracle_iso(b, a).unwrap().is_some()
                );
            }
        }
    }

    #[test]
    fn polyhedral_graph_counts() {
        // 3-connected planar graphs on 4..=7 vertices: 1, 2, 7, 34
        let counts: Vec<usize> = (4..=7)
            .map(|n| enumerate_small_3conn_planar(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 7, 34]);
        assert_eq!(enumerate_small_3conn_planar(4).unwrap(), vec![named::complete(4)]);
    }

    #[test]
    fn n5_contains_w4_and_excludes_k5() {
        let gs = enumerate_small_3conn_planar(5).unwrap();
        assert!(gs
            .iter()
            .any(|g| oracle_iso(g, &named::wheel(4)).unwrap().is_some()));
        assert!(gs
            .iter()
            .all(|g| oracle_iso(g, &named::complete(5)).unwrap().is_none()));
        for g in &gs {
            assert!(is_3_connected(g));
            assert!(crate::embed::embed_planar(g).is_ok());
        }
    }

    #[test]
    fn cubic_enumeration() {
        let cubic = enumerate_connected_cubic(6).unwrap();
        assert_eq!(cubic.len(), 3);
        assert!(oracle_iso(&cubic[0], &named::complete(4)).unwrap().is_some());
        assert!(cubic
            .iter()
            .any(|g| oracle_iso(g, &named::k33()).unwrap().is_some()));
        assert!(cubic
            .iter()
            .any(|g| oracle_iso(g, &named::prism()).unwrap().is_some()));
        // 1 + 2 + 5 connected cubic graphs on 4, 6, 8 vertices
        assert_eq!(enumerate_connected_cubic(8).unwrap().len(), 8);
        assert!(enumerate_connected_cubic(10).is_err());
    }

    #[test]
    fn named_graph_shapes() {
        assert_eq!((named::icosahedron().n(), named::icosahedron().m()), (12, 30));
        assert_eq!((named::dodecahedron().n(), named::dodecahedron().m()), (20, 30));
        assert!(degree_sequence(&named::icosahedron()).iter().all(|&d| d == 5));
        assert!(degree_sequence(&named::dodecahedron()).iter().all(|&d| d == 3));
        assert!(is_3_connected(&named::dodecahedron()));
        assert!(is_3_connected(&named::icosahedron()));
    }
}

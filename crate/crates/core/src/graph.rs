//! Simple undirected graphs, rotation systems and face tracing.
//!
//! Vertices are dense indices `0..n`. An [`Embedding`] lists, for every
//! vertex, its neighbours in clockwise order. Faces are traced with the
//! rule: after arriving at `v` along `(u, v)`, leave along `(v, w)` where `w`
//! is the successor of `u` in the rotation of `v`.

use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalised (`u < v`) and sorted; adjacency lists are
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints
    /// outside `0..n`. Edge endpoints may be given in either order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Self { n, edges: list, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// All `2m` directed edges, ordered by tail and then by head.
    pub fn directed_edges(&self) -> impl Iterator<Item = DirectedEdge> + '_ {
        (0..self.n).flat_map(move |t| self.adj[t].iter().map(move |&h| DirectedEdge::new(t, h)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Sorted degree multiset.
    pub fn degree_sequence(&self) -> Vec<usize> {
        degree_sequence(self)
    }
}

/// Ascending multiset of vertex degrees.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidGraph(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidGraph("map is not a permutation".into()));
        }
    }
    Ok(())
}

/// Inverse of a permutation given as `perm[old] = new`.
pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// An ordered pair `(tail, head)` standing for one direction of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdge {
    pub tail: usize,
    pub head: usize,
}

impl DirectedEdge {
    pub const fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }

    pub const fn reversed(self) -> Self {
        Self::new(self.head, self.tail)
    }

    pub fn map(self, perm: &[usize]) -> Self {
        Self::new(perm[self.tail], perm[self.head])
    }
}

impl fmt::Display for DirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tail, self.head)
    }
}

/// A rotation system: the clockwise cyclic order of neighbours at every
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    /// Wraps raw rotation lists without checking them against a graph; see
    /// [`Embedding::for_graph`].
    pub fn new(rotation: Vec<Vec<usize>>) -> Self {
        Self { rotation }
    }

    /// Wraps rotation lists after checking that each is a permutation of the
    /// corresponding neighbour set of `g`.
    pub fn for_graph(g: &Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let emb = Self::new(rotation);
        emb.check(g)?;
        Ok(emb)
    }

    /// The embedding whose rotations are the sorted adjacency lists.
    pub fn sorted(g: &Graph) -> Self {
        Self::new((0..g.n()).map(|v| g.neighbors(v).to_vec()).collect())
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.rotation.len() != g.n() {
            return Err(Error::InvalidEmbedding(format!(
                "{} rotations for {} vertices",
                self.rotation.len(),
                g.n()
            )));
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at vertex {v} is not a permutation of its neighbours"
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Position of `w` within the rotation of `v`.
    pub fn position(&self, v: usize, w: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&x| x == w)
    }

    /// Clockwise successor of neighbour `u` around `v`.
    pub fn successor(&self, v: usize, u: usize) -> Option<usize> {
        let rot = &self.rotation[v];
        self.position(v, u).map(|p| rot[(p + 1) % rot.len()])
    }

    pub fn contains(&self, e: DirectedEdge) -> bool {
        e.tail < self.n() && self.rotation[e.tail].contains(&e.head)
    }

    /// Every rotation reversed.
    pub fn mirror(&self) -> Self {
        Self::new(
            self.rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        )
    }

    /// Transports the embedding along `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut rotation = vec![Vec::new(); self.rotation.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            rotation[perm[v]] = rot.iter().map(|&w| perm[w]).collect();
        }
        Self::new(rotation)
    }
}

/// Partitions the `2m` directed edges into face cycles.
///
/// Starting darts are taken in vertex order and then rotation order, so the
/// output is deterministic.
pub fn trace_faces(g: &Graph, rho: &Embedding) -> Result<Vec<Vec<DirectedEdge>>> {
    rho.check(g)?;
    let mut offset = Vec::with_capacity(g.n() + 1);
    offset.push(0);
    for v in 0..g.n() {
        offset.push(offset[v] + rho.degree(v));
    }
    let mut used = vec![false; offset[g.n()]];
    let mut faces = Vec::new();
    for v in 0..g.n() {
        for i in 0..rho.degree(v) {
            if used[offset[v] + i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut tail, mut idx) = (v, i);
            while !used[offset[tail] + idx] {
                used[offset[tail] + idx] = true;
                let head = rho.rotation(tail)[idx];
                face.push(DirectedEdge::new(tail, head));
                let back = rho.position(head, tail).expect("checked embedding");
                idx = (back + 1) % rho.degree(head);
                tail = head;
            }
            faces.push(face);
        }
    }
    Ok(faces)
}

/// `true` iff `n - m + F == 2`, i.e. the rotation system is a sphere
/// embedding of the (connected) graph.
///
/// An edgeless single vertex counts as one face.
pub fn euler_verify(g: &Graph, rho: &Embedding) -> bool {
    if g.m() == 0 {
        return g.n() == 1 && rho.check(g).is_ok();
    }
    match trace_faces(g, rho) {
        Ok(faces) => g.n() as i64 - g.m() as i64 + faces.len() as i64 == 2,
        Err(_) => false,
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::corpus::named;

    fn k4_planar() -> (Graph, Embedding) {
        let g = named::complete(4);
        // vertex 3 in the middle of triangle 0-1-2
        let rho = Embedding::for_graph(
            &g,
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        )
        .unwrap();
        (g, rho)
    }

    /// All rotation systems of `g`, by brute force over the cyclic orders at
    /// each vertex (first neighbour fixed).
    pub(crate) fn all_rotation_systems(g: &Graph) -> Vec<Embedding> {
        fn perms(rest: &[usize]) -> Vec<Vec<usize>> {
            if rest.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for i in 0..rest.len() {
                let mut r = rest.to_vec();
                let x = r.remove(i);
                for mut p in perms(&r) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        let per_vertex: Vec<Vec<Vec<usize>>> = (0..g.n())
            .map(|v| {
                let nb = g.neighbors(v);
                if nb.is_empty() {
                    return vec![vec![]];
                }
                perms(&nb[1..])
                    .into_iter()
                    .map(|mut p| {
                        p.insert(0, nb[0]);
                        p
                    })
                    .collect()
            })
            .collect();
        let mut out = vec![Vec::new()];
        for choices in &per_vertex {
            let mut next = Vec::new();
            for partial in &out {
                for c in choices {
                    let mut p: Vec<Vec<usize>> = partial.clone();
                    p.push(c.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(Embedding::new).collect()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
        let g = Graph::new(3, [(2, 0), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert_eq!(g.neighbors(2), &[0, 1]);
    }

    #[test]
    fn k4_planar_has_four_faces() {
        let (g, rho) = k4_planar();
        let faces = trace_faces(&g, &rho).unwrap();
        assert_eq!(faces.len(), 4);
        assert!(euler_verify(&g, &rho));
        assert!(euler_verify(&g, &rho.mirror()));
        assert_eq!(trace_faces(&g, &rho.mirror()).unwrap().len(), 4);
    }

    #[test]
    fn cube_planar_has_six_faces() {
        let g = named::cube();
        let rho = crate::embed::embed_planar(&g).unwrap();
        assert_eq!(trace_faces(&g, &rho).unwrap().len(), 6);
    }

    #[test]
    fn every_dart_on_exactly_one_face() {
        let (g, rho) = k4_planar();
        let mut darts: Vec<DirectedEdge> = trace_faces(&g, &rho).unwrap().concat();
        darts.sort();
        let all: Vec<DirectedEdge> = g.directed_edges().collect();
        assert_eq!(darts, all);
    }

    #[test]
    fn k4_rotation_enumeration() {
        // 2^4 rotation systems; planar ones give F = 4, the rest F = 2
        let g = named::complete(4);
        let systems = all_rotation_systems(&g);
        assert_eq!(systems.len(), 16);
        let mut planar = 0;
        for rho in &systems {
            let f = trace_faces(&g, rho).unwrap().len();
            if euler_verify(&g, rho) {
                assert_eq!(f, 4);
                planar += 1;
            } else {
                assert_ne!(f, 4);
                assert_eq!(f, 2);
            }
        }
        assert_eq!(planar, 2);
    }

    #[test]
    fn single_edge_and_single_vertex() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let rho = Embedding::sorted(&g);
        assert_eq!(trace_faces(&g, &rho).unwrap().len(), 1);
        assert!(euler_verify(&g, &rho));
        let g = Graph::new(1, []).unwrap();
        assert!(euler_verify(&g, &Embedding::sorted(&g)));
    }

    #[test]
    fn invalid_rotation_rejected() {
        let g = named::complete(4);
        let rho = Embedding::new(vec![vec![1, 2, 2], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]]);
        assert!(matches!(trace_faces(&g, &rho), Err(Error::InvalidEmbedding(_))));
        assert!(!euler_verify(&g, &rho));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(degree_sequence(&named::complete(4)), vec![3, 3, 3, 3]);
        assert_eq!(degree_sequence(&named::wheel(5)), vec![3, 3, 3, 3, 3, 5]);
        assert_eq!(degree_sequence(&named::octahedron()), vec![4; 6]);
    }

    #[test]
    fn mirror_is_involution() {
        let rho = Embedding::new(vec![vec![1, 2, 3]]);
        assert_eq!(rho.mirror().rotation(0), &[3, 2, 1]);
        assert_eq!(rho.mirror().mirror(), rho);
    }

    #[test]
    fn tracing_is_deterministic() {
        let g = named::octahedron();
        let rho = crate::embed::embed_planar(&g).unwrap();
        assert_eq!(trace_faces(&g, &rho).unwrap(), trace_faces(&g, &rho).unwrap());
    }
}

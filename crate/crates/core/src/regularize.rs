//! Expansion of an embedded 3-connected planar graph into an edge-coloured
//! 3-regular planar graph.
//!
//! Vertex `i` of degree `d` becomes a cycle `(i, 0) .. (i, d-1)`; the copy
//! `(i, p)` takes over the `p`-th edge in the rotation of `i`. Cycle edges are
//! coloured [`EdgeColor::Cycle`], inherited edges [`EdgeColor::Original`].
//! Copies are numbered consecutively: all copies of vertex 0, then of 1, ...

use std::fmt;

use crate::connectivity::is_3_connected;
use crate::error::{Error, Result};
use crate::graph::{euler_verify, Embedding, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColor {
    /// Colour 1: edges of the cycle replacing an original vertex.
    Cycle,
    /// Colour 2: edges inherited from the original graph.
    Original,
}

impl EdgeColor {
    pub fn code(self) -> u8 {
        match self {
            EdgeColor::Cycle => 1,
            EdgeColor::Original => 2,
        }
    }

    pub fn from_code(c: u8) -> Option<Self> {
        match c {
            1 => Some(EdgeColor::Cycle),
            2 => Some(EdgeColor::Original),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Edge-coloured 3-regular graph with its inherited embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    embedding: Embedding,
    /// Aligned with `graph.edges()`.
    colors: Vec<EdgeColor>,
    /// `(original vertex, rotation position)` of each expanded vertex.
    origin: Vec<(usize, usize)>,
}

impl ColoredGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn colors(&self) -> &[EdgeColor] {
        &self.colors
    }

    pub fn origin(&self, v: usize) -> (usize, usize) {
        self.origin[v]
    }

    pub fn origins(&self) -> &[(usize, usize)] {
        &self.origin
    }

    pub fn color(&self, u: usize, v: usize) -> Option<EdgeColor> {
        self.graph.edge_index(u, v).map(|i| self.colors[i])
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Colored edges `(u, v, color)` with `u < v`, in edge order.
    pub fn colored_edges(&self) -> impl Iterator<Item = (usize, usize, EdgeColor)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c))
    }

    /// Same coloured graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let graph = self.graph.relabel(perm)?;
        let inv = crate::graph::invert_permutation(perm);
        let colors = graph
            .edges()
            .iter()
            .map(|&(u, v)| self.color(inv[u], inv[v]).expect("edge exists before relabeling"))
            .collect();
        let mut origin = vec![(0, 0); self.origin.len()];
        for (v, &o) in self.origin.iter().enumerate() {
            origin[perm[v]] = o;
        }
        Ok(Self {
            graph,
            embedding: self.embedding.relabel(perm),
            colors,
            origin,
        })
    }

    /// Checks every structural property regularize guarantees, given the
    /// original edge count `m`.
    pub fn check_invariants(&self, m: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGraph(msg));
        let g = &self.graph;
        if g.n() != 2 * m || g.m() != 3 * m {
            return bad(format!("expected {} vertices and {} edges", 2 * m, 3 * m));
        }
        for v in 0..g.n() {
            let (mut one, mut two) = (0, 0);
            for &w in g.neighbors(v) {
                match self.color(v, w) {
                    Some(EdgeColor::Cycle) => one += 1,
                    Some(EdgeColor::Original) => two += 1,
                    None => unreachable!(),
                }
            }
            if (one, two) != (2, 1) {
                return bad(format!("vertex {v} has colour profile ({one}, {two})"));
            }
        }
        // colour-1 components are exactly the copies of one original vertex
        let cycles = self.cycles();
        let mut seen = vec![false; g.n()];
        for cyc in &cycles {
            let owner = self.origin[cyc[0]].0;
            if cyc.iter().any(|&v| self.origin[v].0 != owner) {
                return bad(format!("cycle through {} mixes original vertices", cyc[0]));
            }
            if cyc.len() < 3 {
                return bad(format!("colour-1 cycle of length {}", cyc.len()));
            }
            for &v in cyc {
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&s| s) || cycles.iter().map(Vec::len).sum::<usize>() != 2 * m {
            return bad("colour-1 cycles do not partition the vertices".into());
        }
        if self.colors.iter().filter(|&&c| c == EdgeColor::Original).count() != m {
            return bad("wrong number of colour-2 edges".into());
        }
        if !euler_verify(g, &self.embedding) {
            return Err(Error::NotPlanarEmbedding);
        }
        Ok(())
    }

    /// Vertex sets of the colour-1 components, each listed in cycle order
    /// from its smallest vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let g = &self.graph;
        let mut seen = vec![false; g.n()];
        let mut out = Vec::new();
        for s in 0..g.n() {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut cur = s;
            while let Some(&next) = g
                .neighbors(cur)
                .iter()
                .find(|&&w| !seen[w] && self.color(cur, w) == Some(EdgeColor::Cycle))
            {
                seen[next] = true;
                cyc.push(next);
                cur = next;
            }
            out.push(cyc);
        }
        out
    }
}

/// Builds the expanded graph for a 3-connected graph with a planar
/// rotation system.
///
/// The rotation of copy `(i, p)` is `[(i, p-1), external, (i, p+1)]`, so the
/// external edges around the cycle keep the cyclic order they had around `i`
/// and faces of `rho` survive as faces of the expansion.
pub fn regularize(g: &Graph, rho: &Embedding) -> Result<ColoredGraph> {
    if !is_3_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    rho.check(g)?;
    if !euler_verify(g, rho) {
        return Err(Error::NotPlanarEmbedding);
    }
    let mut offset = Vec::with_capacity(g.n() + 1);
    offset.push(0);
    for v in 0..g.n() {
        offset.push(offset[v] + g.degree(v));
    }
    let total = offset[g.n()];
    let copy = |i: usize, p: usize| offset[i] + p % g.degree(i);

    let mut origin = Vec::with_capacity(total);
    let mut rotation = Vec::with_capacity(total);
    let mut edges = Vec::with_capacity(3 * g.m());
    for i in 0..g.n() {
        let d = g.degree(i);
        for p in 0..d {
            let j = rho.rotation(i)[p];
            let q = rho.position(j, i).expect("checked embedding");
            let external = copy(j, q);
            origin.push((i, p));
            rotation.push(vec![copy(i, p + d - 1), external, copy(i, p + 1)]);
            edges.push((copy(i, p), copy(i, p + 1)));
            if copy(i, p) < external {
                edges.push((copy(i, p), external));
            }
        }
    }
    let graph = Graph::new(total, edges).expect("expansion of a simple graph is simple");
    let colors = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            if origin[u].0 == origin[v].0 {
                EdgeColor::Cycle
            } else {
                EdgeColor::Original
            }
        })
        .collect();
    let embedding = Embedding::for_graph(&graph, rotation)?;
    Ok(ColoredGraph {
        graph,
        embedding,
        colors,
        origin,
    })
}

/// `true` iff `phi` is a bijection `V(c1) -> V(c2)` preserving adjacency in
/// both directions and edge colours.
pub fn color_respecting_iso_check(c1: &ColoredGraph, c2: &ColoredGraph, phi: &[usize]) -> bool {
    let (g1, g2) = (c1.graph(), c2.graph());
    if g1.n() != g2.n() || g1.m() != g2.m() || crate::graph::check_permutation(phi, g2.n()).is_err() {
        return false;
    }
    // equal edge counts plus injectivity make the forward direction enough
    c1.colored_edges()
        .all(|(u, v, c)| c2.color(phi[u], phi[v]) == Some(c))
}

//! Canonical codes from exploration walks.
//!
//! Vertices are labelled by first occurrence in the walk transcript; the
//! code lists, for every label pair `i < j` in row-major upper-triangular
//! order, whether `(i, j)` is an edge and of which colour.
//!
//! Serialized form: `<vertex_count>:<cells>` with one character per cell,
//! `'0'` for a non-edge, `'1'`/`'2'` for colour-1/colour-2 edges, and `'1'`
//! for an edge of an uncoloured (contracted) code.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DirectedEdge, Embedding, Graph};
use crate::regularize::{ColoredGraph, EdgeColor};
use crate::uxs::{ExplorationSequence, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    NonEdge,
    /// Edge of an uncoloured graph.
    Edge,
    Color1,
    Color2,
}

impl Cell {
    fn from_color(c: Option<EdgeColor>) -> Self {
        match c {
            None => Cell::NonEdge,
            Some(EdgeColor::Cycle) => Cell::Color1,
            Some(EdgeColor::Original) => Cell::Color2,
        }
    }

    fn as_char(self) -> char {
        match self {
            Cell::NonEdge => '0',
            Cell::Edge | Cell::Color1 => '1',
            Cell::Color2 => '2',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeKind {
    /// Cells over {non-edge, colour 1, colour 2}.
    Colored,
    /// Cells over {non-edge, edge}.
    Plain,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonCode {
    vertex_count: usize,
    kind: CodeKind,
    cells: Vec<Cell>,
}

/// Index of `(i, j)`, `i < j < n`, in row-major upper-triangular order.
fn cell_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl CanonCode {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Cell for 0-based labels `i != j`.
    pub fn cell(&self, i: usize, j: usize) -> Cell {
        let (a, b) = (i.min(j), i.max(j));
        self.cells[cell_index(self.vertex_count, a, b)]
    }

    pub fn edge_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c != Cell::NonEdge).count()
    }

    /// Builds the code of `g` under the identity labelling.
    pub fn of_graph(g: &Graph) -> Self {
        Self::build(g.n(), CodeKind::Plain, |i, j| {
            if g.has_edge(i, j) {
                Cell::Edge
            } else {
                Cell::NonEdge
            }
        })
    }

    fn build(n: usize, kind: CodeKind, cell: impl Fn(usize, usize) -> Cell) -> Self {
        let mut cells = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                cells.push(cell(i, j));
            }
        }
        Self {
            vertex_count: n,
            kind,
            cells,
        }
    }

    pub fn serialize(&self) -> String {
        let mut s = self.vertex_count.to_string();
        s.push(':');
        s.extend(self.cells.iter().map(|c| c.as_char()));
        s
    }

    /// Parses the serialized form; `kind` decides how `'1'` is read.
    pub fn parse(text: &str, kind: CodeKind) -> Result<Self> {
        let bad = |m: &str| Error::MalformedCode(m.to_string());
        let (count, body) = text.trim().split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let n: usize = count.parse().map_err(|_| bad("vertex count is not a number"))?;
        let cells: Vec<Cell> = body
            .chars()
            .map(|ch| match (ch, kind) {
                ('0', _) => Ok(Cell::NonEdge),
                ('1', CodeKind::Plain) => Ok(Cell::Edge),
                ('1', CodeKind::Colored) => Ok(Cell::Color1),
                ('2', CodeKind::Colored) => Ok(Cell::Color2),
                _ => Err(bad(&format!("unexpected cell {ch:?}"))),
            })
            .collect::<Result<_>>()?;
        if cells.len() != n * n.saturating_sub(1) / 2 {
            return Err(bad("cell count does not match vertex count"));
        }
        Ok(Self {
            vertex_count: n,
            kind,
            cells,
        })
    }

    /// The labelled graph the code describes (labels `0..vertex_count`),
    /// with colours for coloured codes.
    pub fn decode(&self) -> Result<(Graph, Option<Vec<EdgeColor>>)> {
        let n = self.vertex_count.max(1);
        let mut edges = Vec::new();
        let mut colors = Vec::new();
        for i in 0..self.vertex_count {
            for j in i + 1..self.vertex_count {
                match self.cell(i, j) {
                    Cell::NonEdge => {}
                    Cell::Edge => edges.push((i, j)),
                    Cell::Color1 => {
                        edges.push((i, j));
                        colors.push(EdgeColor::Cycle);
                    }
                    Cell::Color2 => {
                        edges.push((i, j));
                        colors.push(EdgeColor::Original);
                    }
                }
            }
        }
        let g = Graph::new(n, edges)?;
        // edges were produced in sorted order, so colours line up with g.edges()
        Ok((g, (self.kind == CodeKind::Colored).then_some(colors)))
    }
}

impl fmt::Display for CanonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl fmt::Debug for CanonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonCode({:?}, {})", self.kind, self.serialize())
    }
}

impl FromStr for CanonCode {
    type Err = Error;

    /// Reads a code, treating it as coloured when any `'2'` cell occurs.
    fn from_str(s: &str) -> Result<Self> {
        let kind = if s.split_once(':').is_some_and(|(_, b)| b.contains('2')) {
            CodeKind::Colored
        } else {
            CodeKind::Plain
        };
        Self::parse(s, kind)
    }
}

/// Walk transcript plus first-occurrence labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledWalk {
    pub transcript: Vec<usize>,
    /// 1-based label of each vertex, `None` if never visited.
    pub first_occurrence_label: Vec<Option<usize>>,
}

impl LabeledWalk {
    pub fn new(rho: &Embedding, start: DirectedEdge, seq: &ExplorationSequence) -> Result<Self> {
        let transcript: Vec<usize> = Walk::new(rho, start, seq.symbols().iter().copied())?.collect();
        let mut labels = vec![None; rho.n()];
        let mut next = 1;
        for &v in &transcript {
            if labels[v].is_none() {
                labels[v] = Some(next);
                next += 1;
            }
        }
        Ok(Self {
            transcript,
            first_occurrence_label: labels,
        })
    }

    pub fn visited(&self) -> usize {
        self.first_occurrence_label.iter().flatten().count()
    }

    /// 0-based labelling as a permutation `vertex -> label`, if every vertex
    /// was visited.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        self.first_occurrence_label
            .iter()
            .map(|l| l.map(|x| x - 1))
            .collect()
    }
}

/// Code of `c` under the first-occurrence labelling of the walk on `rho`.
///
/// `rho` must be a rotation system of `c`'s graph (its own embedding or the
/// mirror). Returns [`Error::IncompleteCoverage`] if the walk misses a vertex.
pub fn canon(
    c: &ColoredGraph,
    rho: &Embedding,
    start: DirectedEdge,
    seq: &ExplorationSequence,
) -> Result<CanonCode> {
    Ok(canon_with_labels(c, rho, start, seq)?.0)
}

/// [`canon`] together with the labelling (`vertex -> 0-based label`).
pub fn canon_with_labels(
    c: &ColoredGraph,
    rho: &Embedding,
    start: DirectedEdge,
    seq: &ExplorationSequence,
) -> Result<(CanonCode, Vec<usize>)> {
    rho.check(c.graph())?;
    let lw = LabeledWalk::new(rho, start, seq)?;
    let labels = lw.permutation().ok_or(Error::IncompleteCoverage {
        visited: lw.visited(),
        total: c.n(),
    })?;
    let by_label = crate::graph::invert_permutation(&labels);
    let code = CanonCode::build(c.n(), CodeKind::Colored, |i, j| {
        Cell::from_color(c.color(by_label[i], by_label[j]))
    });
    Ok((code, labels))
}

/// Incremental comparison against a fixed target code.
///
/// `matches(...)` is exactly `canon(...) == Ok(target)`, but stops at the
/// first vertex whose edges to earlier-labelled vertices disagree with the
/// target.
#[derive(Debug, Clone)]
pub struct CanonMatcher<'t> {
    target: &'t CanonCode,
    /// For each label `k`, number of edges to labels `< k`.
    back_degree: Vec<usize>,
}

impl<'t> CanonMatcher<'t> {
    pub fn new(target: &'t CanonCode) -> Self {
        let n = target.vertex_count;
        let mut back_degree = vec![0; n];
        for i in 0..n {
            for (j, d) in back_degree.iter_mut().enumerate().skip(i + 1) {
                if target.cell(i, j) != Cell::NonEdge {
                    *d += 1;
                }
            }
        }
        Self { target, back_degree }
    }

    pub fn target(&self) -> &CanonCode {
        self.target
    }

    /// The labelling (`vertex -> 0-based label`) when the code of `c` under
    /// this walk equals the target, `None` otherwise.
    pub fn matches(
        &self,
        c: &ColoredGraph,
        rho: &Embedding,
        start: DirectedEdge,
        seq: &ExplorationSequence,
    ) -> Result<Option<Vec<usize>>> {
        let n = c.n();
        if self.target.kind != CodeKind::Colored || self.target.vertex_count != n {
            return Ok(None);
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for v in Walk::new(rho, start, seq.symbols().iter().copied())? {
            if label[v] != usize::MAX {
                continue;
            }
            let k = next;
            let mut back = 0;
            for &w in c.graph().neighbors(v) {
                let j = label[w];
                if j == usize::MAX {
                    continue;
                }
                back += 1;
                if self.target.cell(j, k) != Cell::from_color(c.color(v, w)) {
                    return Ok(None);
                }
            }
            if back != self.back_degree[k] {
                return Ok(None);
            }
            label[v] = k;
            next += 1;
            if next == n {
                return Ok(Some(label));
            }
        }
        Ok(None)
    }
}

/// Collapses every colour-1 cycle of a coloured code to its smallest label,
/// joins cycle representatives along colour-2 edges, and rank-compresses the
/// representatives to `0..n`.
pub fn contract(sigma_prime: &CanonCode) -> Result<CanonCode> {
    let bad = |m: String| Err(Error::MalformedColoredCanon(m));
    if sigma_prime.kind != CodeKind::Colored {
        return bad("contraction needs a coloured code".into());
    }
    let n = sigma_prime.vertex_count;
    let mut ones = vec![Vec::new(); n];
    let mut twos = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match sigma_prime.cell(i, j) {
                Cell::Color1 => {
                    ones[i].push(j);
                    ones[j].push(i);
                }
                Cell::Color2 => twos.push((i, j)),
                Cell::NonEdge => {}
                Cell::Edge => return bad("uncoloured cell in coloured code".into()),
            }
        }
    }
    let mut two_deg = vec![0; n];
    for &(i, j) in &twos {
        two_deg[i] += 1;
        two_deg[j] += 1;
    }
    if let Some(v) = (0..n).find(|&v| ones[v].len() != 2 || two_deg[v] != 1) {
        return bad(format!(
            "label {v} does not have two colour-1 edges and one colour-2 edge"
        ));
    }

    // minimum label on each colour-1 cycle
    let mut rep = vec![usize::MAX; n];
    for s in 0..n {
        if rep[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        let mut members = Vec::new();
        rep[s] = s;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &ones[v] {
                if rep[w] == usize::MAX {
                    rep[w] = s;
                    stack.push(w);
                }
            }
        }
        // s is the smallest unvisited label, hence the cycle minimum
        debug_assert_eq!(members.iter().min(), Some(&s));
    }

    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let rank = |r: usize| reps.binary_search(&r).expect("representative");

    let k = reps.len();
    let mut edges = Vec::with_capacity(twos.len());
    for &(i, j) in &twos {
        let (p, q) = (rank(rep[i]), rank(rep[j]));
        if p == q {
            return bad(format!("colour-2 edge ({i}, {j}) inside one colour-1 cycle"));
        }
        edges.push((p.min(q), p.max(q)));
    }
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return bad("two colour-2 edges join the same pair of cycles".into());
    }
    Ok(CanonCode::build(k, CodeKind::Plain, |i, j| {
        if edges.binary_search(&(i, j)).is_ok() {
            Cell::Edge
        } else {
            Cell::NonEdge
        }
    }))
}

//! Isomorphism decision for 3-connected planar graphs.
//!
//! The first graph gets one fixed embedding and start edge; its expanded
//! code is matched against every (embedding, start edge) choice on the
//! second graph, both embeddings and all `2m'` directed edges, using one
//! shared exploration sequence. A match yields a colour-respecting
//! isomorphism of the expansions, which collapses to an isomorphism of the
//! originals.

use rayon::prelude::*;

use crate::canon::{canon, canon_with_labels, contract, CanonCode, CanonMatcher};
use crate::connectivity::is_3_connected;
use crate::embed::embed_planar;
use crate::error::{Error, Result};
use crate::graph::{check_permutation, euler_verify, DirectedEdge, Embedding, Graph};
use crate::regularize::{color_respecting_iso_check, regularize, ColoredGraph};
use crate::uxs::{ensure_exploring_with, ExplorationSequence, ExploreConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Isomorphic,
    NotIsomorphic,
}

/// Which of the two sphere embeddings of the second graph matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmbeddingChoice {
    Plain,
    Mirror,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub embedding: EmbeddingChoice,
    /// Start edge in the expanded second graph.
    pub start: DirectedEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    pub verdict: Verdict,
    /// `mapping[v]` is the image in the second graph of vertex `v` of the first.
    pub mapping: Option<Vec<usize>>,
    pub witness: Option<Witness>,
}

impl IsoResult {
    fn negative() -> Self {
        Self {
            verdict: Verdict::NotIsomorphic,
            mapping: None,
            witness: None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        self.verdict == Verdict::Isomorphic
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoOptions {
    pub seed: u64,
    /// Reject on differing `n`, `m` or degree sequence before expanding.
    pub quick_reject: bool,
    /// Also try the mirror embedding of the second graph.
    pub try_mirror: bool,
    pub explore: ExploreConfig,
}

impl IsoOptions {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

impl Default for IsoOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            quick_reject: true,
            try_mirror: true,
            explore: ExploreConfig::cover_prefix(),
        }
    }
}

/// A validated input: graph, chosen embedding and its expansion.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub graph: Graph,
    pub embedding: Embedding,
    pub expanded: ColoredGraph,
}

impl Prepared {
    /// Checks 3-connectivity, embeds and expands.
    pub fn new(g: &Graph) -> Result<Self> {
        if !is_3_connected(g) {
            return Err(match embed_planar(g) {
                Err(Error::NotPlanar) => Error::NotPlanar,
                _ => Error::NotThreeConnected,
            });
        }
        let embedding = embed_planar(g)?;
        Self::with_embedding(g, embedding)
    }

    /// Uses a given rotation system, which must be a sphere embedding.
    pub fn with_embedding(g: &Graph, embedding: Embedding) -> Result<Self> {
        if !is_3_connected(g) {
            return Err(Error::NotThreeConnected);
        }
        embedding.check(g)?;
        if !euler_verify(g, &embedding) {
            return Err(Error::NotPlanarEmbedding);
        }
        let expanded = regularize(g, &embedding)?;
        Ok(Self {
            graph: g.clone(),
            embedding,
            expanded,
        })
    }

    /// Fixed reference start: expanded vertex 0 towards its first rotation
    /// neighbour.
    pub fn reference_start(&self) -> DirectedEdge {
        DirectedEdge::new(0, self.expanded.embedding().rotation(0)[0])
    }
}

/// Codes of a single graph for fixed choices.
#[derive(Debug, Clone)]
pub struct GraphCanon {
    pub sequence: ExplorationSequence,
    /// Code of the expanded graph.
    pub colored: CanonCode,
    /// Contracted code of the original graph.
    pub contracted: CanonCode,
}

/// Code of `g` for its computed embedding and the reference start edge.
///
/// The code depends on these choices; isomorphic graphs with different
/// numberings may get different codes here. Use [`isomorphic`] to compare.
pub fn canonical_code(g: &Graph, seed: u64) -> Result<GraphCanon> {
    canonical_code_of(&Prepared::new(g)?, seed, &ExploreConfig::cover_prefix())
}

pub fn canonical_code_of(p: &Prepared, seed: u64, explore: &ExploreConfig) -> Result<GraphCanon> {
    let start = p.reference_start();
    let rho = p.expanded.embedding();
    let sequence = ensure_exploring_with(rho, start, seed, explore)?;
    let colored = canon(&p.expanded, rho, start, &sequence)?;
    let contracted = contract(&colored)?;
    Ok(GraphCanon {
        sequence,
        colored,
        contracted,
    })
}

/// Decides whether two 3-connected planar graphs are isomorphic.
pub fn isomorphic(g1: &Graph, g2: &Graph, seed: u64) -> Result<IsoResult> {
    isomorphic_with(g1, g2, &IsoOptions::with_seed(seed))
}

pub fn isomorphic_with(g1: &Graph, g2: &Graph, opts: &IsoOptions) -> Result<IsoResult> {
    let p1 = Prepared::new(g1)?;
    let p2 = Prepared::new(g2)?;
    isomorphic_prepared(&p1, &p2, opts)
}

/// Like [`isomorphic_with`] but with caller-supplied sphere embeddings.
pub fn isomorphic_embedded(
    g1: &Graph,
    rho1: &Embedding,
    g2: &Graph,
    rho2: &Embedding,
    opts: &IsoOptions,
) -> Result<IsoResult> {
    let p1 = Prepared::with_embedding(g1, rho1.clone())?;
    let p2 = Prepared::with_embedding(g2, rho2.clone())?;
    isomorphic_prepared(&p1, &p2, opts)
}

pub fn isomorphic_prepared(p1: &Prepared, p2: &Prepared, opts: &IsoOptions) -> Result<IsoResult> {
    let (g1, g2) = (&p1.graph, &p2.graph);
    if opts.quick_reject
        && (g1.n() != g2.n() || g1.m() != g2.m() || g1.degree_sequence() != g2.degree_sequence())
    {
        return Ok(IsoResult::negative());
    }
    if p1.expanded.n() != p2.expanded.n() {
        return Ok(IsoResult::negative());
    }

    let start1 = p1.reference_start();
    let seq = ensure_exploring_with(p1.expanded.embedding(), start1, opts.seed, &opts.explore)?;
    let (sigma1, labels1) = canon_with_labels(&p1.expanded, p1.expanded.embedding(), start1, &seq)?;

    let found = candidate_match(&p1.expanded, &labels1, &sigma1, &p2.expanded, &seq, opts, |phi| {
        collapse(&p1.expanded, &p2.expanded, phi).filter(|m| verify_mapping(g1, g2, m))
    });
    Ok(match found {
        Some((witness, mapping)) => IsoResult {
            verdict: Verdict::Isomorphic,
            mapping: Some(mapping),
            witness: Some(witness),
        },
        None => IsoResult::negative(),
    })
}

/// Tries every embedding/start-edge choice on `c2` in a fixed order and
/// returns the lowest-indexed one whose code equals `sigma1` and whose
/// expanded-level map `labels2^-1 . labels1` passes the colour check and
/// `accept`.
fn candidate_match<T: Send>(
    c1: &ColoredGraph,
    labels1: &[usize],
    sigma1: &CanonCode,
    c2: &ColoredGraph,
    seq: &ExplorationSequence,
    opts: &IsoOptions,
    accept: impl Fn(&[usize]) -> Option<T> + Sync,
) -> Option<(Witness, T)> {
    let plain = c2.embedding().clone();
    let mirror = plain.mirror();
    let mut choices = vec![(EmbeddingChoice::Plain, &plain)];
    if opts.try_mirror {
        choices.push((EmbeddingChoice::Mirror, &mirror));
    }
    let candidates: Vec<(EmbeddingChoice, &Embedding, DirectedEdge)> = choices
        .iter()
        .flat_map(|&(which, rho)| c2.graph().directed_edges().map(move |e| (which, rho, e)))
        .collect();
    let matcher = CanonMatcher::new(sigma1);
    let hit = candidates.par_iter().find_map_first(|&(which, rho, e)| {
        let labels2 = matcher.matches(c2, rho, e, seq).ok()??;
        let by_label2 = crate::graph::invert_permutation(&labels2);
        let phi: Vec<usize> = labels1.iter().map(|&l| by_label2[l]).collect();
        if !color_respecting_iso_check(c1, c2, &phi) {
            return None;
        }
        accept(&phi).map(|t| {
            (
                Witness {
                    embedding: which,
                    start: e,
                },
                t,
            )
        })
    });
    hit
}

/// Matches expanded graphs `c1`, `c2` by colour-respecting isomorphism using
/// the canon pipeline (fixed choice on `c1`, all choices on `c2`).
pub fn colored_isomorphism(
    c1: &ColoredGraph,
    c2: &ColoredGraph,
    opts: &IsoOptions,
) -> Result<Option<Vec<usize>>> {
    if c1.n() != c2.n() || c1.graph().m() != c2.graph().m() {
        return Ok(None);
    }
    let start1 = DirectedEdge::new(0, c1.embedding().rotation(0)[0]);
    let seq = ensure_exploring_with(c1.embedding(), start1, opts.seed, &opts.explore)?;
    let (sigma1, labels1) = canon_with_labels(c1, c1.embedding(), start1, &seq)?;
    Ok(candidate_match(c1, &labels1, &sigma1, c2, &seq, opts, |phi| Some(phi.to_vec())).map(|(_, phi)| phi))
}

/// Collapses an expanded-level map to the originals: all copies of one
/// vertex must land on copies of one vertex.
fn collapse(c1: &ColoredGraph, c2: &ColoredGraph, phi: &[usize]) -> Option<Vec<usize>> {
    let n1 = c1.origins().iter().map(|o| o.0).max().map_or(0, |x| x + 1);
    let mut mapping = vec![usize::MAX; n1];
    for (v, &w) in phi.iter().enumerate() {
        let (i, j) = (c1.origin(v).0, c2.origin(w).0);
        if mapping[i] == usize::MAX {
            mapping[i] = j;
        } else if mapping[i] != j {
            return None;
        }
    }
    Some(mapping)
}

/// `true` iff `phi` is a bijection `V1 -> V2` with `(u, v)` an edge of `g1`
/// exactly when `(phi(u), phi(v))` is an edge of `g2`.
pub fn verify_mapping(g1: &Graph, g2: &Graph, phi: &[usize]) -> bool {
    g1.n() == g2.n()
        && g1.m() == g2.m()
        && check_permutation(phi, g2.n()).is_ok()
        && g1.edges().iter().all(|&(u, v)| g2.has_edge(phi[u], phi[v]))
}

//! Exploration walks over rotation systems.
//!
//! A walk is started on a directed edge `(v_-1, v_0)`. At each vertex the
//! arrival edge has some position `s` in the rotation; symbol `t` selects
//! the edge at position `(s + t) mod deg`. Only offsets relative to the
//! arrival edge matter, so where a rotation list "starts" is irrelevant.

use rayon::prelude::*;

use crate::corpus::{enumerate_connected_cubic, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{DirectedEdge, Embedding, Graph};
use crate::stream::{SeededStream, DOMAIN_SEQUENCE};

/// Alphabet size (the degree bound of the expanded graphs).
pub const DEGREE: u8 = 3;

/// How an [`ExplorationSequence`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Seeded { seed: u64, length: usize },
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationSequence {
    symbols: Vec<u8>,
    target_n: usize,
    provenance: Provenance,
}

impl ExplorationSequence {
    /// An explicit sequence; every symbol must be `< DEGREE` and the sequence
    /// non-empty.
    pub fn explicit(symbols: Vec<u8>, target_n: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidGraph("exploration sequence is empty".into()));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s >= DEGREE) {
            return Err(Error::InvalidGraph(format!("symbol {s} outside 0..{DEGREE}")));
        }
        Ok(Self {
            symbols,
            target_n,
            provenance: Provenance::Explicit,
        })
    }

    /// Parses a sequence file: one ASCII digit per symbol, whitespace ignored.
    pub fn parse(text: &str, target_n: usize) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for (i, ch) in text.char_indices() {
            if ch.is_ascii_whitespace() {
                continue;
            }
            match ch.to_digit(10) {
                Some(d) if d < DEGREE as u32 => symbols.push(d as u8),
                _ => {
                    return Err(Error::Parse {
                        line: 1 + text[..i].matches('\n').count(),
                        message: format!("invalid sequence symbol {ch:?}"),
                    })
                }
            }
        }
        Self::explicit(symbols, target_n)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn target_n(&self) -> usize {
        self.target_n
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// One ASCII digit per symbol.
    pub fn to_digits(&self) -> String {
        self.symbols.iter().map(|&s| char::from(b'0' + s)).collect()
    }
}

/// The infinite symbol stream behind seeded sequences for size `n_prime`.
pub fn symbol_stream(n_prime: usize, seed: u64) -> impl Iterator<Item = u8> {
    let mut s = SeededStream::new(DOMAIN_SEQUENCE, n_prime as u64, seed);
    std::iter::repeat_with(move || s.below(DEGREE as u32) as u8)
}

/// `8 * n^3 * ceil(log2(n + 1))`.
pub fn base_length(n_prime: usize) -> usize {
    let bits = (usize::BITS - n_prime.leading_zeros()) as usize; // ceil(log2(n+1))
    8 * n_prime.pow(3) * bits
}

/// Seeded pseudorandom sequence of [`base_length`] symbols.
///
/// # Panics
/// If `n_prime < 2`.
pub fn provide_sequence(n_prime: usize, seed: u64) -> ExplorationSequence {
    provide_sequence_with_length(n_prime, seed, base_length(n_prime))
}

pub fn provide_sequence_with_length(n_prime: usize, seed: u64, length: usize) -> ExplorationSequence {
    assert!(n_prime >= 2, "sequences are defined for n >= 2");
    assert!(length >= 1, "sequences are non-empty");
    ExplorationSequence {
        symbols: symbol_stream(n_prime, seed).take(length).collect(),
        target_n: n_prime,
        provenance: Provenance::Seeded { seed, length },
    }
}

/// Lazy walk: yields `v_-1`, `v_0`, then one vertex per consumed symbol.
#[derive(Debug, Clone)]
pub struct Walk<'a, I> {
    rho: &'a Embedding,
    prev: usize,
    cur: usize,
    emitted: u8,
    symbols: I,
}

impl<'a, I: Iterator<Item = u8>> Walk<'a, I> {
    pub fn new(rho: &'a Embedding, start: DirectedEdge, symbols: I) -> Result<Self> {
        if !rho.contains(start) || start.head >= rho.n() {
            return Err(Error::InvalidStartEdge {
                tail: start.tail,
                head: start.head,
            });
        }
        Ok(Self {
            rho,
            prev: start.tail,
            cur: start.head,
            emitted: 0,
            symbols,
        })
    }

    /// The directed edge most recently traversed.
    pub fn state(&self) -> DirectedEdge {
        DirectedEdge::new(self.prev, self.cur)
    }
}

impl<I: Iterator<Item = u8>> Iterator for Walk<'_, I> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self.emitted {
            0 => {
                self.emitted = 1;
                Some(self.prev)
            }
            1 => {
                self.emitted = 2;
                Some(self.cur)
            }
            _ => {
                let t = self.symbols.next()? as usize;
                let rot = self.rho.rotation(self.cur);
                let s = rot
                    .iter()
                    .position(|&x| x == self.prev)
                    .expect("arrival edge in rotation");
                let next = rot[(s + t) % rot.len()];
                self.prev = self.cur;
                self.cur = next;
                Some(next)
            }
        }
    }
}

/// The full vertex transcript `v_-1, v_0, ..., v_l` (length `l + 2`).
pub fn walk(rho: &Embedding, start: DirectedEdge, seq: &ExplorationSequence) -> Result<Vec<usize>> {
    Ok(Walk::new(rho, start, seq.symbols().iter().copied())?.collect())
}

/// Number of walk steps (symbols consumed) after which every vertex has been
/// seen, or `None` if the symbols run out first.
pub fn cover_steps<I>(rho: &Embedding, start: DirectedEdge, symbols: I) -> Result<Option<usize>>
where
    I: Iterator<Item = u8>,
{
    let n = rho.n();
    let mut seen = vec![false; n];
    let mut count = 0;
    for (i, v) in Walk::new(rho, start, symbols)?.enumerate() {
        if !std::mem::replace(&mut seen[v], true) {
            count += 1;
        }
        if count == n {
            return Ok(Some(i.saturating_sub(1)));
        }
    }
    Ok(None)
}

/// Whether the walk visits every vertex.
pub fn explores(rho: &Embedding, start: DirectedEdge, seq: &ExplorationSequence) -> Result<bool> {
    Ok(cover_steps(rho, start, seq.symbols().iter().copied())?.is_some())
}

/// Length policy for [`ensure_exploring_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceLength {
    /// Start from [`provide_sequence`] and extend in chunks until coverage.
    Base,
    /// Shortest prefix of the seeded stream whose walk covers the graph.
    CoverPrefix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExploreConfig {
    pub length: SequenceLength,
    /// Extension chunk for [`SequenceLength::Base`].
    pub chunk: usize,
    /// Give up after `cap_factor * base_length(n')` symbols.
    pub cap_factor: usize,
}

impl ExploreConfig {
    pub const fn base() -> Self {
        Self {
            length: SequenceLength::Base,
            chunk: 4096,
            cap_factor: 100,
        }
    }

    pub const fn cover_prefix() -> Self {
        Self {
            length: SequenceLength::CoverPrefix,
            chunk: 4096,
            cap_factor: 100,
        }
    }
}

impl Default for ExploreConfig {
    fn default() -> Self {
        Self::base()
    }
}

/// A seeded sequence guaranteed to explore `rho` from `start`, with the
/// default [`SequenceLength::Base`] policy.
pub fn ensure_exploring(rho: &Embedding, start: DirectedEdge, seed: u64) -> Result<ExplorationSequence> {
    ensure_exploring_with(rho, start, seed, &ExploreConfig::base())
}

pub fn ensure_exploring_with(
    rho: &Embedding,
    start: DirectedEdge,
    seed: u64,
    config: &ExploreConfig,
) -> Result<ExplorationSequence> {
    let n_prime = rho.n().max(2);
    let base = base_length(n_prime);
    let cap = base.saturating_mul(config.cap_factor);
    let steps = cover_steps(rho, start, symbol_stream(n_prime, seed).take(cap))?
        .ok_or(Error::Timeout { steps: cap })?;
    let length = match config.length {
        SequenceLength::CoverPrefix => steps.max(1),
        SequenceLength::Base if steps <= base => base,
        SequenceLength::Base => {
            let chunk = config.chunk.max(1);
            base + (steps - base).div_ceil(chunk) * chunk
        }
    };
    Ok(provide_sequence_with_length(n_prime, seed, length))
}

/// Outcome of an exhaustive [`verify_uxs`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UxsReport {
    pub graphs: usize,
    pub rotation_systems: usize,
    pub trials: usize,
    /// `(graph index, rotation system index, start edge)` of failed trials.
    pub failures: Vec<(usize, usize, DirectedEdge)>,
}

impl UxsReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Whether `seq` explores every connected simple 3-regular graph on at most
/// `n` vertices, under every rotation system, from every directed edge.
pub fn verify_uxs(n: usize, seq: &ExplorationSequence) -> Result<bool> {
    Ok(verify_uxs_report(n, seq)?.passed())
}

pub fn verify_uxs_report(n: usize, seq: &ExplorationSequence) -> Result<UxsReport> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::InfeasibleSize {
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let graphs = enumerate_connected_cubic(n)?;
    let mut report = UxsReport {
        graphs: graphs.len(),
        rotation_systems: 0,
        trials: 0,
        failures: Vec::new(),
    };
    for (gi, g) in graphs.iter().enumerate() {
        let systems = 1usize << g.n();
        let failures: Vec<(usize, usize, DirectedEdge)> = (0..systems)
            .into_par_iter()
            .flat_map_iter(|mask| {
                let rho = cubic_rotation(g, mask);
                g.directed_edges()
                    .filter(move |&e| !explores(&rho, e, seq).expect("edge of graph"))
                    .map(move |e| (gi, mask, e))
                    .collect::<Vec<_>>()
            })
            .collect();
        report.rotation_systems += systems;
        report.trials += systems * 2 * g.m();
        report.failures.extend(failures);
    }
    Ok(report)
}

/// Rotation system of a cubic graph: bit `v` of `mask` picks one of the two
/// cyclic orders at `v`.
fn cubic_rotation(g: &Graph, mask: usize) -> Embedding {
    Embedding::new(
        (0..g.n())
            .map(|v| {
                let nb = g.neighbors(v);
                if mask >> v & 1 == 0 {
                    nb.to_vec()
                } else {
                    vec![nb[0], nb[2], nb[1]]
                }
            })
            .collect(),
    )
}

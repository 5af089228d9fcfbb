//! Canonical codes and isomorphism testing for 3-connected planar graphs.
//!
//! The pipeline embeds a graph in the plane, expands every vertex into a
//! cycle to obtain an edge-coloured 3-regular graph, walks that graph with a
//! seeded exploration sequence and reads off a code from the
//! first-occurrence labelling. Two graphs are isomorphic exactly when the
//! code of the first matches the code of the second for one of its two
//! embeddings and one of its start edges.

pub mod canon;
pub mod cli;
pub mod connectivity;
pub mod corpus;
pub mod embed;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod regularize;
pub mod stream;
pub mod uxs;

pub use canon::{contract, CanonCode, CodeKind};
pub use connectivity::{is_3_connected, is_connected};
pub use embed::{embed_planar, mirror};
pub use error::{Error, Result};
pub use graph::{degree_sequence, euler_verify, trace_faces, DirectedEdge, Embedding, Graph};
pub use iso::{isomorphic, verify_mapping, IsoOptions, IsoResult, Verdict};
pub use regularize::{regularize, ColoredGraph, EdgeColor};
pub use uxs::{ensure_exploring, provide_sequence, ExplorationSequence};

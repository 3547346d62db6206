//! Berge-F containment and extremal constructions for hypergraphs.

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod detect;
pub mod embed;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod invariants;
pub mod matching;
pub mod oracle;
pub mod patterns;
pub mod projective;

pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition};
pub use hypergraph::Hypergraph;

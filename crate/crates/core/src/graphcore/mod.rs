//! Storage for bipartite graphs and triple systems, plus the edge-list format.

mod graph;
pub mod io;
mod triple;

use thiserror::Error;

pub use graph::{Graph, GraphMeta, LabelBlock};
pub use triple::{ImplicitTriples, TripleEdges, TripleSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(u64),
    #[error("self-loop at {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("edge {0}-{1} joins two vertices of the same part")]
    SamePart(u32, u32),
    #[error("triple {0:?} does not take one vertex from each part")]
    DegenerateTriple([u32; 3]),
    #[error("duplicate triple {0:?}")]
    DuplicateTriple([u32; 3]),
    #[error("unsupported number of parts: {0}")]
    PartCount(usize),
    #[error("{0} vertices exceed the index range")]
    TooLarge(usize),
    #[error("vertex {vertex} has degree {degree}, declared regular of degree {declared}")]
    Regularity { vertex: u32, degree: usize, declared: usize },
    #[error("labels of part {part} do not match its size")]
    LabelCount { part: usize },
    #[error("labels of part {part} are not strictly increasing at index {index}")]
    LabelOrder { part: usize, index: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

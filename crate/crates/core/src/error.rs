use thiserror::Error;

use crate::biclique::Biclique;
use crate::graph::{Edge, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0} appears more than once in the batch")]
    DuplicateInBatch(Edge),
    #[error("edge {0} is already present in the graph")]
    EdgePresent(Edge),
    #[error("edge {0} is not present in the graph")]
    EdgeAbsent(Edge),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("biclique {0} has an empty side")]
    EmptySide(Biclique),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StoreError {
    #[error("biclique {0} is already stored")]
    AlreadyPresent(Biclique),
    #[error("biclique {0} is not stored")]
    Missing(Biclique),
    #[error("malformed store dump at line {line}: {reason}")]
    Load { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Store(#[from] StoreError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {vertices} vertices, brute force is limited to {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("vertex set is not a subset of the host graph")]
    NotASubset,
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("subgraphs lie in different connected components")]
    DifferentComponents,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {order} exceeds the supported bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("{kind} graph is not defined for order {order}")]
    InvalidOrder { kind: &'static str, order: usize },
    #[error("partition labels {labels} do not match vertex count {vertices}")]
    PartitionSize { vertices: usize, labels: usize },
}

//! Twin-subgraph detection and core-semiperiphery-periphery (CSP) analysis
//! for small undirected networks.
//!
//! The crate provides:
//! - [`graph`]: bitset-backed simple graphs, partitions, metrics and
//!   standard constructions;
//! - [`canon`]: canonical forms for plain and partitioned graphs;
//! - [`twin`]: twin vertices and twin subgraphs (the F and T notions),
//!   their classification, and structural witnesses;
//! - [`csp`]: validation, twin reduction, decomposition and composition of
//!   core-semiperiphery-periphery networks;
//! - [`census`]: exhaustive small-graph censuses and exact CSP structure
//!   counts;
//! - [`trade`]: the bundled 1994 Asia-Africa-Oceania metal-manufactures
//!   trade network and the clustering pipeline that extracts CSP structures
//!   from it;
//! - [`io`]: edge-list / partition parsing and DOT export.

#![forbid(unsafe_code)]

pub mod canon;
pub mod census;
pub mod csp;
pub mod error;
pub mod graph;
pub mod io;
pub mod trade;
pub mod twin;

pub use canon::{canonical_form, canonical_form_partitioned, isomorphic, CanonicalForm};
pub use error::GraphError;
pub use graph::{Distance, Graph, PartitionedGraph, StandardKind, Vertex, VertexSet};
pub use twin::{TwinClass, TwinKind, TwinWitness};

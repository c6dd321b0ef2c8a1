//! Edge-list and partition file parsing, and DOT export.
//!
//! Edge lists are UTF-8 text, one edge per line as `u<TAB>v[<TAB>weight]`,
//! with `#` starting a comment line; vertex names are arbitrary tab-free
//! tokens (spaces allowed, so country names work). Partition files carry
//! `vertex<TAB>class` lines. DOT export paints periphery vertices white,
//! semiperiphery grey and core black.

use crate::csp::CspClass;
use crate::error::GraphError;
use crate::graph::{Graph, Vertex, MAX_ORDER};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("line {line}: expected `u<TAB>v[<TAB>weight]`, got `{text}`")]
    BadEdgeLine { line: usize, text: String },
    #[error("line {line}: duplicate edge {u} -- {v}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: self-loop on {0}", .name)]
    SelfLoop { line: usize, name: String },
    #[error("line {line}: bad weight `{text}`")]
    BadWeight { line: usize, text: String },
    #[error("line {line}: expected `vertex<TAB>class`, got `{text}`")]
    BadPartitionLine { line: usize, text: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` has no class label")]
    MissingLabel(String),
    #[error("line {line}: vertex `{name}` labeled twice")]
    DuplicateLabel { line: usize, name: String },
    #[error("edge list defines {0} vertices, more than the supported {MAX_ORDER}")]
    TooManyVertices(usize),
}

/// A graph whose vertices carry external names (first-appearance order).
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
}

impl NamedGraph {
    pub fn index_of(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }
}

/// Edge weights keyed by ordered index pairs.
pub type EdgeWeights = BTreeMap<(Vertex, Vertex), u64>;

/// Parses an edge list; edge weights (third column) are returned separately
/// keyed by ordered index pairs.
pub fn parse_edge_list(text: &str) -> Result<(NamedGraph, EdgeWeights), IoError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, Vertex> = BTreeMap::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut weights: BTreeMap<(Vertex, Vertex), u64> = BTreeMap::new();
    let mut seen: std::collections::BTreeSet<(Vertex, Vertex)> = Default::default();

    let intern = |name: &str, names: &mut Vec<String>,
                  index: &mut BTreeMap<String, Vertex>| -> Vertex {
        if let Some(&v) = index.get(name) {
            return v;
        }
        let v = names.len();
        names.push(name.to_string());
        index.insert(name.to_string(), v);
        v
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split('\t').map(str::trim).filter(|f| !f.is_empty()).collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(IoError::BadEdgeLine { line, text: trimmed.to_string() });
        }
        if fields[0] == fields[1] {
            return Err(IoError::SelfLoop { line, name: fields[0].to_string() });
        }
        let u = intern(fields[0], &mut names, &mut index);
        let v = intern(fields[1], &mut names, &mut index);
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(IoError::DuplicateEdge {
                line,
                u: fields[0].to_string(),
                v: fields[1].to_string(),
            });
        }
        if fields.len() == 3 {
            let w: u64 = fields[2]
                .replace(',', "")
                .parse()
                .map_err(|_| IoError::BadWeight { line, text: fields[2].to_string() })?;
            weights.insert(key, w);
        }
        edges.push(key);
    }
    if names.len() > MAX_ORDER {
        return Err(IoError::TooManyVertices(names.len()));
    }
    let graph = Graph::from_edges(names.len(), &edges)?;
    Ok((NamedGraph { graph, names }, weights))
}

/// Parses `vertex<TAB>class` lines into per-vertex labels for `named`.
pub fn parse_partition(text: &str, named: &NamedGraph) -> Result<Vec<String>, IoError> {
    let mut labels: Vec<Option<String>> = vec![None; named.graph.order()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split('\t').map(str::trim).filter(|f| !f.is_empty()).collect();
        if fields.len() != 2 {
            return Err(IoError::BadPartitionLine { line, text: trimmed.to_string() });
        }
        let v = named
            .index_of(fields[0])
            .ok_or_else(|| IoError::UnknownVertex(fields[0].to_string()))?;
        if labels[v].is_some() {
            return Err(IoError::DuplicateLabel { line, name: fields[0].to_string() });
        }
        labels[v] = Some(fields[1].to_string());
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| IoError::MissingLabel(named.name(v).to_string())))
        .collect()
}

/// Per-vertex CSP classes from parsed labels.
pub fn csp_classes(labels: &[String]) -> Result<Vec<CspClass>, crate::csp::CspError> {
    labels
        .iter()
        .map(|l| CspClass::from_name(l).ok_or_else(|| crate::csp::CspError::WrongLabel(l.clone())))
        .collect()
}

fn dot_quote(name: &str) -> String {
    format!("\"{}\"", name.replace('"', "\\\""))
}

/// DOT rendering. With classes, periphery vertices are filled white,
/// semiperiphery grey and core black.
pub fn to_dot(graph: &Graph, names: &[String], classes: Option<&[CspClass]>) -> String {
    let mut out = String::from("graph csp {\n");
    if classes.is_some() {
        out.push_str("  node [style=filled];\n");
    }
    for v in graph.vertices() {
        let name = dot_quote(&names[v]);
        match classes.map(|c| c[v]) {
            Some(CspClass::Core) => {
                out.push_str(&format!("  {name} [fillcolor=black fontcolor=white];\n"))
            }
            Some(CspClass::Semiperiphery) => {
                out.push_str(&format!("  {name} [fillcolor=grey];\n"))
            }
            Some(CspClass::Periphery) => {
                out.push_str(&format!("  {name} [fillcolor=white];\n"))
            }
            None => out.push_str(&format!("  {name};\n")),
        }
    }
    for (u, v) in graph.edges() {
        out.push_str(&format!("  {} -- {};\n", dot_quote(&names[u]), dot_quote(&names[v])));
    }
    out.push_str("}\n");
    out
}

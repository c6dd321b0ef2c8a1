//! Finite simple undirected graphs over dense vertex indices, with the
//! standard constructions and metrics everything else builds on.
//!
//! Vertices are `0..n` and adjacency is stored as one bitset row per vertex,
//! so neighborhood comparisons (the heart of the twin checks) are single
//! word operations. Graphs are immutable after construction.

use crate::error::GraphError;
use serde::Serialize;
use std::fmt;

/// Dense vertex index.
pub type Vertex = usize;

/// Largest supported graph order; adjacency rows and [`VertexSet`] are
/// single 64-bit words.
pub const MAX_ORDER: usize = 64;

/// A subset of the vertices of some host graph, stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < MAX_ORDER && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        debug_assert!(v < MAX_ORDER);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Vertices in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn min_vertex(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut mask = 0u64;
        for v in iter {
            debug_assert!(v < MAX_ORDER);
            mask |= 1u64 << v;
        }
        VertexSet(mask)
    }
}

/// Sorted-vertex-list order: `{0,5}` precedes `{1,2}`. Used wherever a
/// deterministic representative has to be picked.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.to_vec().cmp(&other.to_vec())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Length of a shortest path, or an explicit marker when none exists.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// The named small-graph families.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum StandardKind {
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
    Null,
}

/// Finite simple undirected graph: no self-loops, no parallel edges,
/// symmetric adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderBound { order: n, bound: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        v < self.n
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn check_subset(&self, set: VertexSet) -> Result<(), GraphError> {
        if set.is_subset_of(self.vertex_set()) {
            Ok(())
        } else {
            Err(GraphError::NotASubset)
        }
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    /// Open neighborhood as a raw bitmask row.
    pub fn row(&self, u: Vertex) -> u64 {
        self.adj[u]
    }

    /// 𝒩(u): the open neighborhood.
    pub fn neighbors(&self, u: Vertex) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        Ok(VertexSet(self.adj[u]))
    }

    /// 𝒩\[u\] = 𝒩(u) ∪ {u}.
    pub fn closed_neighbors(&self, u: Vertex) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        Ok(VertexSet(self.adj[u] | (1u64 << u)))
    }

    pub fn degree(&self, u: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        Ok(self.adj[u].count_ones() as usize)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `u` to every vertex.
    pub fn distances_from(&self, u: Vertex) -> Result<Vec<Distance>, GraphError> {
        self.check_vertex(u)?;
        let mut dist = vec![Distance::Unreachable; self.n];
        dist[u] = Distance::Finite(0);
        let mut frontier = 1u64 << u;
        let mut seen = frontier;
        let mut d = 0usize;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            let mut nr = next;
            while nr != 0 {
                let v = nr.trailing_zeros() as usize;
                nr &= nr - 1;
                dist[v] = Distance::Finite(d);
            }
            frontier = next;
        }
        Ok(dist)
    }

    /// Shortest-path length between two vertices; 0 iff `u == v`.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Distance, GraphError> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    /// min { d(a, b) : a ∈ `a`, b ∈ `b` } for disjoint sets in one component.
    pub fn subgraph_distance(&self, a: VertexSet, b: VertexSet) -> Result<usize, GraphError> {
        self.check_subset(a)?;
        self.check_subset(b)?;
        if !a.is_disjoint(b) {
            return Err(GraphError::OverlappingSets);
        }
        if a.is_empty() || b.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut best: Option<usize> = None;
        for u in a.iter() {
            let dist = self.distances_from(u)?;
            for v in b.iter() {
                if let Distance::Finite(d) = dist[v] {
                    best = Some(best.map_or(d, |c| c.min(d)));
                }
            }
        }
        best.ok_or(GraphError::DifferentComponents)
    }

    /// Maximum distance from `u` to any other vertex; requires a connected graph.
    pub fn eccentricity(&self, u: Vertex) -> Result<usize, GraphError> {
        let dist = self.distances_from(u)?;
        let mut ecc = 0;
        for d in dist {
            match d {
                Distance::Finite(k) => ecc = ecc.max(k),
                Distance::Unreachable => return Err(GraphError::Disconnected),
            }
        }
        Ok(ecc)
    }

    /// Edge-complement; an involution.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).mask();
        let adj = (0..self.n)
            .map(|u| (full & !self.adj[u]) & !(1u64 << u))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union of `self` and `other` plus every cross edge; the second
    /// graph's vertices are relabeled to `self.order()..`, which keeps the
    /// vertex sets disjoint by construction.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderBound { order: n, bound: MAX_ORDER });
        }
        let left = VertexSet::full(self.n).mask();
        let right = VertexSet::full(n).mask() & !left;
        let mut adj = Vec::with_capacity(n);
        for u in 0..self.n {
            adj.push(self.adj[u] | right);
        }
        for u in 0..other.n {
            adj.push((other.adj[u] << self.n) | left);
        }
        Ok(Graph { n, adj })
    }

    /// Disjoint union without cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderBound { order: n, bound: MAX_ORDER });
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        for u in 0..other.n {
            adj.push(other.adj[u] << self.n);
        }
        Ok(Graph { n, adj })
    }

    /// The named graph families. Cycles need `n >= 3`; the null graph is `K_0`.
    pub fn standard(kind: StandardKind, n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderBound { order: n, bound: MAX_ORDER });
        }
        match kind {
            StandardKind::Null => Graph::empty(0),
            StandardKind::Empty => Graph::empty(n),
            StandardKind::Complete => {
                let full = VertexSet::full(n).mask();
                let adj = (0..n).map(|u| full & !(1u64 << u)).collect();
                Ok(Graph { n, adj })
            }
            StandardKind::Path => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            StandardKind::Cycle => {
                if n < 3 {
                    return Err(GraphError::InvalidOrder { kind: "cycle", order: n });
                }
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((n - 1, 0));
                Graph::from_edges(n, &edges)
            }
            StandardKind::Star => {
                if n < 1 {
                    return Err(GraphError::InvalidOrder { kind: "star", order: n });
                }
                let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
                Graph::from_edges(n, &edges)
            }
        }
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for u in 0..self.n {
            if seen & (1u64 << u) != 0 {
                continue;
            }
            let comp = self.component_of(u, self.vertex_set());
            seen |= comp.mask();
            out.push(comp);
        }
        out
    }

    /// Connected component of `u` within the induced subgraph on `within`.
    pub fn component_of(&self, u: Vertex, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(u));
        let mask = within.mask();
        let mut comp = 1u64 << u;
        loop {
            let mut grown = comp;
            let mut rest = comp;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= self.adj[v] & mask;
            }
            if grown == comp {
                return VertexSet(comp);
            }
            comp = grown;
        }
    }

    /// Components of the induced subgraph on `within`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for u in within.iter() {
            if seen & (1u64 << u) != 0 {
                continue;
            }
            let comp = self.component_of(u, within);
            seen |= comp.mask();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Induced subgraph on `set`, re-indexed densely; the second return value
    /// maps new indices back to the original vertices (ascending order).
    pub fn induced(&self, set: VertexSet) -> Result<(Graph, Vec<Vertex>), GraphError> {
        self.check_subset(set)?;
        let verts = set.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for w in VertexSet(self.adj[v] & set.mask()).iter() {
                adj[i] |= 1u64 << index[w];
            }
        }
        Ok((Graph { n: verts.len(), adj }, verts))
    }

    /// Relabels vertices: new index `perm[v]` hosts old vertex `v`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                adj[perm[u]] |= 1u64 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// True iff every vertex of `a` is adjacent to every vertex of `b`
    /// (vacuously true when either is empty; the sets must be disjoint).
    pub fn fully_connected(&self, a: VertexSet, b: VertexSet) -> bool {
        debug_assert!(a.is_disjoint(b));
        a.iter().all(|u| b.is_subset_of(VertexSet(self.adj[u])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A graph together with a total vertex → class labeling.
#[derive(Clone, Debug)]
pub struct PartitionedGraph {
    graph: Graph,
    class_of: Vec<usize>,
    class_names: Vec<String>,
}

impl PartitionedGraph {
    /// Builds a partitioned graph from per-vertex class names. Class indices
    /// are assigned by sorted name; every class is non-empty by construction.
    pub fn new(graph: Graph, labels: &[String]) -> Result<Self, GraphError> {
        if labels.len() != graph.order() {
            return Err(GraphError::PartitionSize {
                vertices: graph.order(),
                labels: labels.len(),
            });
        }
        let mut class_names: Vec<String> = labels.to_vec();
        class_names.sort();
        class_names.dedup();
        let class_of = labels
            .iter()
            .map(|l| class_names.binary_search(l).expect("label present"))
            .collect();
        Ok(PartitionedGraph { graph, class_of, class_names })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn class_count(&self) -> usize {
        self.class_names.len()
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn class_index(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    pub fn class_indices(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_name(&self, v: Vertex) -> &str {
        &self.class_names[self.class_of[v]]
    }

    pub fn class_members(&self, class: usize) -> VertexSet {
        VertexSet::from_iter(
            (0..self.graph.order()).filter(|&v| self.class_of[v] == class),
        )
    }

    /// Quotient graph (supergraph): one vertex per class, in class-index
    /// order; classes adjacent iff some cross edge exists. No self-loops.
    pub fn quotient(&self) -> Graph {
        let k = self.class_names.len();
        let mut adj = vec![0u64; k];
        for (u, v) in self.graph.edges() {
            let (cu, cv) = (self.class_of[u], self.class_of[v]);
            if cu != cv {
                adj[cu] |= 1u64 << cv;
                adj[cv] |= 1u64 << cu;
            }
        }
        Graph { n: k, adj }
    }
}

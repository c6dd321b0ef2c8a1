//! Canonical forms for small plain and partitioned graphs.
//!
//! The form is the lexicographically smallest adjacency bit-sequence over
//! all vertex permutations (class-preserving permutations when a partition
//! is supplied), found by backtracking with prefix and twin pruning. Pairs
//! are ordered incrementally, pair (i, j) with i < j at position
//! j(j-1)/2 + i, so that placing one more vertex appends a contiguous run
//! of bits. Equal forms characterize (partitioned) isomorphism. Intended
//! for desk-scale graphs; the default order bound is 10.

use crate::error::GraphError;
use crate::graph::{Graph, PartitionedGraph, Vertex};
use std::cmp::Ordering;
use std::fmt;

/// Default maximum order accepted by the canonicalizer.
pub const DEFAULT_CANON_BOUND: usize = 10;

/// Hard representation limit: C(11, 2) = 55 pair bits fit in a u64.
const HARD_BOUND: usize = 11;

/// Canonical certificate of a (partitioned) graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct CanonicalForm {
    order: usize,
    bits: u64,
    /// Class names with their sizes, in canonical class order; empty for
    /// plain graphs.
    class_sizes: Vec<(String, usize)>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn class_sizes(&self) -> &[(String, usize)] {
        &self.class_sizes
    }

    /// Rebuilds the canonical representative graph (vertices in canonical
    /// order) together with its per-vertex class names.
    pub fn to_graph(&self) -> (Graph, Vec<String>) {
        let mut edges = Vec::new();
        for j in 1..self.order {
            for i in 0..j {
                if self.bits & (1u64 << pair_position(i, j)) != 0 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(self.order, &edges).expect("canonical bits decode");
        let mut classes = Vec::with_capacity(self.order);
        if self.class_sizes.is_empty() {
            classes.resize(self.order, String::new());
        } else {
            for (name, count) in &self.class_sizes {
                for _ in 0..*count {
                    classes.push(name.clone());
                }
            }
        }
        (g, classes)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.to_graph().0.edges()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}#{:x}", self.order, self.bits)?;
        for (name, count) in &self.class_sizes {
            write!(f, ";{name}:{count}")?;
        }
        Ok(())
    }
}

fn pair_position(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Lexicographic comparison of the first `len` bits (bit 0 first).
fn lex_cmp(a: u64, b: u64, len: usize) -> Ordering {
    let mask = if len >= 64 { u64::MAX } else { (1u64 << len) - 1 };
    let diff = (a ^ b) & mask;
    if diff == 0 {
        Ordering::Equal
    } else if a & (diff & diff.wrapping_neg()) == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

struct Search<'a> {
    g: &'a Graph,
    class_of: &'a [usize],
    slot_class: Vec<usize>,
    slots: Vec<Vertex>,
    used: u64,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, prefix: u64) {
        let n = self.g.order();
        if depth == n {
            if self.best.is_none_or(|b| lex_cmp(prefix, b, n * (n - 1) / 2) == Ordering::Less) {
                self.best = Some(prefix);
            }
            return;
        }
        let base = depth * depth.saturating_sub(1) / 2;
        let want = self.slot_class[depth];
        // (candidate, its appended bit segment)
        let mut tried: Vec<(Vertex, u64)> = Vec::new();
        for v in 0..n {
            if self.used & (1u64 << v) != 0 || self.class_of[v] != want {
                continue;
            }
            let mut seg = 0u64;
            for (i, &s) in self.slots[..depth].iter().enumerate() {
                if self.g.adjacent(v, s) {
                    seg |= 1u64 << i;
                }
            }
            // Twin pruning: a candidate whose residual neighborhood matches an
            // already-tried one of the same class spans an identical subtree.
            let skip = tried.iter().any(|&(u, useg)| {
                useg == seg && {
                    let drop = (1u64 << u) | (1u64 << v);
                    self.g.row(u) & !drop == self.g.row(v) & !drop
                }
            });
            tried.push((v, seg));
            if skip {
                continue;
            }
            let prefix2 = prefix | (seg << base);
            if let Some(b) = self.best {
                if lex_cmp(prefix2, b, base + depth) == Ordering::Greater {
                    continue;
                }
            }
            self.slots[depth] = v;
            self.used |= 1u64 << v;
            self.run(depth + 1, prefix2);
            self.used &= !(1u64 << v);
        }
    }
}

fn minimize(g: &Graph, class_of: &[usize], class_count: usize) -> u64 {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut slot_class = Vec::with_capacity(n);
    for c in 0..class_count {
        let count = class_of.iter().filter(|&&cv| cv == c).count();
        slot_class.extend(std::iter::repeat_n(c, count));
    }
    debug_assert_eq!(slot_class.len(), n);
    let mut search = Search {
        g,
        class_of,
        slot_class,
        slots: vec![0; n],
        used: 0,
        best: None,
    };
    search.run(0, 0);
    search.best.unwrap_or(0)
}

fn check_bound(order: usize, bound: usize) -> Result<(), GraphError> {
    let bound = bound.min(HARD_BOUND);
    if order > bound {
        return Err(GraphError::OrderBound { order, bound });
    }
    Ok(())
}

/// Canonical form of a plain graph, with a caller-chosen order bound.
pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<CanonicalForm, GraphError> {
    check_bound(g.order(), bound)?;
    let class_of = vec![0usize; g.order()];
    Ok(CanonicalForm {
        order: g.order(),
        bits: minimize(g, &class_of, 1),
        class_sizes: Vec::new(),
    })
}

/// Canonical form of a plain graph (order bound 10).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_form_bounded(g, DEFAULT_CANON_BOUND)
}

/// Canonical form under class-preserving permutations. Classes are ordered
/// by their (sorted, unique) names, which `PartitionedGraph` guarantees.
pub fn canonical_form_partitioned(pg: &PartitionedGraph) -> Result<CanonicalForm, GraphError> {
    check_bound(pg.graph().order(), DEFAULT_CANON_BOUND)?;
    let class_sizes = pg
        .class_names()
        .iter()
        .enumerate()
        .map(|(c, name)| (name.clone(), pg.class_members(c).len()))
        .collect();
    Ok(CanonicalForm {
        order: pg.graph().order(),
        bits: minimize(pg.graph(), pg.class_indices(), pg.class_count()),
        class_sizes,
    })
}

/// Plain-graph isomorphism via canonical forms. Panics above the hard
/// representation bound; meant for desk-scale graphs.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return false;
    }
    let c1 = canonical_form_bounded(g1, HARD_BOUND).expect("order within hard bound");
    let c2 = canonical_form_bounded(g2, HARD_BOUND).expect("order within hard bound");
    c1 == c2
}

/// Partitioned isomorphism (classes must match by name and the map must
/// keep them invariant).
pub fn isomorphic_partitioned(a: &PartitionedGraph, b: &PartitionedGraph) -> bool {
    if a.graph().order() != b.graph().order() {
        return false;
    }
    match (canonical_form_partitioned(a), canonical_form_partitioned(b)) {
        (Ok(ca), Ok(cb)) => ca == cb,
        _ => false,
    }
}

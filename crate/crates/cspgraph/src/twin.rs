//! Twin vertices and twin subgraphs.
//!
//! Two induced subgraphs are F-twins when an isomorphism φ between them
//! matches external neighborhoods vertex for vertex:
//! 𝒩(u) − V1 = 𝒩(φ(u)) − V2. T-twins are the dual notion with
//! 𝒩(u) ∪ V1 = 𝒩(φ(u)) ∪ V2. For singletons these reduce to the familiar
//! false-twin / true-twin vertex relations. Both notions classify the set
//! of isomorphic induced copies of a pattern into equivalence classes.
//!
//! The T-twin checker is implemented directly from its defining identity,
//! not via complementation, so that the F/T duality stays an independently
//! testable fact.

use crate::canon;
use crate::error::GraphError;
use crate::graph::{Graph, Vertex, VertexSet};
use thiserror::Error;

/// Which twin notion: `F` generalizes false twins, `T` true twins.
#[derive(Copy, Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub enum TwinKind {
    F,
    T,
}

impl TwinKind {
    pub fn letter(self) -> &'static str {
        match self {
            TwinKind::F => "f",
            TwinKind::T => "t",
        }
    }
}

/// A certified twin pair: the two vertex sets and the bijection φ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinWitness {
    pub kind: TwinKind,
    pub v1: VertexSet,
    pub v2: VertexSet,
    /// (u, φ(u)) pairs sorted by u.
    phi: Vec<(Vertex, Vertex)>,
}

impl TwinWitness {
    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.phi
    }

    pub fn map(&self, u: Vertex) -> Option<Vertex> {
        self.phi
            .binary_search_by_key(&u, |&(a, _)| a)
            .ok()
            .map(|i| self.phi[i].1)
    }

    pub fn inverse_map(&self, w: Vertex) -> Option<Vertex> {
        self.phi.iter().find(|&&(_, b)| b == w).map(|&(a, _)| a)
    }

    /// ζ = other ∘ self, defined when `self.v2 == other.v1`.
    pub fn compose(&self, other: &TwinWitness) -> Option<TwinWitness> {
        if self.v2 != other.v1 || self.kind != other.kind {
            return None;
        }
        let phi = self
            .phi
            .iter()
            .map(|&(u, w)| Some((u, other.map(w)?)))
            .collect::<Option<Vec<_>>>()?;
        Some(TwinWitness {
            kind: self.kind,
            v1: self.v1,
            v2: other.v2,
            phi,
        })
    }

    /// Checks the defining identities of this witness against `g`; used by
    /// tests to certify witnesses produced by other routes.
    pub fn verify(&self, g: &Graph) -> bool {
        verify_witness(g, self, None)
    }
}

pub(crate) fn verify_witness(g: &Graph, w: &TwinWitness, classes: Option<&[usize]>) -> bool {
    if w.phi.len() != w.v1.len() || w.v1.len() != w.v2.len() {
        return false;
    }
    let mut image = VertexSet::EMPTY;
    for &(u, fu) in &w.phi {
        if !w.v1.contains(u) || !w.v2.contains(fu) {
            return false;
        }
        if let Some(cls) = classes {
            if cls[u] != cls[fu] {
                return false;
            }
        }
        image.insert(fu);
        let ok = match w.kind {
            TwinKind::F => {
                g.row(u) & !w.v1.mask() == g.row(fu) & !w.v2.mask()
            }
            TwinKind::T => {
                g.row(u) | w.v1.mask() == g.row(fu) | w.v2.mask()
            }
        };
        if !ok {
            return false;
        }
        for &(x, fx) in &w.phi {
            if g.adjacent(u, x) != g.adjacent(fu, fx) {
                return false;
            }
        }
    }
    image == w.v2
}

/// One equivalence class of pairwise twins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClass {
    pub kind: TwinKind,
    /// Members in sorted-vertex-list order; the first is the representative.
    pub members: Vec<VertexSet>,
}

impl TwinClass {
    pub fn representative(&self) -> VertexSet {
        self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Searches for a witness making (v1, v2) a twin pair of the given kind.
/// `classes`, when given, restricts φ to class-preserving maps.
///
/// Candidates are bucketed by external-neighborhood signature and tried in
/// vertex-index order, so the returned witness is deterministic.
pub fn check_twin(
    g: &Graph,
    kind: TwinKind,
    v1: VertexSet,
    v2: VertexSet,
    classes: Option<&[usize]>,
) -> Result<Option<TwinWitness>, GraphError> {
    g.check_subset(v1)?;
    g.check_subset(v2)?;
    if v1.len() != v2.len() {
        return Ok(None);
    }
    if v1 == v2 {
        let phi = v1.iter().map(|u| (u, u)).collect();
        return Ok(Some(TwinWitness { kind, v1, v2, phi }));
    }

    let signature = |u: Vertex, home: VertexSet| -> u64 {
        match kind {
            TwinKind::F => g.row(u) & !home.mask(),
            TwinKind::T => g.row(u) | home.mask(),
        }
    };

    let sources = v1.to_vec();
    let targets = v2.to_vec();
    let source_sigs: Vec<u64> = sources.iter().map(|&u| signature(u, v1)).collect();
    let target_sigs: Vec<u64> = targets.iter().map(|&w| signature(w, v2)).collect();

    // Per-source candidate lists; a multiset mismatch dies here.
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(sources.len());
    for (i, &u) in sources.iter().enumerate() {
        let mut list = Vec::new();
        for (j, &w) in targets.iter().enumerate() {
            if source_sigs[i] != target_sigs[j] {
                continue;
            }
            if let Some(cls) = classes {
                if cls[u] != cls[w] {
                    continue;
                }
            }
            list.push(j);
        }
        if list.is_empty() {
            return Ok(None);
        }
        candidates.push(list);
    }

    fn assign(
        g: &Graph,
        sources: &[Vertex],
        targets: &[Vertex],
        candidates: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let depth = chosen.len();
        if depth == sources.len() {
            return true;
        }
        let u = sources[depth];
        for &j in &candidates[depth] {
            if used[j] {
                continue;
            }
            let w = targets[j];
            let consistent = chosen.iter().enumerate().all(|(i, &cj)| {
                g.adjacent(u, sources[i]) == g.adjacent(w, targets[cj])
            });
            if !consistent {
                continue;
            }
            chosen.push(j);
            used[j] = true;
            if assign(g, sources, targets, candidates, chosen, used) {
                return true;
            }
            used[j] = false;
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::with_capacity(sources.len());
    let mut used = vec![false; targets.len()];
    if assign(g, &sources, &targets, &candidates, &mut chosen, &mut used) {
        let phi = sources
            .iter()
            .zip(chosen.iter())
            .map(|(&u, &j)| (u, targets[j]))
            .collect();
        let witness = TwinWitness { kind, v1, v2, phi };
        debug_assert!(verify_witness(g, &witness, classes));
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

/// F-twin check: isomorphic induced subgraphs with identical external
/// neighborhoods, 𝒩(u) − V1 = 𝒩(φ(u)) − V2.
pub fn check_f_twin(
    g: &Graph,
    v1: VertexSet,
    v2: VertexSet,
) -> Result<Option<TwinWitness>, GraphError> {
    check_twin(g, TwinKind::F, v1, v2, None)
}

/// T-twin check: the dual identity 𝒩(u) ∪ V1 = 𝒩(φ(u)) ∪ V2.
pub fn check_t_twin(
    g: &Graph,
    v1: VertexSet,
    v2: VertexSet,
) -> Result<Option<TwinWitness>, GraphError> {
    check_twin(g, TwinKind::T, v1, v2, None)
}

fn vertex_classes_by<F: Fn(Vertex) -> u64>(g: &Graph, kind: TwinKind, key: F) -> Vec<TwinClass> {
    let mut groups: std::collections::BTreeMap<u64, Vec<VertexSet>> = Default::default();
    for v in g.vertices() {
        groups.entry(key(v)).or_default().push(VertexSet::singleton(v));
    }
    let mut out: Vec<TwinClass> = groups
        .into_values()
        .filter(|members| members.len() >= 2)
        .map(|members| TwinClass { kind, members })
        .collect();
    out.sort_by_key(|c| c.representative());
    out
}

/// Classes of false-twin vertices (𝒩(u) = 𝒩(v)); singleton classes omitted.
pub fn false_twin_vertices(g: &Graph) -> Vec<TwinClass> {
    vertex_classes_by(g, TwinKind::F, |v| g.row(v))
}

/// Classes of true-twin vertices (𝒩\[u\] = 𝒩\[v\]); singleton classes omitted.
pub fn true_twin_vertices(g: &Graph) -> Vec<TwinClass> {
    vertex_classes_by(g, TwinKind::T, |v| g.row(v) | (1u64 << v))
}

fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(VertexSet::from_iter(idx.iter().copied()));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All induced copies of `pattern` in `g`, in sorted-vertex-list order.
pub fn induced_copies(g: &Graph, pattern: &Graph) -> Result<Vec<VertexSet>, GraphError> {
    let k = pattern.order();
    if k == 0 || k > g.order() {
        return Ok(Vec::new());
    }
    let pattern_form = canon::canonical_form_bounded(pattern, k.max(1))?;
    let mut pattern_degrees: Vec<usize> = pattern.vertices().map(|v| pattern.degree(v).unwrap()).collect();
    pattern_degrees.sort_unstable();
    let mut out = Vec::new();
    for set in subsets_of_size(g.order(), k) {
        let (h, _) = g.induced(set)?;
        let mut degrees: Vec<usize> = h.vertices().map(|v| h.degree(v).unwrap()).collect();
        degrees.sort_unstable();
        if degrees != pattern_degrees {
            continue;
        }
        if canon::canonical_form_bounded(&h, k)? == pattern_form {
            out.push(set);
        }
    }
    Ok(out)
}

/// Partitions the induced copies of `pattern` into twin classes of the
/// given kind. Pairwise checks close under a union-find; transitivity of
/// the relation makes that sound. Singleton classes are kept.
#[allow(clippy::needless_range_loop)] // i, j index the union-find
pub fn twin_classes(g: &Graph, kind: TwinKind, pattern: &Graph) -> Result<Vec<TwinClass>, GraphError> {
    let copies = induced_copies(g, pattern)?;
    let m = copies.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    // Sorted external-signature multisets cut non-twin pairs cheaply.
    let sig_of = |set: VertexSet| -> Vec<u64> {
        let mut sigs: Vec<u64> = match kind {
            TwinKind::F => set.iter().map(|u| g.row(u) & !set.mask()).collect(),
            TwinKind::T => set.iter().map(|u| g.row(u) | set.mask()).collect(),
        };
        sigs.sort_unstable();
        sigs
    };
    let sigs: Vec<Vec<u64>> = copies.iter().map(|&c| sig_of(c)).collect();
    for i in 0..m {
        for j in i + 1..m {
            if sigs[i] != sigs[j] || find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            if check_twin(g, kind, copies[i], copies[j], None)?.is_some() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<VertexSet>> = Default::default();
    for i in 0..m {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(copies[i]);
    }
    let mut out: Vec<TwinClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort();
            TwinClass { kind, members }
        })
        .collect();
    out.sort_by_key(|c| c.representative());
    Ok(out)
}

/// True iff some pair of distinct equal-order induced subgraphs of order
/// ≤ `max_order` (all orders up to n−1 when `None`) is a twin pair.
/// Exhaustive over subset pairs; meant for desk-scale graphs.
pub fn has_proper_twin(g: &Graph, kind: TwinKind, max_order: Option<usize>) -> bool {
    let n = g.order();
    if n == 0 {
        return false;
    }
    let cap = max_order.unwrap_or(n - 1).min(n.saturating_sub(1));
    for k in 1..=cap {
        let subsets = subsets_of_size(n, k);
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if check_twin(g, kind, subsets[i], subsets[j], None)
                    .expect("subsets of g")
                    .is_some()
                {
                    return true;
                }
            }
        }
    }
    false
}

#[derive(Debug, Error)]
pub enum TwinError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex set {0:?} does not induce an edge")]
    NotAnEdge(VertexSet),
    #[error("({0:?}, {1:?}) is not a proper F-twin pair")]
    NotTwinPair(VertexSet, VertexSet),
    #[error("the two edge pairs belong to the same F-twin class")]
    SameClass,
    #[error("the first edges of the two pairs share no vertex")]
    NoSharedVertex,
    #[error("the configured vertices do not induce a 6-cycle")]
    NotInducedCycle,
}

/// Given two proper F-twin edge pairs (e1, e2) and (f1, f2) from different
/// twin classes with e1 ∩ f1 ≠ ∅, returns the six vertices
/// {u, v, w, φ(v), φ(u), ψ(v)} which induce a 6-cycle.
pub fn find_c6_witness(
    g: &Graph,
    e1: VertexSet,
    e2: VertexSet,
    f1: VertexSet,
    f2: VertexSet,
) -> Result<VertexSet, TwinError> {
    for set in [e1, e2, f1, f2] {
        g.check_subset(set)?;
        let ok = set.len() == 2 && {
            let vs = set.to_vec();
            g.adjacent(vs[0], vs[1])
        };
        if !ok {
            return Err(TwinError::NotAnEdge(set));
        }
    }
    let phi = check_f_twin(g, e1, e2)?
        .filter(|_| e1 != e2)
        .ok_or(TwinError::NotTwinPair(e1, e2))?;
    let psi = check_f_twin(g, f1, f2)?
        .filter(|_| f1 != f2)
        .ok_or(TwinError::NotTwinPair(f1, f2))?;
    if check_f_twin(g, e1, f1)?.is_some() {
        return Err(TwinError::SameClass);
    }
    let shared = e1.intersection(f1);
    let v = shared.min_vertex().ok_or(TwinError::NoSharedVertex)?;
    let u = e1.minus(shared).min_vertex().ok_or(TwinError::NoSharedVertex)?;
    let w = f1.minus(shared).min_vertex().ok_or(TwinError::NoSharedVertex)?;
    let cycle = VertexSet::from_iter([
        u,
        v,
        w,
        phi.map(v).expect("v in e1"),
        phi.map(u).expect("u in e1"),
        psi.map(v).expect("v in f1"),
    ]);
    let (induced, _) = g.induced(cycle)?;
    let c6 = Graph::standard(crate::graph::StandardKind::Cycle, 6).expect("C6");
    if cycle.len() != 6 || !canon::isomorphic(&induced, &c6) {
        return Err(TwinError::NotInducedCycle);
    }
    Ok(cycle)
}

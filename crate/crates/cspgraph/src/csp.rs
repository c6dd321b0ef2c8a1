//! Core-semiperiphery-periphery (CSP) networks and structures.
//!
//! A CSP network is a connected 3-partitioned graph whose cores have
//! eccentricity at most two, whose semiperiphery vertices are adjacent to a
//! non-adjacent core/periphery pair, and whose periphery vertices have
//! degree one. A CSP structure additionally has no proper true-twin core
//! pair and no proper F-twin pair of semiperiphery-periphery subgraphs,
//! where twin maps must keep the classes invariant.
//!
//! [`reduce`] collapses twin substructures of a CSP network until a CSP
//! structure remains; [`decompose`] and [`compose`] realize the structural
//! characterization (C0 complete and joined to C1, the core joined to S,
//! peripheries attached one-to-one to C0 and S vertices).

use crate::canon;
use crate::error::GraphError;
use crate::graph::{Graph, PartitionedGraph, Vertex, VertexSet};
use crate::twin::{self, TwinKind, TwinWitness};
use serde::Serialize;
use thiserror::Error;

/// The three CSP vertex classes.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum CspClass {
    #[serde(rename = "core")]
    Core,
    #[serde(rename = "semiperiphery")]
    Semiperiphery,
    #[serde(rename = "periphery")]
    Periphery,
}

impl CspClass {
    pub fn name(self) -> &'static str {
        match self {
            CspClass::Core => "core",
            CspClass::Semiperiphery => "semiperiphery",
            CspClass::Periphery => "periphery",
        }
    }

    pub fn from_name(name: &str) -> Option<CspClass> {
        match name {
            "core" => Some(CspClass::Core),
            "semiperiphery" => Some(CspClass::Semiperiphery),
            "periphery" => Some(CspClass::Periphery),
            _ => None,
        }
    }
}

/// Largest semiperiphery-periphery component accepted by the exhaustive
/// twin scans.
pub const TWIN_SCAN_BOUND: usize = 12;

#[derive(Debug, Error)]
pub enum CspError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown CSP class label `{0}` (expected core, semiperiphery or periphery)")]
    WrongLabel(String),
    #[error("label count {labels} does not match vertex count {vertices}")]
    LabelCount { vertices: usize, labels: usize },
    #[error("input is not a CSP network")]
    NotANetwork(Box<CspValidationReport>),
    #[error("input is not a CSP structure")]
    NotAStructure(Box<CspValidationReport>),
    #[error("composition requires a core part without true-twin vertices")]
    C1HasTrueTwins,
    #[error("composition requires a semiperiphery part without F-twin subgraphs")]
    SHasFTwins,
    #[error("composition requires at least one core and one semiperiphery vertex")]
    EmptyPart,
    #[error("decomposition clause failed: {0}")]
    TheoremClause(&'static str),
    #[error("semiperiphery-periphery component of order {order} exceeds the twin-scan bound {bound}")]
    TwinScanBound { order: usize, bound: usize },
}

/// One reason a labeled graph fails the CSP conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CspViolation {
    Disconnected,
    EmptyClass(CspClass),
    /// Core vertex with eccentricity above two (`None` = unreachable vertex).
    CoreEccentricity {
        vertex: Vertex,
        eccentricity: Option<usize>,
    },
    /// Semiperiphery vertex with no non-adjacent core/periphery pair among
    /// its neighbors.
    SemiperipheryNotIntermediary { vertex: Vertex },
    PeripheryDegree { vertex: Vertex, degree: usize },
    /// A class of two or more core vertices that are pairwise true twins.
    TrueTwinCores { members: Vec<Vertex> },
    /// A class of two or more semiperiphery-periphery subgraphs that are
    /// pairwise partition-preserving F-twins.
    FTwinSubgraphs { members: Vec<Vec<Vertex>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspValidationReport {
    pub is_csp_network: bool,
    pub is_csp_structure: bool,
    pub violations: Vec<CspViolation>,
}

fn check_labels(g: &Graph, classes: &[CspClass]) -> Result<(), CspError> {
    if classes.len() != g.order() {
        return Err(CspError::LabelCount {
            vertices: g.order(),
            labels: classes.len(),
        });
    }
    Ok(())
}

fn class_set(classes: &[CspClass], class: CspClass) -> VertexSet {
    VertexSet::from_iter(
        classes
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == class)
            .map(|(v, _)| v),
    )
}

/// Numeric class ids for partition-preserving twin checks.
fn class_ids(classes: &[CspClass]) -> Vec<usize> {
    classes.iter().map(|&c| c as usize).collect()
}

/// All connected induced subgraphs of the subgraph induced on `within`,
/// enumerated once each (extension from a fixed minimum vertex).
pub(crate) fn connected_subsets(g: &Graph, within: VertexSet, max_size: usize) -> Vec<VertexSet> {
    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Graph,
        allowed: VertexSet,
        sub: VertexSet,
        closed: u64,
        ext: VertexSet,
        max_size: usize,
        out: &mut Vec<VertexSet>,
    ) {
        out.push(sub);
        if sub.len() >= max_size {
            return;
        }
        let mut rest = ext;
        while let Some(u) = rest.min_vertex() {
            rest.remove(u);
            let mut sub2 = sub;
            sub2.insert(u);
            let fresh = VertexSet::from_mask(g.row(u) & allowed.mask() & !closed);
            extend(
                g,
                allowed,
                sub2,
                closed | fresh.mask() | (1u64 << u),
                rest.union(fresh),
                max_size,
                out,
            );
        }
    }

    let mut out = Vec::new();
    for v in within.iter() {
        let allowed = VertexSet::from_iter(within.iter().filter(|&w| w > v));
        let ext = VertexSet::from_mask(g.row(v) & allowed.mask());
        extend(
            g,
            allowed,
            VertexSet::singleton(v),
            (1u64 << v) | ext.mask(),
            ext,
            max_size,
            &mut out,
        );
    }
    out.sort();
    out
}

fn sp_set(classes: &[CspClass]) -> VertexSet {
    class_set(classes, CspClass::Semiperiphery).union(class_set(classes, CspClass::Periphery))
}

fn check_scan_bound(g: &Graph, sp: VertexSet) -> Result<(), CspError> {
    for comp in g.components_within(sp) {
        if comp.len() > TWIN_SCAN_BOUND {
            return Err(CspError::TwinScanBound {
                order: comp.len(),
                bound: TWIN_SCAN_BOUND,
            });
        }
    }
    Ok(())
}

/// Classes (size ≥ 2) of pairwise partition-preserving F-twin connected
/// subgraphs of the semiperiphery∪periphery induced subgraph, with the twin
/// identities checked in the full graph. Any proper F-twin pair of
/// semiperiphery-periphery subgraphs decomposes into matched connected
/// pairs, so existence of a class here is equivalent to existence of any
/// such twin pair.
#[allow(clippy::needless_range_loop)] // i, j index the union-find
fn sp_twin_classes(g: &Graph, classes: &[CspClass]) -> Result<Vec<Vec<VertexSet>>, CspError> {
    let sp = sp_set(classes);
    check_scan_bound(g, sp)?;
    let ids = class_ids(classes);
    let subsets = connected_subsets(g, sp, sp.len());
    let m = subsets.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    // Cheap exact prefilter: size plus the sorted multiset of external
    // neighborhoods cuts almost every non-twin pair before the full check.
    let sig_of = |set: VertexSet| -> (usize, Vec<u64>) {
        let mut sigs: Vec<u64> = set.iter().map(|u| g.row(u) & !set.mask()).collect();
        sigs.sort_unstable();
        (set.len(), sigs)
    };
    let sigs: Vec<(usize, Vec<u64>)> = subsets.iter().map(|&s| sig_of(s)).collect();
    for i in 0..m {
        for j in i + 1..m {
            if sigs[i] != sigs[j] || find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            if twin::check_twin(g, TwinKind::F, subsets[i], subsets[j], Some(&ids))?.is_some() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<VertexSet>> = Default::default();
    for i in 0..m {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(subsets[i]);
    }
    let mut out: Vec<Vec<VertexSet>> = groups.into_values().filter(|c| c.len() >= 2).collect();
    out.sort_by_key(|c| c[0]);
    Ok(out)
}

/// Classes (size ≥ 2) of pairwise true-twin core vertices.
fn true_twin_core_classes(g: &Graph, classes: &[CspClass]) -> Vec<Vec<Vertex>> {
    let cores = class_set(classes, CspClass::Core);
    let mut groups: std::collections::BTreeMap<u64, Vec<Vertex>> = Default::default();
    for v in cores.iter() {
        groups.entry(g.row(v) | (1u64 << v)).or_default().push(v);
    }
    groups.into_values().filter(|c| c.len() >= 2).collect()
}

/// Checks the CSP network conditions and the twin-freeness that separates
/// structures from networks.
pub fn validate(g: &Graph, classes: &[CspClass]) -> Result<CspValidationReport, CspError> {
    check_labels(g, classes)?;
    let mut violations = Vec::new();

    if !g.is_connected() {
        violations.push(CspViolation::Disconnected);
    }
    for class in [CspClass::Core, CspClass::Semiperiphery, CspClass::Periphery] {
        if class_set(classes, class).is_empty() {
            violations.push(CspViolation::EmptyClass(class));
        }
    }

    let cores = class_set(classes, CspClass::Core);
    let periphs = class_set(classes, CspClass::Periphery);
    for v in g.vertices() {
        match classes[v] {
            CspClass::Core => {
                let dist = g.distances_from(v)?;
                let mut ecc = Some(0usize);
                for d in dist {
                    match (d.finite(), ecc) {
                        (Some(k), Some(e)) => ecc = Some(e.max(k)),
                        _ => ecc = None,
                    }
                }
                if ecc.is_none_or(|e| e > 2) {
                    violations.push(CspViolation::CoreEccentricity {
                        vertex: v,
                        eccentricity: ecc,
                    });
                }
            }
            CspClass::Semiperiphery => {
                let nbrs = g.neighbors(v)?;
                let adj_cores = nbrs.intersection(cores);
                let adj_periphs = nbrs.intersection(periphs);
                let ok = adj_cores
                    .iter()
                    .any(|c| adj_periphs.iter().any(|p| !g.adjacent(c, p)));
                if !ok {
                    violations.push(CspViolation::SemiperipheryNotIntermediary { vertex: v });
                }
            }
            CspClass::Periphery => {
                let degree = g.degree(v)?;
                if degree != 1 {
                    violations.push(CspViolation::PeripheryDegree { vertex: v, degree });
                }
            }
        }
    }

    let is_csp_network = violations.is_empty();

    for members in true_twin_core_classes(g, classes) {
        violations.push(CspViolation::TrueTwinCores { members });
    }
    for class in sp_twin_classes(g, classes)? {
        violations.push(CspViolation::FTwinSubgraphs {
            members: class.iter().map(|s| s.to_vec()).collect(),
        });
    }

    let is_csp_structure = violations.is_empty();
    Ok(CspValidationReport {
        is_csp_network,
        is_csp_structure,
        violations,
    })
}

/// Which reduction rule fired in one pass of [`reduce`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ReductionRule {
    /// Proper true-twin core vertex classes collapsed to a representative.
    TrueTwinCores,
    /// Proper false-twin vertex classes inside semiperiphery∪periphery.
    FalseTwinVertices,
    /// F-twin classes of whole semiperiphery∪periphery components.
    FTwinComponents,
    /// A leftover connected F-twin subgraph pair inside a component.
    FTwinSubgraphs,
}

impl ReductionRule {
    pub fn name(self) -> &'static str {
        match self {
            ReductionRule::TrueTwinCores => "true-twin-cores",
            ReductionRule::FalseTwinVertices => "false-twin-vertices",
            ReductionRule::FTwinComponents => "f-twin-components",
            ReductionRule::FTwinSubgraphs => "f-twin-subgraphs",
        }
    }
}

/// One fixpoint pass: which rule fired and who survived it.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionPass {
    pub rule: ReductionRule,
    /// Vertices deleted in this pass (original indices).
    pub removed: Vec<Vertex>,
    /// Surviving original vertices after the pass.
    pub survivors: Vec<Vertex>,
}

/// Result of twin-reducing a CSP network.
#[derive(Clone, Debug)]
pub struct CspReduction {
    /// The reduced structure, reindexed densely.
    pub graph: Graph,
    pub classes: Vec<CspClass>,
    /// New index → original vertex.
    pub kept: Vec<Vertex>,
    /// Original vertex → original vertex of its absorbing representative
    /// (identity for survivors).
    pub absorbed_into: Vec<Vertex>,
    pub passes: Vec<ReductionPass>,
    pub report: CspValidationReport,
}

/// Ranks twin-class members so a preferred member survives, falling back to
/// the lexicographically smallest sorted vertex list.
fn pick_representative(members: &[VertexSet], prefer: &[Vertex]) -> usize {
    let rank = |set: VertexSet| -> (usize, Vec<Vertex>) {
        let pos = prefer
            .iter()
            .position(|&p| set.contains(p))
            .unwrap_or(usize::MAX);
        (pos, set.to_vec())
    };
    (0..members.len())
        .min_by_key(|&i| rank(members[i]))
        .expect("non-empty class")
}

/// Maps the global preference list into induced-subgraph indices.
fn prefer_local(prefer: &[Vertex], back: &[Vertex]) -> Vec<Vertex> {
    prefer
        .iter()
        .filter_map(|p| back.iter().position(|&b| b == *p))
        .collect()
}

fn sp_false_twin_vertex_classes(
    g: &Graph,
    classes: &[CspClass],
    sp: VertexSet,
) -> Vec<Vec<VertexSet>> {
    let mut groups: std::collections::BTreeMap<(u64, usize), Vec<VertexSet>> = Default::default();
    for v in sp.iter() {
        groups
            .entry((g.row(v), classes[v] as usize))
            .or_default()
            .push(VertexSet::singleton(v));
    }
    groups.into_values().filter(|c| c.len() >= 2).collect()
}

#[allow(clippy::needless_range_loop)] // i, j index the union-find
fn sp_component_twin_classes(
    g: &Graph,
    ids: &[usize],
    sp: VertexSet,
) -> Result<Vec<Vec<VertexSet>>, CspError> {
    let comps = g.components_within(sp);
    let m = comps.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..m {
        for j in i + 1..m {
            if comps[i].len() != comps[j].len() || find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            if twin::check_twin(g, TwinKind::F, comps[i], comps[j], Some(ids))?.is_some() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<VertexSet>> = Default::default();
    for i in 0..m {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(comps[i]);
    }
    let mut out: Vec<Vec<VertexSet>> = groups.into_values().filter(|c| c.len() >= 2).collect();
    for class in &mut out {
        class.sort();
    }
    out.sort_by_key(|c| c[0]);
    Ok(out)
}

/// Smallest leftover connected proper F-twin pair inside the
/// semiperiphery∪periphery subgraph, if any.
fn first_connected_twin_pair(
    g: &Graph,
    classes: &[CspClass],
    ids: &[usize],
) -> Result<Option<Vec<VertexSet>>, CspError> {
    let sp = sp_set(classes);
    check_scan_bound(g, sp)?;
    let mut subsets = connected_subsets(g, sp, sp.len());
    subsets.sort_by_key(|s| (s.len(), *s));
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if subsets[i].len() != subsets[j].len() {
                continue;
            }
            if twin::check_twin(g, TwinKind::F, subsets[i], subsets[j], Some(ids))?.is_some() {
                return Ok(Some(vec![subsets[i], subsets[j]]));
            }
        }
    }
    Ok(None)
}

/// Deletes non-representative members of each class, mapping their vertices
/// through the twin bijection onto the representative.
fn absorb_classes(
    ind: &Graph,
    ids: &[usize],
    classes: &[Vec<VertexSet>],
    prefer: &[Vertex],
    back: &[Vertex],
    removal: &mut Vec<(Vertex, Vertex)>,
) -> Result<(), CspError> {
    for members in classes {
        let rep = pick_representative(members, &prefer_local(prefer, back));
        for (i, &member) in members.iter().enumerate() {
            if i == rep {
                continue;
            }
            let witness: TwinWitness =
                twin::check_twin(ind, TwinKind::F, member, members[rep], Some(ids))?
                    .expect("class members are twins");
            for &(u, fu) in witness.pairs() {
                removal.push((back[u], back[fu]));
            }
        }
    }
    Ok(())
}

/// Collapses proper twin substructures of a CSP network to a CSP structure.
///
/// Each pass deletes the non-representative members of one kind of twin
/// class (true-twin cores, then false-twin semiperiphery/periphery
/// vertices, then F-twin components, then any leftover connected F-twin
/// pair) and repeats to fixpoint. `prefer` biases representative choice.
pub fn reduce(
    g: &Graph,
    classes: &[CspClass],
    prefer: &[Vertex],
) -> Result<CspReduction, CspError> {
    check_labels(g, classes)?;
    let initial = validate(g, classes)?;
    if !initial.is_csp_network {
        return Err(CspError::NotANetwork(Box::new(initial)));
    }

    let mut survivors = g.vertex_set();
    let mut absorbed_into: Vec<Vertex> = (0..g.order()).collect();
    let mut passes: Vec<ReductionPass> = Vec::new();

    // Working views are induced subgraphs of the original on the survivor
    // set; twin deletion never adds edges, so this is exact.
    loop {
        let (ind, back) = g.induced(survivors)?;
        let ind_classes: Vec<CspClass> = back.iter().map(|&v| classes[v]).collect();
        let ids = class_ids(&ind_classes);
        let local_prefer = prefer_local(prefer, &back);

        let mut removal: Vec<(Vertex, Vertex)> = Vec::new(); // (deleted, absorbed into)
        let mut rule = ReductionRule::TrueTwinCores;

        let core_classes = true_twin_core_classes(&ind, &ind_classes);
        if !core_classes.is_empty() {
            for members in core_classes {
                let sets: Vec<VertexSet> =
                    members.iter().map(|&v| VertexSet::singleton(v)).collect();
                let rep = pick_representative(&sets, &local_prefer);
                for (i, &v) in members.iter().enumerate() {
                    if i != rep {
                        removal.push((back[v], back[members[rep]]));
                    }
                }
            }
        } else {
            let sp = sp_set(&ind_classes);
            let vertex_classes = sp_false_twin_vertex_classes(&ind, &ind_classes, sp);
            if !vertex_classes.is_empty() {
                rule = ReductionRule::FalseTwinVertices;
                for members in vertex_classes {
                    let rep = pick_representative(&members, &local_prefer);
                    for (i, &set) in members.iter().enumerate() {
                        if i != rep {
                            let v = set.min_vertex().unwrap();
                            let r = members[rep].min_vertex().unwrap();
                            removal.push((back[v], back[r]));
                        }
                    }
                }
            } else {
                let comp_classes = sp_component_twin_classes(&ind, &ids, sp)?;
                if !comp_classes.is_empty() {
                    rule = ReductionRule::FTwinComponents;
                    absorb_classes(&ind, &ids, &comp_classes, prefer, &back, &mut removal)?;
                } else if let Some(pair) = first_connected_twin_pair(&ind, &ind_classes, &ids)? {
                    rule = ReductionRule::FTwinSubgraphs;
                    absorb_classes(&ind, &ids, &[pair], prefer, &back, &mut removal)?;
                }
            }
        }

        if removal.is_empty() {
            break;
        }
        for &(orig, into) in &removal {
            absorbed_into[orig] = into;
            survivors.remove(orig);
        }
        passes.push(ReductionPass {
            rule,
            removed: removal.iter().map(|&(o, _)| o).collect(),
            survivors: survivors.to_vec(),
        });
    }

    // Path-compress absorption chains onto final survivors.
    for v in 0..g.order() {
        let mut r = absorbed_into[v];
        while absorbed_into[r] != r {
            r = absorbed_into[r];
        }
        absorbed_into[v] = r;
    }

    let (graph, kept) = g.induced(survivors)?;
    let out_classes: Vec<CspClass> = kept.iter().map(|&v| classes[v]).collect();
    let report = validate(&graph, &out_classes)?;
    debug_assert!(
        report.is_csp_structure,
        "reduction fixpoint must be a structure"
    );
    Ok(CspReduction {
        graph,
        classes: out_classes,
        kept,
        absorbed_into,
        passes,
        report,
    })
}

/// The (C0, C1, S, P) split of a CSP structure with the periphery
/// attachment map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspDecomposition {
    /// Cores adjacent to a periphery vertex; induces a complete graph.
    pub c0: Vec<Vertex>,
    /// Remaining cores; no true-twin pair among them.
    pub c1: Vec<Vertex>,
    pub s: Vec<Vertex>,
    pub p: Vec<Vertex>,
    /// (attachment point in C0 ∪ S, its periphery leaf), sorted.
    pub attach: Vec<(Vertex, Vertex)>,
    pub n0: usize,
    pub n1: usize,
    pub nc: usize,
    pub ns: usize,
    pub np: usize,
}

/// Splits a validated CSP structure and re-verifies every clause of the
/// characterization; a clause failure is an internal inconsistency.
pub fn decompose(g: &Graph, classes: &[CspClass]) -> Result<CspDecomposition, CspError> {
    let report = validate(g, classes)?;
    if !report.is_csp_structure {
        return Err(CspError::NotAStructure(Box::new(report)));
    }
    let cores = class_set(classes, CspClass::Core);
    let semis = class_set(classes, CspClass::Semiperiphery);
    let periphs = class_set(classes, CspClass::Periphery);

    let c0 = VertexSet::from_iter(
        cores
            .iter()
            .filter(|&c| g.row(c) & periphs.mask() != 0),
    );
    let c1 = cores.minus(c0);

    for u in c0.iter() {
        for v in c0.iter() {
            if u < v && !g.adjacent(u, v) {
                return Err(CspError::TheoremClause("C0 must induce a complete graph"));
            }
        }
    }
    if !g.fully_connected(c0, c1) {
        return Err(CspError::TheoremClause("C0 and C1 must be fully connected"));
    }
    if !g.fully_connected(cores, semis) {
        return Err(CspError::TheoremClause(
            "core and semiperiphery must be fully connected",
        ));
    }
    for u in periphs.iter() {
        if g.row(u) & periphs.mask() != 0 {
            return Err(CspError::TheoremClause("periphery must induce an empty graph"));
        }
    }
    let mut attach = Vec::new();
    let anchors = c0.union(semis);
    for a in anchors.iter() {
        let leaves = periphs.intersection(VertexSet::from_mask(g.row(a)));
        if leaves.len() != 1 {
            return Err(CspError::TheoremClause(
                "each C0 or semiperiphery vertex must carry exactly one periphery leaf",
            ));
        }
        attach.push((a, leaves.min_vertex().unwrap()));
    }
    if attach.len() != periphs.len() {
        return Err(CspError::TheoremClause("peripheries must biject onto C0 ∪ S"));
    }
    let (c1_graph, _) = g.induced(c1)?;
    if !twin::true_twin_vertices(&c1_graph).is_empty() {
        return Err(CspError::TheoremClause("C1 must not contain true-twin vertices"));
    }
    let (s_graph, _) = g.induced(semis)?;
    if twin::has_proper_twin(&s_graph, TwinKind::F, None) {
        return Err(CspError::TheoremClause("S must not contain F-twin subgraphs"));
    }
    let (n0, n1, ns, np) = (c0.len(), c1.len(), semis.len(), periphs.len());
    if np != n0 + ns {
        return Err(CspError::TheoremClause("periphery count must equal n0 + ns"));
    }
    if n0 + n1 == 0 || ns == 0 || np == 0 {
        return Err(CspError::TheoremClause(
            "core, semiperiphery and periphery counts must not vanish",
        ));
    }
    Ok(CspDecomposition {
        c0: c0.to_vec(),
        c1: c1.to_vec(),
        s: semis.to_vec(),
        p: periphs.to_vec(),
        attach,
        n0,
        n1,
        nc: n0 + n1,
        ns,
        np,
    })
}

/// Builds the CSP structure determined by a core part `c1` (no true twins),
/// a semiperiphery part `s` (no F-twin subgraphs) and `n0` extra cores that
/// each carry a periphery leaf. Layout: C0, C1, S, then the leaves of C0
/// followed by the leaves of S.
pub fn compose(c1: &Graph, s: &Graph, n0: usize) -> Result<(Graph, Vec<CspClass>), CspError> {
    if !twin::true_twin_vertices(c1).is_empty() {
        return Err(CspError::C1HasTrueTwins);
    }
    if twin::has_proper_twin(s, TwinKind::F, None) {
        return Err(CspError::SHasFTwins);
    }
    let (n1, ns) = (c1.order(), s.order());
    if n0 + n1 == 0 || ns == 0 {
        return Err(CspError::EmptyPart);
    }
    let nc = n0 + n1;
    let n = nc + ns + n0 + ns;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for u in 0..n0 {
        for v in u + 1..n0 {
            edges.push((u, v));
        }
        for v in n0..nc {
            edges.push((u, v));
        }
    }
    for (u, v) in c1.edges() {
        edges.push((n0 + u, n0 + v));
    }
    for u in 0..nc {
        for v in nc..nc + ns {
            edges.push((u, v));
        }
    }
    for (u, v) in s.edges() {
        edges.push((nc + u, nc + v));
    }
    for i in 0..n0 {
        edges.push((i, nc + ns + i));
    }
    for j in 0..ns {
        edges.push((nc + j, nc + ns + n0 + j));
    }
    let graph = Graph::from_edges(n, &edges)?;
    let mut classes = Vec::with_capacity(n);
    classes.extend(std::iter::repeat_n(CspClass::Core, nc));
    classes.extend(std::iter::repeat_n(CspClass::Semiperiphery, ns));
    classes.extend(std::iter::repeat_n(CspClass::Periphery, n0 + ns));
    Ok((graph, classes))
}

/// Wraps a labeled graph as a [`PartitionedGraph`] for canonicalization.
pub fn to_partitioned(g: &Graph, classes: &[CspClass]) -> Result<PartitionedGraph, GraphError> {
    let labels: Vec<String> = classes.iter().map(|c| c.name().to_string()).collect();
    PartitionedGraph::new(g.clone(), &labels)
}

/// Partitioned canonical form of a labeled CSP graph.
pub fn partitioned_form(
    g: &Graph,
    classes: &[CspClass],
) -> Result<canon::CanonicalForm, GraphError> {
    canon::canonical_form_partitioned(&to_partitioned(g, classes)?)
}

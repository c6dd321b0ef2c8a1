//! Shared test support: graph corpora, independent twin-identity checkers,
//! the property checks behind the theorem suite, and the golden structures
//! encoding the published low-order figures.
//!
//! Every check panics on a counterexample and returns how many times its
//! hypothesis was exercised, so callers can assert non-vacuity.

#![allow(dead_code)]

use cspgraph::census;
use cspgraph::csp::{self, CspClass};
use cspgraph::graph::{Distance, Graph, Vertex, VertexSet};
use cspgraph::twin::{self, TwinKind, TwinWitness};
use cspgraph::isomorphic;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const RANDOM_TRIALS: usize = 520;

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// The shared random corpus: 520 seeded graphs, orders cycling 4..=8,
/// edge probability 1/2.
pub fn corpus() -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    (0..RANDOM_TRIALS)
        .map(|i| random_graph(&mut rng, 4 + i % 5, 0.5))
        .collect()
}

pub fn census_upto_5() -> Vec<Graph> {
    (1..=5)
        .flat_map(|n| census::census_graphs(n).unwrap())
        .collect()
}

/// Handcrafted twin-rich graphs; random graphs at p = 1/2 almost never
/// contain higher-order twins, so the structured hypotheses are fed too.
pub fn menagerie() -> Vec<Graph> {
    vec![
        // P3 ∪ P3: connected F-twin components carrying twin vertices.
        Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap(),
        // Double spider: two 3-vertex legs on a core.
        Graph::from_edges(7, &[(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (4, 6)]).unwrap(),
        // C6 and padded variants: overlapping twin-edge classes.
        Graph::standard(cspgraph::StandardKind::Cycle, 6).unwrap(),
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
        Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 7)]).unwrap(),
        // K2 ∪ K2 and the plain spider.
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap(),
        // A clique joined to twin pendant paths.
        Graph::from_edges(8, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (2, 7)])
            .unwrap(),
    ]
}

pub fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
    fn rec(start: usize, n: usize, left: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for v in start..n {
            if n - v < left {
                break;
            }
            let mut next = cur;
            next.insert(v);
            rec(v + 1, n, left - 1, next, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, VertexSet::EMPTY, &mut out);
    out
}

/// Test-local re-statement of the F-twin identity for a claimed witness.
pub fn holds_f(g: &Graph, v1: VertexSet, v2: VertexSet, pairs: &[(Vertex, Vertex)]) -> bool {
    pairs.iter().all(|&(u, fu)| {
        let external = g.neighbors(u).unwrap().minus(v1) == g.neighbors(fu).unwrap().minus(v2);
        let iso = pairs
            .iter()
            .all(|&(x, fx)| g.adjacent(u, x) == g.adjacent(fu, fx));
        external && iso
    })
}

/// Test-local re-statement of the T-twin identity.
pub fn holds_t(g: &Graph, v1: VertexSet, v2: VertexSet, pairs: &[(Vertex, Vertex)]) -> bool {
    pairs.iter().all(|&(u, fu)| {
        let unions = g.neighbors(u).unwrap().union(v1) == g.neighbors(fu).unwrap().union(v2);
        let iso = pairs
            .iter()
            .all(|&(x, fx)| g.adjacent(u, x) == g.adjacent(fu, fx));
        unions && iso
    })
}

/// All proper twin pairs of subgraph order ≤ `cap`, with their witnesses.
pub fn proper_twin_pairs(g: &Graph, kind: TwinKind, cap: usize) -> Vec<TwinWitness> {
    let n = g.order();
    let mut out = Vec::new();
    for k in 1..=cap.min(n.saturating_sub(1)) {
        let subsets = subsets_of_size(n, k);
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if let Some(w) = twin::check_twin(g, kind, subsets[i], subsets[j], None).unwrap() {
                    out.push(w);
                }
            }
        }
    }
    out
}

fn components_of(g: &Graph, set: VertexSet) -> Vec<VertexSet> {
    g.components_within(set)
}

pub fn check_component_matching() -> usize {
    let mut exercised = 0usize;
    for g in census_upto_5().iter().chain(corpus().iter()) {
        for w in proper_twin_pairs(g, TwinKind::F, g.order().saturating_sub(1)) {
            let comps2 = components_of(g, w.v2);
            for comp in components_of(g, w.v1) {
                let image: VertexSet = comp.iter().map(|u| w.map(u).unwrap()).collect();
                assert!(
                    comps2.contains(&image),
                    "component image must be a component"
                );
                let sub: Vec<(Vertex, Vertex)> = w
                    .pairs()
                    .iter()
                    .copied()
                    .filter(|&(u, _)| comp.contains(u))
                    .collect();
                assert!(holds_f(g, comp, image, &sub));
                assert!(twin::check_twin(g, TwinKind::F, comp, image, None)
                    .unwrap()
                    .is_some());
                exercised += 1;
            }
        }
    }
    assert!(exercised > 100, "only {exercised} component pairs exercised");
    exercised
}

pub fn check_union_of_component_pairs() -> usize {
    let mut exercised = 0;
    for g in census_upto_5()
        .iter()
        .chain(menagerie().iter())
        .chain(corpus().iter().take(150))
    {
        let pairs = proper_twin_pairs(g, TwinKind::F, 2);
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let (a, b) = (&pairs[i], &pairs[j]);
                let all = [a.v1, a.v2, b.v1, b.v2];
                let disjoint = (0..4).all(|x| (x + 1..4).all(|y| all[x].is_disjoint(all[y])));
                if !disjoint {
                    continue;
                }
                // The pieces must also stay separate components of the
                // union: no cross edges on either side.
                let separated = a.v1.iter().all(|u| g.row(u) & b.v1.mask() == 0)
                    && a.v2.iter().all(|u| g.row(u) & b.v2.mask() == 0);
                if !separated {
                    continue;
                }
                let u1 = a.v1.union(b.v1);
                let u2 = a.v2.union(b.v2);
                assert!(
                    twin::check_twin(g, TwinKind::F, u1, u2, None)
                        .unwrap()
                        .is_some(),
                    "union of separated twin pairs must be a twin pair"
                );
                exercised += 1;
                if exercised > 400 {
                    return exercised;
                }
            }
        }
    }
    assert!(exercised > 20, "only {exercised} unions exercised");
    exercised
}

pub fn check_intersection_components() -> usize {
    let mut overlapping = 0;
    for g in census_upto_5().iter().chain(corpus().iter()) {
        for w in proper_twin_pairs(g, TwinKind::F, g.order().saturating_sub(1)) {
            let inter = w.v1.intersection(w.v2);
            if inter.is_empty() {
                continue;
            }
            overlapping += 1;
            for side in [w.v1, w.v2] {
                let covered: VertexSet = components_of(g, side)
                    .into_iter()
                    .filter(|c| !c.intersection(inter).is_empty())
                    .fold(VertexSet::EMPTY, |acc, c| acc.union(c));
                assert_eq!(
                    covered, inter,
                    "intersection must be a union of whole components"
                );
            }
            if components_of(g, w.v1).len() == 1 {
                panic!("connected proper F-twins cannot overlap");
            }
        }
    }
    assert!(overlapping > 20, "only {overlapping} overlapping pairs seen");
    overlapping
}

pub fn check_distance_two() -> usize {
    let mut exercised = 0;
    for g in census_upto_5().iter().chain(corpus().iter()) {
        let whole: Vec<VertexSet> = g.connected_components();
        for w in proper_twin_pairs(g, TwinKind::F, g.order().saturating_sub(1)) {
            if !w.v1.is_disjoint(w.v2) {
                continue;
            }
            for comp in components_of(g, w.v1) {
                let image: VertexSet = comp.iter().map(|u| w.map(u).unwrap()).collect();
                if whole.contains(&comp) && whole.contains(&image) {
                    exercised += 1;
                    continue;
                }
                assert_eq!(
                    g.subgraph_distance(comp, image).unwrap(),
                    2,
                    "matched twin components must sit at distance exactly 2"
                );
                exercised += 1;
            }
        }
    }
    assert!(exercised > 50, "only {exercised} component pairs exercised");
    exercised
}

/// Simple paths of length ≤ 4 from each start vertex, capped per graph.
fn sample_paths(g: &Graph, cap: usize) -> Vec<Vec<Vertex>> {
    fn dfs(
        g: &Graph,
        path: &mut Vec<Vertex>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<Vertex>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        if path.len() >= 2 {
            out.push(path.clone());
        }
        if path.len() == 5 {
            return;
        }
        let last = *path.last().unwrap();
        for v in g.neighbors(last).unwrap().iter() {
            if used.contains(v) {
                continue;
            }
            path.push(v);
            used.insert(v);
            dfs(g, path, used, out, cap);
            used.remove(v);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        let mut path = vec![s];
        let mut used = VertexSet::singleton(s);
        dfs(g, &mut path, &mut used, &mut out, cap);
    }
    out
}

pub fn check_mirror_paths() -> usize {
    let mut exercised = 0;
    for g in census_upto_5().iter().chain(corpus().iter()) {
        for w in proper_twin_pairs(g, TwinKind::F, g.order().saturating_sub(1)) {
            if !w.v1.is_disjoint(w.v2) {
                continue;
            }
            let substitute = |u: Vertex| -> Vertex {
                if w.v1.contains(u) {
                    w.map(u).unwrap()
                } else if w.v2.contains(u) {
                    w.inverse_map(u).unwrap()
                } else {
                    u
                }
            };
            for path in sample_paths(g, 400) {
                let mirrored: Vec<Vertex> = path.iter().map(|&u| substitute(u)).collect();
                let mut seen = VertexSet::EMPTY;
                for &v in &mirrored {
                    assert!(!seen.contains(v), "mirrored path must not repeat vertices");
                    seen.insert(v);
                }
                for pair in mirrored.windows(2) {
                    assert!(
                        g.adjacent(pair[0], pair[1]),
                        "mirrored path must stay a path"
                    );
                }
                assert_eq!(mirrored.len(), path.len());
                exercised += 1;
            }
        }
    }
    assert!(exercised > 1000, "only {exercised} paths mirrored");
    exercised
}

pub fn check_distance_preservation_and_homometry() -> usize {
    let mut exercised = 0;
    for g in census_upto_5().iter().chain(corpus().iter()) {
        if !g.is_connected() {
            continue;
        }
        for w in proper_twin_pairs(g, TwinKind::F, g.order().saturating_sub(1)) {
            if !w.v1.is_disjoint(w.v2) {
                continue;
            }
            let d = |a: Vertex, b: Vertex| match g.distance(a, b).unwrap() {
                Distance::Finite(k) => k,
                Distance::Unreachable => unreachable!("connected graph"),
            };
            for u in w.v1.iter() {
                let fu = w.map(u).unwrap();
                for x in g.vertices() {
                    if x == u {
                        continue;
                    }
                    if w.v1.contains(x) {
                        assert_eq!(d(u, x), d(fu, w.map(x).unwrap()));
                    } else if w.v2.contains(x) {
                        assert_eq!(d(u, x), d(fu, w.inverse_map(x).unwrap()));
                    } else {
                        assert_eq!(d(u, x), d(fu, x));
                    }
                }
            }
            let multiset = |set: VertexSet| -> Vec<usize> {
                let vs = set.to_vec();
                let mut m = Vec::new();
                for i in 0..vs.len() {
                    for j in i + 1..vs.len() {
                        m.push(d(vs[i], vs[j]));
                    }
                }
                m.sort_unstable();
                m
            };
            assert_eq!(multiset(w.v1), multiset(w.v2), "twins must be homometric");
            exercised += 1;
        }
    }
    assert!(exercised > 100, "only {exercised} disjoint pairs exercised");
    exercised
}

pub fn check_equivalence_relation() -> usize {
    let k1 = Graph::standard(cspgraph::StandardKind::Complete, 1).unwrap();
    let k2 = Graph::standard(cspgraph::StandardKind::Complete, 2).unwrap();
    let mut classes_seen = 0;
    for g in census_upto_5().iter().chain(corpus().iter().take(120)) {
        for kind in [TwinKind::F, TwinKind::T] {
            for pattern in [&k1, &k2] {
                for class in twin::twin_classes(g, kind, pattern).unwrap() {
                    for i in 0..class.members.len() {
                        for j in 0..class.members.len() {
                            if i == j {
                                continue;
                            }
                            assert!(twin::check_twin(
                                g,
                                kind,
                                class.members[i],
                                class.members[j],
                                None
                            )
                            .unwrap()
                            .is_some());
                        }
                    }
                    if class.members.len() >= 3 {
                        let phi =
                            twin::check_twin(g, kind, class.members[0], class.members[1], None)
                                .unwrap()
                                .unwrap();
                        let psi =
                            twin::check_twin(g, kind, class.members[1], class.members[2], None)
                                .unwrap()
                                .unwrap();
                        let zeta = phi.compose(&psi).unwrap();
                        let ok = match kind {
                            TwinKind::F => {
                                holds_f(g, class.members[0], class.members[2], zeta.pairs())
                            }
                            TwinKind::T => {
                                holds_t(g, class.members[0], class.members[2], zeta.pairs())
                            }
                        };
                        assert!(ok, "composition of witnesses must be a witness");
                    }
                    classes_seen += 1;
                }
            }
        }
    }
    assert!(classes_seen > 500);
    classes_seen
}

pub fn check_vertex_containment() -> usize {
    let mut exercised = 0;
    for g in census_upto_5()
        .iter()
        .chain(menagerie().iter())
        .chain(corpus().iter())
    {
        let vertex_classes = twin::false_twin_vertices(g);
        if vertex_classes.is_empty() {
            continue;
        }
        for w in proper_twin_pairs(g, TwinKind::F, g.order().saturating_sub(1)) {
            for side in [w.v1, w.v2] {
                if components_of(g, side).len() != 1 || side.len() < 2 {
                    continue;
                }
                for class in &vertex_classes {
                    let members: Vec<Vertex> = class
                        .members
                        .iter()
                        .map(|m| m.min_vertex().unwrap())
                        .collect();
                    for &u in &members {
                        if !side.contains(u) || (g.row(u) & side.mask()) == 0 {
                            continue;
                        }
                        for &v in &members {
                            if v != u {
                                assert!(
                                    side.contains(v),
                                    "an F-twin vertex inside a connected twin drags its partner in"
                                );
                                exercised += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(exercised >= 4, "only {exercised} containments exercised");
    exercised
}

pub fn check_vertex_edge_disjointness_and_order5_exclusion() -> usize {
    let k1 = Graph::standard(cspgraph::StandardKind::Complete, 1).unwrap();
    let k2 = Graph::standard(cspgraph::StandardKind::Complete, 2).unwrap();
    let mut scanned = 0;
    for g in census_upto_5().iter().chain(menagerie().iter()).chain(corpus().iter()) {
        let vertex_set: VertexSet = twin::false_twin_vertices(g)
            .iter()
            .flat_map(|c| c.members.iter().map(|m| m.min_vertex().unwrap()))
            .collect();
        let edge_vertices: VertexSet = twin::twin_classes(g, TwinKind::F, &k2)
            .unwrap()
            .iter()
            .filter(|c| c.members.len() >= 2)
            .flat_map(|c| c.members.iter().flat_map(|m| m.iter()))
            .collect();
        assert!(
            vertex_set.is_disjoint(edge_vertices),
            "proper F-twin vertices and edges share a vertex in {g:?}"
        );
        if !vertex_set.is_empty() && !edge_vertices.is_empty() {
            assert!(g.order() > 5, "order ≤ 5 graph with both twin kinds: {g:?}");
        }
        let k1_classes = twin::twin_classes(g, TwinKind::F, &k1).unwrap();
        let from_pattern: usize = k1_classes.iter().filter(|c| c.members.len() >= 2).count();
        assert_eq!(from_pattern, twin::false_twin_vertices(g).len());
        scanned += 1;
    }
    scanned
}

pub fn check_t_twin_full_connection() -> usize {
    let mut exercised = 0;
    for g in census_upto_5().iter().chain(corpus().iter()) {
        for w in proper_twin_pairs(g, TwinKind::T, 3) {
            let inter = w.v1.intersection(w.v2);
            let only1 = w.v1.minus(w.v2);
            let only2 = w.v2.minus(w.v1);
            assert!(g.fully_connected(inter, only1));
            assert!(g.fully_connected(inter, only2));
            assert!(g.fully_connected(only1, only2));
            if inter.is_empty() {
                assert!(g.fully_connected(w.v1, w.v2));
            }
            exercised += 1;
        }
    }
    assert!(exercised > 100, "only {exercised} T-twin pairs exercised");
    exercised
}

pub fn check_duality() -> usize {
    let mut exercised = 0;
    for g in census_upto_5().iter().chain(corpus().iter().take(200)) {
        let cg = g.complement();
        let cap = if g.order() <= 5 {
            g.order().saturating_sub(1)
        } else {
            3
        };
        for k in 1..=cap.max(1) {
            let subsets = subsets_of_size(g.order(), k);
            for i in 0..subsets.len() {
                for j in i + 1..subsets.len() {
                    let (a, b) = (subsets[i], subsets[j]);
                    let t = twin::check_twin(g, TwinKind::T, a, b, None).unwrap();
                    let f = twin::check_twin(&cg, TwinKind::F, a, b, None).unwrap();
                    assert_eq!(t.is_some(), f.is_some(), "duality broke on {a:?} {b:?}");
                    if let Some(fw) = &f {
                        assert!(holds_t(g, a, b, fw.pairs()));
                    }
                    if let Some(tw) = &t {
                        assert!(holds_f(&cg, a, b, tw.pairs()));
                        exercised += 1;
                    }
                }
            }
        }
    }
    assert!(exercised > 50, "only {exercised} dual pairs exercised");
    exercised
}

pub fn check_transposition_automorphism() -> usize {
    let mut exercised = 0;
    for g in census_upto_5().iter().chain(corpus().iter()) {
        let classes = [twin::false_twin_vertices(g), twin::true_twin_vertices(g)];
        for class in classes.iter().flatten() {
            let members: Vec<Vertex> = class
                .members
                .iter()
                .map(|m| m.min_vertex().unwrap())
                .collect();
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    let mut perm: Vec<Vertex> = (0..g.order()).collect();
                    perm.swap(members[i], members[j]);
                    assert_eq!(&g.relabel(&perm), g, "transposition must fix the graph");
                    exercised += 1;
                }
            }
        }
    }
    assert!(exercised > 200, "only {exercised} transpositions exercised");
    exercised
}

pub fn check_csp_roundtrip() -> usize {
    let mut exercised = 0;
    for n in 3..=6 {
        for (g, classes) in census::csp_structure_graphs(n).unwrap() {
            let d = csp::decompose(&g, &classes).unwrap();
            let (c1_graph, _) = g
                .induced(VertexSet::from_iter(d.c1.iter().copied()))
                .unwrap();
            let (s_graph, _) = g
                .induced(VertexSet::from_iter(d.s.iter().copied()))
                .unwrap();
            let (rebuilt, rebuilt_classes) = csp::compose(&c1_graph, &s_graph, d.n0).unwrap();
            assert_eq!(
                csp::partitioned_form(&g, &classes).unwrap(),
                csp::partitioned_form(&rebuilt, &rebuilt_classes).unwrap(),
                "round trip must be partitioned-isomorphic at n={n}"
            );
            exercised += 1;
        }
    }
    assert_eq!(exercised, 1 + 2 + 4 + 9);
    exercised
}

pub fn check_items_ii_iii_exclusive() -> usize {
    let mut exercised = 0;
    for n in 3..=6 {
        for (g, classes) in census::csp_structure_graphs(n).unwrap() {
            for v in g.vertices() {
                let others: Vec<CspClass> = match classes[v] {
                    CspClass::Core => vec![CspClass::Semiperiphery, CspClass::Periphery],
                    CspClass::Semiperiphery => vec![CspClass::Core, CspClass::Periphery],
                    CspClass::Periphery => vec![CspClass::Core, CspClass::Semiperiphery],
                };
                let nbrs = g.neighbors(v).unwrap();
                let from = |class: CspClass| -> Vec<Vertex> {
                    nbrs.iter().filter(|&u| classes[u] == class).collect()
                };
                let item_ii = from(others[0])
                    .iter()
                    .any(|&x| from(others[1]).iter().any(|&y| !g.adjacent(x, y)));
                let item_iii = g.degree(v).unwrap() == 1;
                assert!(
                    !(item_ii && item_iii),
                    "items (ii) and (iii) held together at vertex {v}"
                );
                exercised += 1;
            }
        }
    }
    exercised
}

/// Inflates CSP structures with twin copies and checks that reduction
/// recovers them; also checks idempotence and connectivity along the way.
pub fn check_reduce_undoes_inflation() -> usize {
    let mut rng = StdRng::seed_from_u64(0xfeed_5eed);
    let structures: Vec<(Graph, Vec<CspClass>)> = (3..=6)
        .flat_map(|n| census::csp_structure_graphs(n).unwrap())
        .collect();
    let mut exercised = 0;
    for trial in 0..RANDOM_TRIALS {
        let (g0, classes0) = &structures[trial % structures.len()];
        let mut edges: Vec<(Vertex, Vertex)> = g0.edges();
        let mut classes = classes0.clone();
        let mut n = g0.order();

        for _ in 0..rng.random_range(1..=2) {
            let mut kind = rng.random_range(0..3u8);
            if kind == 1 {
                let has_leaf_free_core = (0..n).any(|v| {
                    classes[v] == CspClass::Core
                        && !(0..n).any(|p| {
                            classes[p] == CspClass::Periphery
                                && edges.contains(&(v.min(p), v.max(p)))
                        })
                });
                if !has_leaf_free_core {
                    kind = 2;
                }
            }
            match kind {
                // Duplicate a semiperiphery-periphery attachment pair.
                0 => {
                    let semis: Vec<Vertex> = (0..n)
                        .filter(|&v| classes[v] == CspClass::Semiperiphery)
                        .collect();
                    let s = semis[rng.random_range(0..semis.len())];
                    let p = (0..n)
                        .find(|&v| {
                            classes[v] == CspClass::Periphery
                                && edges.contains(&(s.min(v), s.max(v)))
                        })
                        .expect("attached periphery");
                    let (s2, p2) = (n, n + 1);
                    for &(a, b) in edges.clone().iter() {
                        let other = if a == s {
                            Some(b)
                        } else if b == s {
                            Some(a)
                        } else {
                            None
                        };
                        if let Some(o) = other {
                            if o != p && classes[o] != CspClass::Periphery {
                                edges.push((o.min(s2), o.max(s2)));
                            }
                        }
                    }
                    edges.push((s2, p2));
                    classes.push(CspClass::Semiperiphery);
                    classes.push(CspClass::Periphery);
                    n += 2;
                }
                // Clone a leaf-free core as a true twin.
                1 => {
                    let cores: Vec<Vertex> = (0..n)
                        .filter(|&v| {
                            classes[v] == CspClass::Core
                                && !(0..n).any(|p| {
                                    classes[p] == CspClass::Periphery
                                        && edges.contains(&(v.min(p), v.max(p)))
                                })
                        })
                        .collect();
                    let c = cores[rng.random_range(0..cores.len())];
                    let c2 = n;
                    for &(a, b) in edges.clone().iter() {
                        let other = if a == c {
                            Some(b)
                        } else if b == c {
                            Some(a)
                        } else {
                            None
                        };
                        if let Some(o) = other {
                            edges.push((o.min(c2), o.max(c2)));
                        }
                    }
                    edges.push((c.min(c2), c.max(c2)));
                    classes.push(CspClass::Core);
                    n += 1;
                }
                // An extra periphery leaf on an existing attachment point.
                _ => {
                    let anchors: Vec<Vertex> = (0..n)
                        .filter(|&v| {
                            classes[v] != CspClass::Periphery
                                && (0..n).any(|p| {
                                    classes[p] == CspClass::Periphery
                                        && edges.contains(&(v.min(p), v.max(p)))
                                })
                        })
                        .collect();
                    let a = anchors[rng.random_range(0..anchors.len())];
                    edges.push((a, n));
                    classes.push(CspClass::Periphery);
                    n += 1;
                }
            }
        }

        let inflated = Graph::from_edges(n, &edges).unwrap();
        let report = csp::validate(&inflated, &classes).unwrap();
        assert!(report.is_csp_network, "inflation must stay a CSP network");
        assert!(!report.is_csp_structure, "inflation must introduce twins");
        let red = csp::reduce(&inflated, &classes, &[]).unwrap();
        assert!(red.report.is_csp_structure);
        assert_eq!(
            csp::partitioned_form(&red.graph, &red.classes).unwrap(),
            csp::partitioned_form(g0, classes0).unwrap(),
            "reduction must recover the seed structure"
        );
        let again = csp::reduce(&red.graph, &red.classes, &[]).unwrap();
        assert!(again.passes.is_empty());
        assert_eq!(again.graph, red.graph);
        for pass in &red.passes {
            let survivors = VertexSet::from_iter(pass.survivors.iter().copied());
            let (stage, _) = inflated.induced(survivors).unwrap();
            assert!(stage.is_connected(), "reduction must never disconnect");
        }
        exercised += 1;
    }
    assert!(exercised >= RANDOM_TRIALS);
    exercised
}

pub fn check_c6_proposition() -> usize {
    let k2 = Graph::standard(cspgraph::StandardKind::Complete, 2).unwrap();
    let c6 = Graph::standard(cspgraph::StandardKind::Cycle, 6).unwrap();
    let mut exercised = 0;
    for g in corpus()
        .iter()
        .chain(census_upto_5().iter())
        .chain(menagerie().iter())
    {
        let classes: Vec<_> = twin::twin_classes(g, TwinKind::F, &k2)
            .unwrap()
            .into_iter()
            .filter(|c| c.members.len() >= 2)
            .collect();
        for i in 0..classes.len() {
            for j in 0..classes.len() {
                if i == j {
                    continue;
                }
                for &e1 in &classes[i].members {
                    let e2 = classes[i]
                        .members
                        .iter()
                        .find(|&&m| m != e1)
                        .copied()
                        .unwrap();
                    for &f1 in &classes[j].members {
                        if e1.intersection(f1).is_empty() {
                            continue;
                        }
                        let f2 = classes[j]
                            .members
                            .iter()
                            .find(|&&m| m != f1)
                            .copied()
                            .unwrap();
                        let cycle = twin::find_c6_witness(g, e1, e2, f1, f2).unwrap();
                        let (induced, _) = g.induced(cycle).unwrap();
                        assert!(isomorphic(&induced, &c6));
                        exercised += 1;
                    }
                }
            }
        }
    }
    assert!(exercised >= 1, "no overlapping twin-edge pairs found");
    exercised
}

/// The seven structures of order ≤ 5, built from the structural
/// characterization: order 3 has one, order 4 two, order 5 four.
pub fn golden_structures_upto_5() -> Vec<(usize, Graph, Vec<CspClass>)> {
    use CspClass::{Core, Periphery, Semiperiphery};
    vec![
        // n=3: core - semiperiphery - periphery path.
        (
            3,
            Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap(),
            vec![Core, Semiperiphery, Periphery],
        ),
        // n=4: two non-adjacent cores through one semiperiphery...
        (
            4,
            Graph::from_edges(4, &[(0, 2), (1, 2), (2, 3)]).unwrap(),
            vec![Core, Core, Semiperiphery, Periphery],
        ),
        // ...and the path with a core-attached periphery.
        (
            4,
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            vec![Periphery, Core, Semiperiphery, Periphery],
        ),
        // n=5: one core with an adjacent semiperiphery pair.
        (
            5,
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap(),
            vec![Core, Semiperiphery, Semiperiphery, Periphery, Periphery],
        ),
        // n=5: three mutually non-adjacent cores.
        (
            5,
            Graph::from_edges(5, &[(0, 3), (1, 3), (2, 3), (3, 4)]).unwrap(),
            vec![Core, Core, Core, Semiperiphery, Periphery],
        ),
        // n=5: three cores along a path.
        (
            5,
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (1, 3), (2, 3), (3, 4)]).unwrap(),
            vec![Core, Core, Core, Semiperiphery, Periphery],
        ),
        // n=5: the order-3 structure plus a core-periphery pair.
        (
            5,
            Graph::from_edges(5, &[(0, 1), (1, 2), (3, 0), (3, 1), (3, 4)]).unwrap(),
            vec![Core, Semiperiphery, Periphery, Core, Periphery],
        ),
    ]
}

/// Fig 5(c): the reduced 75M-threshold structure (a labeled P4).
pub fn golden_fig5c() -> (Graph, Vec<CspClass>) {
    use CspClass::{Core, Periphery, Semiperiphery};
    (
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        vec![Periphery, Core, Semiperiphery, Periphery],
    )
}

/// Fig 6(c): the reduced 125M-threshold structure (8 vertices).
pub fn golden_fig6c() -> (Graph, Vec<CspClass>) {
    use CspClass::{Core, Periphery, Semiperiphery};
    // 0 core, 1 its leaf, (2,3) detached semi-periphery pair, (4,5) and
    // (6,7) pairs with the 4-6 semi edge.
    (
        Graph::from_edges(
            8,
            &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (0, 6), (4, 6), (6, 7)],
        )
        .unwrap(),
        vec![
            Core,
            Periphery,
            Semiperiphery,
            Periphery,
            Semiperiphery,
            Periphery,
            Semiperiphery,
            Periphery,
        ],
    )
}

/// Fig 7(c): the reduced 500M + dissimilarity structure (10 vertices).
pub fn golden_fig7c() -> (Graph, Vec<CspClass>) {
    use CspClass::{Core, Periphery, Semiperiphery};
    // 0 core with leaf 1; semi-periphery pairs (2,3), (4,5), (6,7), (8,9);
    // semis 4, 6, 8 pairwise adjacent.
    (
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (0, 2),
                (2, 3),
                (0, 4),
                (4, 5),
                (0, 6),
                (6, 7),
                (0, 8),
                (8, 9),
                (4, 6),
                (4, 8),
                (6, 8),
            ],
        )
        .unwrap(),
        vec![
            Core,
            Periphery,
            Semiperiphery,
            Periphery,
            Semiperiphery,
            Periphery,
            Semiperiphery,
            Periphery,
            Semiperiphery,
            Periphery,
        ],
    )
}

/// Fig 8(b): dropping the Australasia-India edge and reducing (8 vertices).
pub fn golden_fig8b() -> (Graph, Vec<CspClass>) {
    use CspClass::{Core, Periphery, Semiperiphery};
    // 0 core with leaf 1; pairs (2,3), (4,5), (6,7); semis 4 and 6 adjacent.
    (
        Graph::from_edges(
            8,
            &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (0, 6), (6, 7), (4, 6)],
        )
        .unwrap(),
        vec![
            Core,
            Periphery,
            Semiperiphery,
            Periphery,
            Semiperiphery,
            Periphery,
            Semiperiphery,
            Periphery,
        ],
    )
}

//! The 1994 Asia-Africa-Oceania metal-manufactures trade network and the
//! clustering pipeline that extracts CSP structures from it.
//!
//! The bundled dataset holds 29 countries and 69 edges weighted by combined
//! imports+exports in thousands of USD; it is already prefiltered (edges
//! under 10M USD and countries under 25M USD total removed, except that a
//! country left without edges keeps its strongest one). The pipeline
//! clusters countries by a peer-to-peer trade threshold, optionally refines
//! the singleton clusters with a dissimilarity measure, builds the quotient
//! network, attaches caller-supplied CSP class labels, and twin-reduces the
//! result to a CSP structure.

use crate::csp::{self, CspClass, CspError, CspReduction, CspValidationReport};
use crate::error::GraphError;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::io::{self, IoError, NamedGraph};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Table of the bundled network, one edge per line.
const EMBEDDED_DATA: &str = include_str!("../data/trade_1994.tsv");
const EMBEDDED_VERTICES: usize = 29;
const EMBEDDED_EDGES: usize = 69;
const EMBEDDED_TOTAL: u64 = 8_053_437;

/// Label files reproducing the four published clustering scenarios.
pub const FIG5_LABELS: &str = include_str!("../data/scenario_fig5.tsv");
pub const FIG6_LABELS: &str = include_str!("../data/scenario_fig6.tsv");
pub const FIG7_LABELS: &str = include_str!("../data/scenario_fig7.tsv");
pub const FIG8_LABELS: &str = include_str!("../data/scenario_fig8.tsv");

/// Representative preferences that reproduce the published figure labels.
pub const DEFAULT_PREFER: &[&str] = &["South Africa", "Israel", "Pakistan", "Australasia", "Fiji"];

#[derive(Debug, Error)]
pub enum TradeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Csp(#[from] CspError),
    #[error("embedded dataset corrupt: {0}")]
    CorruptEmbedded(String),
    #[error("edge {u} -- {v} carries no weight")]
    MissingWeight { u: String, v: String },
    #[error("edge {u} -- {v} has zero weight")]
    ZeroWeight { u: String, v: String },
    #[error("unknown country `{0}`")]
    UnknownCountry(String),
    #[error("`{0}` names no cluster or member country")]
    UnknownCluster(String),
    #[error("there is no quotient edge between `{0}` and `{1}`")]
    NoSuchQuotientEdge(String, String),
    #[error("cluster `{0}` mixes class labels")]
    MixedLabels(String),
}

/// An undirected network with named vertices and strictly positive integer
/// edge weights (thousands of USD here).
#[derive(Clone, Debug)]
pub struct WeightedNetwork {
    named: NamedGraph,
    weights: BTreeMap<(Vertex, Vertex), u64>,
    totals: Vec<u64>,
}

impl WeightedNetwork {
    pub fn new(names: Vec<String>, edges: &[(Vertex, Vertex, u64)]) -> Result<Self, TradeError> {
        let mut weights = BTreeMap::new();
        let mut plain = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            if w == 0 {
                return Err(TradeError::ZeroWeight {
                    u: names[u].clone(),
                    v: names[v].clone(),
                });
            }
            weights.insert((u.min(v), u.max(v)), w);
            plain.push((u, v));
        }
        let graph = Graph::from_edges(names.len(), &plain)?;
        let mut totals = vec![0u64; names.len()];
        for (&(u, v), &w) in &weights {
            totals[u] += w;
            totals[v] += w;
        }
        Ok(WeightedNetwork {
            named: NamedGraph { graph, names },
            weights,
            totals,
        })
    }

    pub fn from_named(
        named: NamedGraph,
        weights: &BTreeMap<(Vertex, Vertex), u64>,
    ) -> Result<Self, TradeError> {
        let edges: Result<Vec<_>, _> = named
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| match weights.get(&(u, v)) {
                Some(&w) => Ok((u, v, w)),
                None => Err(TradeError::MissingWeight {
                    u: named.name(u).to_string(),
                    v: named.name(v).to_string(),
                }),
            })
            .collect();
        WeightedNetwork::new(named.names, &edges?)
    }

    pub fn graph(&self) -> &Graph {
        &self.named.graph
    }

    pub fn names(&self) -> &[String] {
        &self.named.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        self.named.name(v)
    }

    pub fn index_of(&self, name: &str) -> Option<Vertex> {
        self.named.index_of(name)
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> u64 {
        *self.weights.get(&(u.min(v), u.max(v))).unwrap_or(&0)
    }

    /// Country's total trade volume.
    pub fn total(&self, v: Vertex) -> u64 {
        self.totals[v]
    }

    pub fn total_trade(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn weighted_edges(&self) -> Vec<(Vertex, Vertex, u64)> {
        self.weights.iter().map(|(&(u, v), &w)| (u, v, w)).collect()
    }

    /// Total trade among the members of `set`.
    pub fn intra_trade(&self, set: VertexSet) -> u64 {
        self.weights
            .iter()
            .filter(|(&(u, v), _)| set.contains(u) && set.contains(v))
            .map(|(_, &w)| w)
            .sum()
    }
}

/// The bundled 29-country network.
pub fn load_embedded_dataset() -> Result<WeightedNetwork, TradeError> {
    let (named, weights) = io::parse_edge_list(EMBEDDED_DATA)?;
    let net = WeightedNetwork::from_named(named, &weights)?;
    if net.graph().order() != EMBEDDED_VERTICES {
        return Err(TradeError::CorruptEmbedded(format!(
            "expected {EMBEDDED_VERTICES} countries, found {}",
            net.graph().order()
        )));
    }
    if net.graph().size() != EMBEDDED_EDGES {
        return Err(TradeError::CorruptEmbedded(format!(
            "expected {EMBEDDED_EDGES} edges, found {}",
            net.graph().size()
        )));
    }
    if net.total_trade() != EMBEDDED_TOTAL {
        return Err(TradeError::CorruptEmbedded(format!(
            "expected total trade {EMBEDDED_TOTAL}, found {}",
            net.total_trade()
        )));
    }
    if !net.graph().is_connected() {
        return Err(TradeError::CorruptEmbedded("network is disconnected".into()));
    }
    Ok(net)
}

/// Pipeline parameters. Volumes are in thousands of USD.
#[derive(Clone, Debug)]
pub struct ClusteringConfig {
    /// Edges below this volume are removed by the prefilter.
    pub edge_min: u64,
    /// Edges of countries below this total volume are removed.
    pub vertex_min: u64,
    /// Connected components above this peer-to-peer volume become clusters.
    pub cluster_threshold: u64,
    /// Pairwise dissimilarity bound for merging singleton clusters.
    pub dissimilarity_threshold: Option<f64>,
    /// Quotient edges to drop, by cluster or member-country name.
    pub drop_edges: Vec<(String, String)>,
}

impl ClusteringConfig {
    pub fn with_cluster_threshold(cluster_threshold: u64) -> Self {
        ClusteringConfig {
            edge_min: 10_000,
            vertex_min: 25_000,
            cluster_threshold,
            dissimilarity_threshold: None,
            drop_edges: Vec::new(),
        }
    }
}

/// Parses a volume in thousands of USD with `M`/`B` sugar: `75M` means
/// 75,000 and `8B` means 8,000,000; a bare integer is taken as-is.
pub fn parse_volume(text: &str) -> Option<u64> {
    let t = text.trim();
    if let Some(m) = t.strip_suffix(['M', 'm']) {
        return m.trim().parse::<u64>().ok().map(|v| v * 1_000);
    }
    if let Some(b) = t.strip_suffix(['B', 'b']) {
        return b.trim().parse::<u64>().ok().map(|v| v * 1_000_000);
    }
    t.replace(',', "").parse().ok()
}

impl WeightedNetwork {
    /// Removes edges under `edge_min` and edges of countries whose total
    /// trade is under `vertex_min`; a country left without any edge keeps
    /// its single highest-weight one (smallest partner index on ties).
    pub fn prefilter(&self, cfg: &ClusteringConfig) -> WeightedNetwork {
        let n = self.graph().order();
        let mut kept: Vec<(Vertex, Vertex, u64)> = Vec::new();
        for (&(u, v), &w) in &self.weights {
            if w >= cfg.edge_min && self.totals[u] >= cfg.vertex_min && self.totals[v] >= cfg.vertex_min
            {
                kept.push((u, v, w));
            }
        }
        let mut has_edge = vec![false; n];
        for &(u, v, _) in &kept {
            has_edge[u] = true;
            has_edge[v] = true;
        }
        for c in 0..n {
            if has_edge[c] || self.totals[c] == 0 {
                continue;
            }
            let best = self
                .weights
                .iter()
                .filter(|(&(u, v), _)| u == c || v == c)
                .max_by_key(|(&(u, v), &w)| (w, std::cmp::Reverse((u, v))))
                .map(|(&(u, v), &w)| (u, v, w))
                .expect("country with positive total has an edge");
            if !kept.contains(&best) {
                kept.push(best);
            }
            has_edge[best.0] = true;
            has_edge[best.1] = true;
        }
        WeightedNetwork::new(self.names().to_vec(), &kept).expect("filtered network is well-formed")
    }

    /// Clusters = connected components of the subnetwork keeping only edges
    /// with volume ≥ `threshold`; singletons allowed. Ordered by smallest
    /// member.
    pub fn threshold_clusters(&self, threshold: u64) -> Vec<VertexSet> {
        let strong: Vec<(Vertex, Vertex)> = self
            .weights
            .iter()
            .filter(|(_, &w)| w >= threshold)
            .map(|(&(u, v), _)| (u, v))
            .collect();
        let g = Graph::from_edges(self.graph().order(), &strong).expect("subgraph of host");
        g.connected_components()
    }

    /// Dissimilarity δ between two countries: each incident edge is scaled
    /// to the fraction of the country's total trade, absent edges count as
    /// zero, and δ sums |w_ik − w_jk| over all third parties k. Ranges over
    /// [0, 2]; 2 exactly when the countries are non-adjacent and share no
    /// neighbor.
    pub fn dissimilarity(&self, i: Vertex, j: Vertex) -> Result<f64, TradeError> {
        if i == j || !self.graph().has_vertex(i) || !self.graph().has_vertex(j) {
            return Err(TradeError::UnknownCountry(format!("pair {i},{j}")));
        }
        let mut sum = 0.0f64;
        for k in self.graph().vertices() {
            if k == i || k == j {
                continue;
            }
            let wi = self.weight(i, k) as f64 / self.totals[i] as f64;
            let wj = self.weight(j, k) as f64 / self.totals[j] as f64;
            sum += (wi - wj).abs();
        }
        Ok(sum)
    }

    /// Refines `base`: countries in singleton clusters with quotient degree
    /// at least two merge when every pairwise dissimilarity inside the new
    /// cluster stays below `threshold`. Qualifying pairs are processed in
    /// decreasing-δ order (name order on ties) under a union-find whose
    /// merges re-validate every cross pair, which keeps barely-qualifying
    /// groups together instead of letting a single close outsider break
    /// them apart. Multi-country base clusters are never touched.
    pub fn dissimilarity_clusters(
        &self,
        base: &[VertexSet],
        threshold: f64,
    ) -> Result<Vec<VertexSet>, TradeError> {
        let quotient = self.quotient_network(base)?;
        let mut candidates: Vec<Vertex> = Vec::new();
        for (ci, members) in quotient.members.iter().enumerate() {
            if members.len() == 1 && quotient.net.graph().degree(ci)? >= 2 {
                candidates.push(members.min_vertex().unwrap());
            }
        }
        let mut pairs: Vec<(f64, Vertex, Vertex)> = Vec::new();
        for (a, &i) in candidates.iter().enumerate() {
            for &j in &candidates[a + 1..] {
                let d = self.dissimilarity(i, j)?;
                if d < threshold {
                    pairs.push((d, i, j));
                }
            }
        }
        pairs.sort_by(|a, b| {
            b.0.partial_cmp(&a.0)
                .expect("dissimilarities are finite")
                .then_with(|| {
                    (self.name(a.1), self.name(a.2)).cmp(&(self.name(b.1), self.name(b.2)))
                })
        });

        let mut group: BTreeMap<Vertex, usize> = candidates.iter().enumerate().map(|(g, &v)| (v, g)).collect();
        let mut members_of: Vec<VertexSet> = candidates.iter().map(|&v| VertexSet::singleton(v)).collect();
        let mut delta: BTreeMap<(Vertex, Vertex), f64> = BTreeMap::new();
        for (a, &i) in candidates.iter().enumerate() {
            for &j in &candidates[a + 1..] {
                delta.insert((i.min(j), i.max(j)), self.dissimilarity(i, j)?);
            }
        }
        for (_, i, j) in pairs {
            let (gi, gj) = (group[&i], group[&j]);
            if gi == gj {
                continue;
            }
            let ok = members_of[gi].iter().all(|x| {
                members_of[gj]
                    .iter()
                    .all(|y| delta[&(x.min(y), x.max(y))] < threshold)
            });
            if !ok {
                continue;
            }
            let merged = members_of[gi].union(members_of[gj]);
            members_of[gi] = merged;
            members_of[gj] = VertexSet::EMPTY;
            for v in merged.iter() {
                group.insert(v, gi);
            }
        }

        let mut out: Vec<VertexSet> = base
            .iter()
            .filter(|c| c.len() > 1)
            .copied()
            .chain(members_of.into_iter().filter(|m| !m.is_empty()))
            .collect();
        // Countries that were periphery candidates (quotient degree one)
        // stay as singletons.
        let covered = out.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(c));
        for v in self.graph().vertices() {
            if !covered.contains(v) {
                out.push(VertexSet::singleton(v));
            }
        }
        out.sort_by_key(|c| c.min_vertex());
        Ok(out)
    }

    /// Quotient of the clustering: one vertex per cluster, adjacency where
    /// any cross trade exists, edge weights summed over cross pairs.
    pub fn quotient_network(&self, clusters: &[VertexSet]) -> Result<QuotientNetwork, TradeError> {
        let k = clusters.len();
        let mut cluster_of = vec![usize::MAX; self.graph().order()];
        for (ci, members) in clusters.iter().enumerate() {
            for v in members.iter() {
                cluster_of[v] = ci;
            }
        }
        let names = cluster_names(self, clusters);
        let mut agg: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (&(u, v), &w) in &self.weights {
            let (cu, cv) = (cluster_of[u], cluster_of[v]);
            if cu != cv {
                *agg.entry((cu.min(cv), cu.max(cv))).or_insert(0) += w;
            }
        }
        let edges: Vec<(Vertex, Vertex, u64)> =
            agg.into_iter().map(|((u, v), w)| (u, v, w)).collect();
        let _ = k;
        let net = WeightedNetwork::new(names, &edges)?;
        Ok(QuotientNetwork {
            net,
            members: clusters.to_vec(),
        })
    }
}

/// Display names for clusters: a singleton keeps its country name; the two
/// recurring regional groupings get their conventional aliases; any other
/// multi-country cluster is the trading core.
fn cluster_names(net: &WeightedNetwork, clusters: &[VertexSet]) -> Vec<String> {
    let mut core_seen = 0usize;
    clusters
        .iter()
        .map(|members| {
            if members.len() == 1 {
                return net.name(members.min_vertex().unwrap()).to_string();
            }
            let names: Vec<&str> = members.iter().map(|v| net.name(v)).collect();
            let mut sorted = names.clone();
            sorted.sort_unstable();
            if sorted == ["Australia", "New Zealand"] {
                "Australasia".to_string()
            } else if sorted == ["Indonesia", "Malaysia", "Philippines", "Singapore"] {
                "Southeast Asia".to_string()
            } else {
                core_seen += 1;
                if core_seen == 1 {
                    "Core".to_string()
                } else {
                    format!("Core {core_seen}")
                }
            }
        })
        .collect()
}

/// A clustered view of a weighted network.
#[derive(Clone, Debug)]
pub struct QuotientNetwork {
    /// Cluster-level network; weights are summed cross-cluster trade.
    pub net: WeightedNetwork,
    /// Original-vertex members per cluster.
    pub members: Vec<VertexSet>,
}

impl QuotientNetwork {
    /// Resolves a cluster by display name or by any member country name.
    pub fn resolve(&self, source: &WeightedNetwork, token: &str) -> Result<Vertex, TradeError> {
        if let Some(ci) = self.net.index_of(token) {
            return Ok(ci);
        }
        if let Some(v) = source.index_of(token) {
            for (ci, members) in self.members.iter().enumerate() {
                if members.contains(v) {
                    return Ok(ci);
                }
            }
        }
        Err(TradeError::UnknownCluster(token.to_string()))
    }

    /// Drops the quotient edge between two clusters, returning its weight.
    pub fn drop_edge(
        &mut self,
        source: &WeightedNetwork,
        a: &str,
        b: &str,
    ) -> Result<u64, TradeError> {
        let (ca, cb) = (self.resolve(source, a)?, self.resolve(source, b)?);
        let w = self.net.weight(ca, cb);
        if ca == cb || w == 0 {
            return Err(TradeError::NoSuchQuotientEdge(a.to_string(), b.to_string()));
        }
        let edges: Vec<(Vertex, Vertex, u64)> = self
            .net
            .weighted_edges()
            .into_iter()
            .filter(|&(u, v, _)| (u.min(v), u.max(v)) != (ca.min(cb), ca.max(cb)))
            .collect();
        self.net = WeightedNetwork::new(self.net.names().to_vec(), &edges)?;
        Ok(w)
    }

    /// Lifts per-country CSP classes to clusters; members must agree.
    pub fn cluster_classes(&self, country_classes: &[CspClass]) -> Result<Vec<CspClass>, TradeError> {
        self.members
            .iter()
            .enumerate()
            .map(|(ci, members)| {
                let mut classes = members.iter().map(|v| country_classes[v]);
                let first = classes.next().expect("non-empty cluster");
                if classes.all(|c| c == first) {
                    Ok(first)
                } else {
                    Err(TradeError::MixedLabels(self.net.name(ci).to_string()))
                }
            })
            .collect()
    }
}

/// One intermediate graph of the pipeline, in name space.
#[derive(Clone, Debug, Serialize)]
pub struct StageReport {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    /// vertex → class (CSP class or cluster name), when the stage has one.
    pub classes: Option<BTreeMap<String, String>>,
}

fn stage_of(name: &str, graph: &Graph, names: &[String], classes: Option<BTreeMap<String, String>>) -> StageReport {
    StageReport {
        name: name.to_string(),
        vertices: names.to_vec(),
        edges: graph
            .edges()
            .into_iter()
            .map(|(u, v)| (names[u].clone(), names[v].clone()))
            .collect(),
        classes,
    }
}

/// Serializable pipeline report: every intermediate graph, the validation
/// verdict, the final structure and the absorption map.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub stages: Vec<StageReport>,
    pub validation: CspValidationReport,
    pub structure: Option<StageReport>,
    pub absorption: Option<BTreeMap<String, String>>,
}

/// Full pipeline outcome, including typed intermediates for callers.
#[derive(Debug)]
pub struct PipelineRun {
    pub report: PipelineReport,
    pub filtered: WeightedNetwork,
    pub clusters: Vec<VertexSet>,
    pub quotient: QuotientNetwork,
    pub quotient_classes: Vec<CspClass>,
    pub reduction: Option<CspReduction>,
}

/// Executes prefilter → threshold clusters → optional dissimilarity merge →
/// quotient → optional quotient-edge drops → labels → validate → reduce.
/// A labeling that fails validation yields a report carrying the violations
/// instead of an error.
pub fn run_pipeline(
    raw: &WeightedNetwork,
    cfg: &ClusteringConfig,
    country_classes: &[CspClass],
    prefer: &[String],
) -> Result<PipelineRun, TradeError> {
    let mut stages = Vec::new();
    stages.push(stage_of("input", raw.graph(), raw.names(), None));

    let filtered = raw.prefilter(cfg);
    stages.push(stage_of("prefilter", filtered.graph(), filtered.names(), None));

    let base = filtered.threshold_clusters(cfg.cluster_threshold);
    let clusters = match cfg.dissimilarity_threshold {
        Some(th) => filtered.dissimilarity_clusters(&base, th)?,
        None => base.clone(),
    };

    let mut quotient = filtered.quotient_network(&clusters)?;
    {
        let mut map = BTreeMap::new();
        for (ci, members) in quotient.members.iter().enumerate() {
            for v in members.iter() {
                map.insert(filtered.name(v).to_string(), quotient.net.name(ci).to_string());
            }
        }
        let stage_name = if cfg.dissimilarity_threshold.is_some() {
            "dissimilarity-clusters"
        } else {
            "threshold-clusters"
        };
        stages.push(stage_of(stage_name, filtered.graph(), filtered.names(), Some(map)));
    }
    stages.push(stage_of("quotient", quotient.net.graph(), quotient.net.names(), None));

    for (a, b) in &cfg.drop_edges {
        quotient.drop_edge(&filtered, a, b)?;
    }
    if !cfg.drop_edges.is_empty() {
        stages.push(stage_of("drop-edges", quotient.net.graph(), quotient.net.names(), None));
    }

    let quotient_classes = quotient.cluster_classes(country_classes)?;
    let class_map: BTreeMap<String, String> = quotient
        .net
        .names()
        .iter()
        .zip(quotient_classes.iter())
        .map(|(n, c)| (n.clone(), c.name().to_string()))
        .collect();
    stages.push(stage_of("labeled", quotient.net.graph(), quotient.net.names(), Some(class_map)));

    let validation = csp::validate(quotient.net.graph(), &quotient_classes)?;
    if !validation.is_csp_network {
        return Ok(PipelineRun {
            report: PipelineReport {
                stages,
                validation,
                structure: None,
                absorption: None,
            },
            filtered,
            clusters,
            quotient,
            quotient_classes,
            reduction: None,
        });
    }

    let prefer_idx: Vec<Vertex> = prefer
        .iter()
        .filter_map(|p| quotient.resolve(&filtered, p).ok())
        .collect();
    let reduction = csp::reduce(quotient.net.graph(), &quotient_classes, &prefer_idx)?;

    for (i, pass) in reduction.passes.iter().enumerate() {
        let survivors = VertexSet::from_iter(pass.survivors.iter().copied());
        let (g, back) = quotient.net.graph().induced(survivors)?;
        let names: Vec<String> = back.iter().map(|&v| quotient.net.name(v).to_string()).collect();
        let classes: BTreeMap<String, String> = back
            .iter()
            .map(|&v| {
                (
                    quotient.net.name(v).to_string(),
                    quotient_classes[v].name().to_string(),
                )
            })
            .collect();
        stages.push(stage_of(
            &format!("reduce-{}-{}", i + 1, pass.rule.name()),
            &g,
            &names,
            Some(classes),
        ));
    }

    let structure_names: Vec<String> = reduction
        .kept
        .iter()
        .map(|&v| quotient.net.name(v).to_string())
        .collect();
    let structure_classes: BTreeMap<String, String> = structure_names
        .iter()
        .zip(reduction.classes.iter())
        .map(|(n, c)| (n.clone(), c.name().to_string()))
        .collect();
    let structure = stage_of(
        "structure",
        &reduction.graph,
        &structure_names,
        Some(structure_classes),
    );
    let absorption: BTreeMap<String, String> = (0..quotient.net.graph().order())
        .map(|v| {
            (
                quotient.net.name(v).to_string(),
                quotient.net.name(reduction.absorbed_into[v]).to_string(),
            )
        })
        .collect();

    Ok(PipelineRun {
        report: PipelineReport {
            stages,
            validation,
            structure: Some(structure),
            absorption: Some(absorption),
        },
        filtered,
        clusters,
        quotient,
        quotient_classes,
        reduction: Some(reduction),
    })
}

/// The four published clustering scenarios.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Scenario {
    Fig5,
    Fig6,
    Fig7,
    Fig8,
}

impl Scenario {
    pub fn from_name(name: &str) -> Option<Scenario> {
        match name {
            "fig5" => Some(Scenario::Fig5),
            "fig6" => Some(Scenario::Fig6),
            "fig7" => Some(Scenario::Fig7),
            "fig8" => Some(Scenario::Fig8),
            _ => None,
        }
    }

    pub fn config(self) -> ClusteringConfig {
        match self {
            Scenario::Fig5 => ClusteringConfig::with_cluster_threshold(75_000),
            Scenario::Fig6 => ClusteringConfig::with_cluster_threshold(125_000),
            Scenario::Fig7 => ClusteringConfig {
                dissimilarity_threshold: Some(1.0),
                ..ClusteringConfig::with_cluster_threshold(500_000)
            },
            Scenario::Fig8 => ClusteringConfig {
                dissimilarity_threshold: Some(1.0),
                drop_edges: vec![("Australasia".to_string(), "India".to_string())],
                ..ClusteringConfig::with_cluster_threshold(500_000)
            },
        }
    }

    pub fn labels_text(self) -> &'static str {
        match self {
            Scenario::Fig5 => FIG5_LABELS,
            Scenario::Fig6 => FIG6_LABELS,
            Scenario::Fig7 => FIG7_LABELS,
            Scenario::Fig8 => FIG8_LABELS,
        }
    }

    /// Per-country classes for this scenario against `net`.
    pub fn country_classes(self, net: &WeightedNetwork) -> Result<Vec<CspClass>, TradeError> {
        let named = NamedGraph {
            graph: net.graph().clone(),
            names: net.names().to_vec(),
        };
        let labels = io::parse_partition(self.labels_text(), &named)?;
        Ok(io::csp_classes(&labels)?)
    }
}

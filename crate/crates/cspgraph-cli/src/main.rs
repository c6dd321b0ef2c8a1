//! Command-line interface: twin classification, CSP validation/reduction/
//! decomposition, exact small-order enumeration, and the bundled 1994
//! trade-network pipeline.
//!
//! Exit codes: 0 on success, 1 when a CSP validation fails (the report is
//! still emitted), 2 on usage or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cspgraph::census::{self, StructureRoute, TwinFreeTables};
use cspgraph::csp::{self, CspClass, CspError};
use cspgraph::graph::{Graph, Vertex, VertexSet};
use cspgraph::io::{self, NamedGraph};
use cspgraph::trade::{self, ClusteringConfig, Scenario, WeightedNetwork};
use cspgraph::twin::{self, TwinKind};
use serde::Serialize;
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cspgraph", version, about = "Twin subgraphs and core-semiperiphery-periphery structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum KindArg {
    F,
    T,
}

impl From<KindArg> for TwinKind {
    fn from(k: KindArg) -> TwinKind {
        match k {
            KindArg::F => TwinKind::F,
            KindArg::T => TwinKind::T,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Basic facts about an edge-list graph
    Graph {
        #[command(subcommand)]
        sub: GraphCmd,
    },
    /// Classify twin subgraphs of a fixed pattern order
    Twins(TwinsArgs),
    /// Validate, reduce or decompose a labeled CSP graph
    Csp {
        #[command(subcommand)]
        sub: CspCmd,
    },
    /// Exact censuses and CSP structure counts for small orders
    Enumerate(EnumerateArgs),
    /// The 1994 Asia-Africa-Oceania trade pipeline
    Trade(TradeArgs),
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Order, size, degrees and components
    Info {
        edges: String,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
}

#[derive(Args)]
struct TwinsArgs {
    /// Twin notion: f (false/F-twins) or t (true/T-twins)
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Order of the pattern subgraphs to classify
    #[arg(long, value_name = "K")]
    pattern_order: usize,
    edges: String,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
}

#[derive(Subcommand)]
enum CspCmd {
    /// Check the CSP network and structure conditions
    Validate(CspArgs),
    /// Collapse twin substructures to a CSP structure
    Reduce(CspReduceArgs),
    /// Split a CSP structure into (C0, C1, S, P)
    Decompose(CspArgs),
}

#[derive(Args)]
struct CspArgs {
    edges: String,
    partition: String,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
}

#[derive(Args)]
struct CspReduceArgs {
    edges: String,
    partition: String,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
    /// Comma-separated vertex names preferred as twin-class representatives
    #[arg(long, value_delimiter = ',')]
    prefer: Vec<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_name = "N")]
    order: usize,
    /// t: no true-twin vertices; s: no F-twin subgraphs; z: CSP structure
    /// counts; csp: explicit CSP structure enumeration
    #[arg(long, default_value = "z")]
    what: String,
    /// Enumerate structures by filtering all labelings instead of composing
    #[arg(long)]
    brute_force: bool,
    /// Include canonical witnesses in the output
    #[arg(long)]
    witnesses: bool,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
}

#[derive(Args)]
struct TradeArgs {
    /// Edge list overriding the bundled dataset
    #[arg(long)]
    edges: Option<String>,
    /// One of the published scenarios: fig5, fig6, fig7, fig8
    #[arg(long, conflicts_with_all = ["cluster_threshold", "dissimilarity", "drop_edge"])]
    scenario: Option<String>,
    /// Peer-to-peer trade threshold for clustering, e.g. 75M
    #[arg(long, value_name = "VOLUME")]
    cluster_threshold: Option<String>,
    /// Dissimilarity threshold in [0, 2] for merging singleton clusters
    #[arg(long, value_name = "DELTA")]
    dissimilarity: Option<f64>,
    /// Quotient edge to drop, as `A,B`; repeatable
    #[arg(long, value_name = "A,B")]
    drop_edge: Vec<String>,
    /// Partition file assigning each country a CSP class
    #[arg(long)]
    labels: Option<String>,
    /// Comma-separated cluster names preferred as representatives
    #[arg(long, value_delimiter = ',')]
    prefer: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

/// Input/usage error (exit 2) or validation failure (exit 1, report already
/// printed).
enum Failure {
    Input(String),
    Validation,
}

impl From<io::IoError> for Failure {
    fn from(e: io::IoError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<CspError> for Failure {
    fn from(e: CspError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<census::CensusError> for Failure {
    fn from(e: census::CensusError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<trade::TradeError> for Failure {
    fn from(e: trade::TradeError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<cspgraph::GraphError> for Failure {
    fn from(e: cspgraph::GraphError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn load_graph(path: &str) -> Result<NamedGraph, Failure> {
    let text = read_file(path)?;
    let (named, _) = io::parse_edge_list(&text)?;
    Ok(named)
}

fn load_csp_input(edges: &str, partition: &str) -> Result<(NamedGraph, Vec<CspClass>), Failure> {
    let named = load_graph(edges)?;
    let labels = io::parse_partition(&read_file(partition)?, &named)?;
    let classes = io::csp_classes(&labels)?;
    Ok((named, classes))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Graph { sub } => match sub {
            GraphCmd::Info { edges, emit } => graph_info(&edges, emit),
        },
        Command::Twins(args) => twins_cmd(args),
        Command::Csp { sub } => match sub {
            CspCmd::Validate(args) => csp_validate(args),
            CspCmd::Reduce(args) => csp_reduce(args),
            CspCmd::Decompose(args) => csp_decompose(args),
        },
        Command::Enumerate(args) => enumerate_cmd(args),
        Command::Trade(args) => trade_cmd(args),
    }
}

#[derive(Serialize)]
struct GraphInfo {
    order: usize,
    size: usize,
    connected: bool,
    components: Vec<Vec<String>>,
    degrees: BTreeMap<String, usize>,
}

fn graph_info(path: &str, emit: Emit) -> Result<(), Failure> {
    let named = load_graph(path)?;
    let g = &named.graph;
    let info = GraphInfo {
        order: g.order(),
        size: g.size(),
        connected: g.is_connected(),
        components: g
            .connected_components()
            .into_iter()
            .map(|c| c.iter().map(|v| named.name(v).to_string()).collect())
            .collect(),
        degrees: g
            .vertices()
            .map(|v| (named.name(v).to_string(), g.degree(v).unwrap()))
            .collect(),
    };
    match emit {
        Emit::Json => print_json(&info),
        _ => {
            println!("order: {}", info.order);
            println!("size: {}", info.size);
            println!("connected: {}", info.connected);
            for (i, comp) in info.components.iter().enumerate() {
                println!("component {}: {}", i + 1, comp.join(", "));
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PatternClasses {
    pattern: PatternJson,
    classes: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct PatternJson {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
}

#[derive(Serialize)]
struct TwinsReport {
    kind: String,
    pattern_order: usize,
    patterns: Vec<PatternClasses>,
}

fn twins_cmd(args: TwinsArgs) -> Result<(), Failure> {
    let named = load_graph(&args.edges)?;
    let g = &named.graph;
    let k = args.pattern_order;
    if k == 0 || k > g.order() {
        return Err(Failure::Input(format!(
            "pattern order must be in 1..={}",
            g.order()
        )));
    }
    let subset_count = (0..k).fold(1u128, |acc, i| acc * (g.order() - i) as u128 / (i + 1) as u128);
    if subset_count > 200_000 {
        return Err(Failure::Input(format!(
            "{subset_count} induced subsets of order {k}; pick a smaller pattern order"
        )));
    }
    let kind: TwinKind = args.kind.into();
    // Distinct patterns present as induced subgraphs, then classes per
    // pattern.
    let mut patterns: BTreeMap<cspgraph::CanonicalForm, Graph> = BTreeMap::new();
    for set in all_subsets_of_size(g, k) {
        let (h, _) = g.induced(set)?;
        let form = cspgraph::canon::canonical_form_bounded(&h, k.max(1))?;
        patterns.entry(form).or_insert(h);
    }
    let mut out = Vec::new();
    for (form, pattern) in patterns {
        let classes = twin::twin_classes(g, kind, &pattern)?;
        out.push(PatternClasses {
            pattern: PatternJson {
                order: form.order(),
                edges: form.edges(),
            },
            classes: classes
                .iter()
                .map(|c| {
                    c.members
                        .iter()
                        .map(|m| m.iter().map(|v| named.name(v).to_string()).collect())
                        .collect()
                })
                .collect(),
        });
    }
    let report = TwinsReport {
        kind: kind.letter().to_string(),
        pattern_order: k,
        patterns: out,
    };
    match args.emit {
        Emit::Json => print_json(&report),
        _ => {
            for p in &report.patterns {
                println!(
                    "pattern order {} edges {:?}:",
                    p.pattern.order, p.pattern.edges
                );
                for (i, class) in p.classes.iter().enumerate() {
                    let members: Vec<String> =
                        class.iter().map(|m| format!("{{{}}}", m.join(", "))).collect();
                    println!("  class {}: {}", i + 1, members.join(" "));
                }
            }
        }
    }
    Ok(())
}

fn all_subsets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(VertexSet::from_iter(idx.iter().copied()));
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

fn csp_validate(args: CspArgs) -> Result<(), Failure> {
    let (named, classes) = load_csp_input(&args.edges, &args.partition)?;
    let report = csp::validate(&named.graph, &classes)?;
    match args.emit {
        Emit::Json => print_json(&report),
        Emit::Dot => print!("{}", io::to_dot(&named.graph, &named.names, Some(&classes))),
        Emit::Text => {
            println!("csp network: {}", report.is_csp_network);
            println!("csp structure: {}", report.is_csp_structure);
            for v in &report.violations {
                println!("violation: {v:?}");
            }
        }
    }
    if report.is_csp_network {
        Ok(())
    } else {
        Err(Failure::Validation)
    }
}

#[derive(Serialize)]
struct ReduceReport {
    structure: StageJson,
    absorption: BTreeMap<String, String>,
    passes: Vec<PassJson>,
}

#[derive(Serialize)]
struct StageJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    classes: BTreeMap<String, String>,
}

#[derive(Serialize)]
struct PassJson {
    rule: String,
    removed: Vec<String>,
}

fn csp_reduce(args: CspReduceArgs) -> Result<(), Failure> {
    let (named, classes) = load_csp_input(&args.edges, &args.partition)?;
    let prefer: Vec<Vertex> = args
        .prefer
        .iter()
        .filter_map(|p| named.index_of(p))
        .collect();
    let reduction = match csp::reduce(&named.graph, &classes, &prefer) {
        Ok(r) => r,
        Err(CspError::NotANetwork(report)) => {
            print_json(&report);
            return Err(Failure::Validation);
        }
        Err(e) => return Err(e.into()),
    };
    let names: Vec<String> = reduction
        .kept
        .iter()
        .map(|&v| named.name(v).to_string())
        .collect();
    let report = ReduceReport {
        structure: StageJson {
            vertices: names.clone(),
            edges: reduction
                .graph
                .edges()
                .into_iter()
                .map(|(u, v)| (names[u].clone(), names[v].clone()))
                .collect(),
            classes: names
                .iter()
                .zip(reduction.classes.iter())
                .map(|(n, c)| (n.clone(), c.name().to_string()))
                .collect(),
        },
        absorption: (0..named.graph.order())
            .map(|v| {
                (
                    named.name(v).to_string(),
                    named.name(reduction.absorbed_into[v]).to_string(),
                )
            })
            .collect(),
        passes: reduction
            .passes
            .iter()
            .map(|p| PassJson {
                rule: p.rule.name().to_string(),
                removed: p.removed.iter().map(|&v| named.name(v).to_string()).collect(),
            })
            .collect(),
    };
    match args.emit {
        Emit::Json => print_json(&report),
        Emit::Dot => print!(
            "{}",
            io::to_dot(&reduction.graph, &names, Some(&reduction.classes))
        ),
        Emit::Text => {
            println!("structure vertices: {}", report.structure.vertices.join(", "));
            for (a, b) in &report.structure.edges {
                println!("edge: {a} -- {b}");
            }
            for (v, r) in &report.absorption {
                if v != r {
                    println!("absorbed: {v} -> {r}");
                }
            }
        }
    }
    Ok(())
}

fn csp_decompose(args: CspArgs) -> Result<(), Failure> {
    let (named, classes) = load_csp_input(&args.edges, &args.partition)?;
    let decomposition = match csp::decompose(&named.graph, &classes) {
        Ok(d) => d,
        Err(CspError::NotAStructure(report)) => {
            print_json(&report);
            return Err(Failure::Validation);
        }
        Err(e) => return Err(e.into()),
    };
    #[derive(Serialize)]
    struct DecompositionJson {
        c0: Vec<String>,
        c1: Vec<String>,
        s: Vec<String>,
        p: Vec<String>,
        attach: BTreeMap<String, String>,
        n0: usize,
        n1: usize,
        nc: usize,
        ns: usize,
        np: usize,
    }
    let name = |v: &Vertex| named.name(*v).to_string();
    let json = DecompositionJson {
        c0: decomposition.c0.iter().map(name).collect(),
        c1: decomposition.c1.iter().map(name).collect(),
        s: decomposition.s.iter().map(name).collect(),
        p: decomposition.p.iter().map(name).collect(),
        attach: decomposition
            .attach
            .iter()
            .map(|&(a, p)| (named.name(a).to_string(), named.name(p).to_string()))
            .collect(),
        n0: decomposition.n0,
        n1: decomposition.n1,
        nc: decomposition.nc,
        ns: decomposition.ns,
        np: decomposition.np,
    };
    match args.emit {
        Emit::Json => print_json(&json),
        _ => {
            println!("C0: {}", json.c0.join(", "));
            println!("C1: {}", json.c1.join(", "));
            println!("S: {}", json.s.join(", "));
            println!("P: {}", json.p.join(", "));
            println!(
                "counts: n0={} n1={} nc={} ns={} np={}",
                json.n0, json.n1, json.nc, json.ns, json.np
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct WitnessJson {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    classes: Vec<String>,
}

#[derive(Serialize)]
struct EnumerateReport {
    n: usize,
    counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z_by_core: Option<BTreeMap<usize, u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<WitnessJson>>,
}

fn enumerate_cmd(args: EnumerateArgs) -> Result<(), Failure> {
    let n = args.order;
    let report = match args.what.as_str() {
        "t" => {
            let graphs = census::graphs_without_true_twins(n)?;
            let mut counts = BTreeMap::new();
            counts.insert("all_graphs".into(), census::enumerate_graphs(n)?.len() as u64);
            counts.insert("t".into(), graphs.len() as u64);
            EnumerateReport {
                n,
                counts,
                z_by_core: None,
                witnesses: witness_list(&graphs, args.witnesses),
            }
        }
        "s" => {
            let graphs = census::graphs_without_f_twins(n)?;
            let mut counts = BTreeMap::new();
            counts.insert("all_graphs".into(), census::enumerate_graphs(n)?.len() as u64);
            counts.insert("s".into(), graphs.len() as u64);
            EnumerateReport {
                n,
                counts,
                z_by_core: None,
                witnesses: witness_list(&graphs, args.witnesses),
            }
        }
        "z" => {
            let tables = TwinFreeTables::for_order(n)?;
            let result = census::csp_counts(n, &tables)?;
            EnumerateReport {
                n,
                counts: result.counts,
                z_by_core: Some(result.z_by_core),
                witnesses: None,
            }
        }
        "csp" => {
            let route = if args.brute_force {
                StructureRoute::BruteForce
            } else {
                StructureRoute::Constructive
            };
            let forms = census::enumerate_csp_structures(n, route)?;
            let mut counts = BTreeMap::new();
            counts.insert("z".into(), forms.len() as u64);
            let witnesses = args.witnesses.then(|| {
                forms
                    .iter()
                    .map(|form| {
                        let (g, classes) = form.to_graph();
                        WitnessJson {
                            order: g.order(),
                            edges: g.edges(),
                            classes,
                        }
                    })
                    .collect()
            });
            EnumerateReport {
                n,
                counts,
                z_by_core: None,
                witnesses,
            }
        }
        other => {
            return Err(Failure::Input(format!(
                "unknown census kind `{other}` (expected t, s, z or csp)"
            )))
        }
    };
    match args.emit {
        Emit::Json => print_json(&report),
        _ => {
            for (k, v) in &report.counts {
                println!("{k}: {v}");
            }
            if let Some(zc) = &report.z_by_core {
                for (nc, z) in zc {
                    println!("z[nc={nc}]: {z}");
                }
            }
        }
    }
    Ok(())
}

fn witness_list(graphs: &[Graph], include: bool) -> Option<Vec<WitnessJson>> {
    include.then(|| {
        graphs
            .iter()
            .map(|g| WitnessJson {
                order: g.order(),
                edges: g.edges(),
                classes: Vec::new(),
            })
            .collect()
    })
}

fn trade_cmd(args: TradeArgs) -> Result<(), Failure> {
    let raw = match &args.edges {
        Some(path) => {
            let text = read_file(path)?;
            let (named, weights) = io::parse_edge_list(&text)?;
            WeightedNetwork::from_named(named, &weights)?
        }
        None => trade::load_embedded_dataset()?,
    };

    let scenario = match &args.scenario {
        Some(name) => Some(
            Scenario::from_name(name)
                .ok_or_else(|| Failure::Input(format!("unknown scenario `{name}`")))?,
        ),
        None => None,
    };

    let cfg = match (scenario, &args.cluster_threshold) {
        (Some(s), _) => s.config(),
        (None, Some(vol)) => {
            let threshold = trade::parse_volume(vol)
                .ok_or_else(|| Failure::Input(format!("bad volume `{vol}`")))?;
            let mut cfg = ClusteringConfig::with_cluster_threshold(threshold);
            cfg.dissimilarity_threshold = args.dissimilarity;
            for spec in &args.drop_edge {
                let (a, b) = spec
                    .split_once(',')
                    .ok_or_else(|| Failure::Input(format!("bad drop-edge `{spec}`")))?;
                cfg.drop_edges.push((a.trim().to_string(), b.trim().to_string()));
            }
            cfg
        }
        (None, None) => {
            return Err(Failure::Input(
                "either --scenario or --cluster-threshold is required".into(),
            ))
        }
    };

    let country_classes = match (&args.labels, scenario) {
        (Some(path), _) => {
            let named = NamedGraph {
                graph: raw.graph().clone(),
                names: raw.names().to_vec(),
            };
            let labels = io::parse_partition(&read_file(path)?, &named)?;
            io::csp_classes(&labels)?
        }
        (None, Some(s)) => s.country_classes(&raw)?,
        (None, None) => {
            return Err(Failure::Input(
                "either --labels or --scenario must supply class labels".into(),
            ))
        }
    };

    let prefer: Vec<String> = match &args.prefer {
        Some(list) => list.clone(),
        None => trade::DEFAULT_PREFER.iter().map(|s| s.to_string()).collect(),
    };

    let run = trade::run_pipeline(&raw, &cfg, &country_classes, &prefer)?;

    match args.emit {
        Emit::Json => print_json(&run.report),
        Emit::Dot => {
            if let Some(reduction) = &run.reduction {
                let names: Vec<String> = reduction
                    .kept
                    .iter()
                    .map(|&v| run.quotient.net.name(v).to_string())
                    .collect();
                print!(
                    "{}",
                    io::to_dot(&reduction.graph, &names, Some(&reduction.classes))
                );
            } else {
                print!(
                    "{}",
                    io::to_dot(
                        run.quotient.net.graph(),
                        run.quotient.net.names(),
                        Some(&run.quotient_classes)
                    )
                );
            }
        }
        Emit::Text => {
            for stage in &run.report.stages {
                println!(
                    "stage {}: {} vertices, {} edges",
                    stage.name,
                    stage.vertices.len(),
                    stage.edges.len()
                );
            }
            println!("csp network: {}", run.report.validation.is_csp_network);
            if let Some(structure) = &run.report.structure {
                let classes = structure.classes.as_ref().expect("structure classes");
                let listing: Vec<String> = structure
                    .vertices
                    .iter()
                    .map(|v| format!("{v} ({})", classes[v]))
                    .collect();
                println!("structure: {}", listing.join(", "));
                for (a, b) in &structure.edges {
                    println!("edge: {a} -- {b}");
                }
                if let Some(absorption) = &run.report.absorption {
                    for (v, r) in absorption {
                        if v != r {
                            println!("absorbed: {v} -> {r}");
                        }
                    }
                }
            }
        }
    }

    if run.report.validation.is_csp_network {
        Ok(())
    } else {
        Err(Failure::Validation)
    }
}

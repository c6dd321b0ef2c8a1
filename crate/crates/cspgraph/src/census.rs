//! Exhaustive censuses of small graphs and exact CSP structure counts.
//!
//! Plain graphs are enumerated by walking all labeled adjacency masks and
//! deduplicating canonical forms; the twin-free counts t_n (no true-twin
//! vertices) and s_n (no proper F-twin subgraphs of any order) feed the
//! closed-form CSP structure counts x_n, y_n, z_n and the per-core-count
//! refinement z_{n,n_c}. CSP structures themselves can be enumerated two
//! independent ways — filtering every 3-labeling of the census through the
//! validator, or composing twin-free parts — and the two routes must agree.

use crate::canon::{self, CanonicalForm};
use crate::csp::{self, CspClass, CspError};
use crate::error::GraphError;
use crate::graph::Graph;
use crate::twin::{self, TwinKind};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Largest order for the plain-graph census (2^21 labeled graphs).
pub const MAX_CENSUS_ORDER: usize = 7;
/// Largest order for the F-twin-free count; the subset-pair scan is heavier.
pub const MAX_S_ORDER: usize = 6;
/// Largest order for the CSP structure count z_n; its t-inputs stay within
/// the census bound.
pub const MAX_Z_ORDER: usize = 8;
/// Largest order for explicit CSP structure enumeration.
pub const MAX_STRUCTURE_ORDER: usize = 6;

/// Environment variable fixing the census worker count.
pub const WORKERS_ENV: &str = "CSPGRAPH_WORKERS";

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Csp(#[from] CspError),
    #[error("{what} supports orders up to {bound}, got {order}")]
    OrderBound {
        what: &'static str,
        order: usize,
        bound: usize,
    },
    #[error("csp counts for order {order} need t_0..t_{need_t} and s_0..s_{need_s}")]
    MissingTables {
        order: usize,
        need_t: usize,
        need_s: usize,
    },
}

fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask & (1u64 << bit) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("mask within order")
}

/// All non-isomorphic simple graphs of order `n`, as sorted canonical forms.
/// Labeled enumeration over the adjacency-bit space, parallelized by mask
/// range and merged by canonical dedup.
pub fn enumerate_graphs(n: usize) -> Result<Vec<CanonicalForm>, CensusError> {
    if n > MAX_CENSUS_ORDER {
        return Err(CensusError::OrderBound {
            what: "graph census",
            order: n,
            bound: MAX_CENSUS_ORDER,
        });
    }
    if n == 0 {
        return Ok(vec![canon::canonical_form(&Graph::empty(0)?)?]);
    }
    let pair_bits = n * (n - 1) / 2;
    let total: u64 = 1u64 << pair_bits;
    let workers = worker_count().min(total as usize).max(1);
    let chunk = total.div_ceil(workers as u64);
    let mut merged: BTreeSet<CanonicalForm> = BTreeSet::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = chunk * w as u64;
                let hi = (lo + chunk).min(total);
                scope.spawn(move || {
                    let mut local: BTreeSet<CanonicalForm> = BTreeSet::new();
                    for mask in lo..hi {
                        let g = graph_from_mask(n, mask);
                        let form = canon::canonical_form_bounded(&g, n.max(1))
                            .expect("census order within bound");
                        local.insert(form);
                    }
                    local
                })
            })
            .collect();
        for handle in handles {
            merged.extend(handle.join().expect("census worker"));
        }
    });
    Ok(merged.into_iter().collect())
}

/// Census as decoded graphs (canonical representatives).
pub fn census_graphs(n: usize) -> Result<Vec<Graph>, CensusError> {
    Ok(enumerate_graphs(n)?
        .into_iter()
        .map(|f| f.to_graph().0)
        .collect())
}

/// Number of order-`n` graphs without true-twin vertices.
pub fn count_t(n: usize) -> Result<u64, CensusError> {
    Ok(graphs_without_true_twins(n)?.len() as u64)
}

pub fn graphs_without_true_twins(n: usize) -> Result<Vec<Graph>, CensusError> {
    Ok(census_graphs(n)?
        .into_iter()
        .filter(|g| twin::true_twin_vertices(g).is_empty())
        .collect())
}

/// Number of order-`n` graphs without proper F-twin subgraphs of any order.
pub fn count_s(n: usize) -> Result<u64, CensusError> {
    Ok(graphs_without_f_twins(n)?.len() as u64)
}

pub fn graphs_without_f_twins(n: usize) -> Result<Vec<Graph>, CensusError> {
    if n > MAX_S_ORDER {
        return Err(CensusError::OrderBound {
            what: "F-twin-free census",
            order: n,
            bound: MAX_S_ORDER,
        });
    }
    Ok(census_graphs(n)?
        .into_iter()
        .filter(|g| !twin::has_proper_twin(g, TwinKind::F, None))
        .collect())
}

/// The t and s inputs to the CSP counting formulas. Index 0 carries the
/// null-graph convention t_0 = s_0 = 1, which the z_{n,n_c} summation
/// bounds require (cross-checked against the totals by the test suite).
#[derive(Clone, Debug)]
pub struct TwinFreeTables {
    pub t: Vec<u64>,
    pub s: Vec<u64>,
}

impl TwinFreeTables {
    /// Computes t_1..t_max_t and s_1..s_max_s from the census.
    pub fn compute(max_t: usize, max_s: usize) -> Result<Self, CensusError> {
        let mut t = vec![1u64];
        for k in 1..=max_t {
            t.push(count_t(k)?);
        }
        let mut s = vec![1u64];
        for k in 1..=max_s {
            s.push(count_s(k)?);
        }
        Ok(TwinFreeTables { t, s })
    }

    /// Tables sufficient for `csp_counts(n)`: t up to n−2 and s up to
    /// ⌊(n−1)/2⌋.
    pub fn for_order(n: usize) -> Result<Self, CensusError> {
        Self::compute(n.saturating_sub(2), n.saturating_sub(1) / 2)
    }
}

/// Exact counts attached to one order.
#[derive(Clone, Debug, Serialize)]
pub struct CensusResult {
    pub n: usize,
    /// Named counts; x, y, z for CSP counts, plus t/s/all_graphs where the
    /// census bounds allow.
    pub counts: BTreeMap<String, u64>,
    /// z_{n,n_c} per core count n_c.
    pub z_by_core: BTreeMap<usize, u64>,
    /// Canonical forms of enumerated structures, when requested.
    pub witnesses: Option<Vec<CanonicalForm>>,
}

#[allow(clippy::manual_div_ceil)] // (n+1)/2 mirrors the formula's index arithmetic
fn x_count(n: usize, tables: &TwinFreeTables) -> u64 {
    if n % 2 == 1 {
        (1..=(n - 1) / 2)
            .map(|k| tables.t[2 * k - 1] * tables.s[(n + 1) / 2 - k])
            .sum()
    } else {
        (1..=(n - 2) / 2)
            .map(|k| tables.t[2 * k] * tables.s[n / 2 - k])
            .sum()
    }
}

/// z_{n,n_c}: structures on `n` vertices with `n_c` cores. The integer-part
/// bounds reach index 0 of the t-table, where the null-graph convention
/// applies.
fn z_by_core_count(n: usize, nc: usize, tables: &TwinFreeTables) -> u64 {
    let rem = n - nc;
    if rem % 2 == 1 {
        let kmax = (nc.saturating_sub(1) / 2).min((rem - 3) / 2);
        (0..=kmax)
            .map(|k| tables.t[nc - 2 * k - 1] * tables.s[(rem - 1) / 2 - k])
            .sum()
    } else {
        let kmax = (nc / 2).min(rem / 2 - 1);
        (0..=kmax)
            .map(|k| tables.t[nc - 2 * k] * tables.s[rem / 2 - k])
            .sum()
    }
}

/// Exact CSP structure counts for order `n` (3 ≤ n ≤ 8): x_n (no
/// core-attached periphery), y_n (some core carries a leaf, computed by the
/// z-recursion with z_1 = z_2 = 0), z_n = x_n + y_n, and the per-core-count
/// split z_{n,n_c}.
pub fn csp_counts(n: usize, tables: &TwinFreeTables) -> Result<CensusResult, CensusError> {
    if !(3..=MAX_Z_ORDER).contains(&n) {
        return Err(CensusError::OrderBound {
            what: "csp counts",
            order: n,
            bound: MAX_Z_ORDER,
        });
    }
    let need_t = n - 2;
    let need_s = (n - 1) / 2;
    if tables.t.len() <= need_t || tables.s.len() <= need_s {
        return Err(CensusError::MissingTables {
            order: n,
            need_t,
            need_s,
        });
    }
    let mut z = vec![0u64; n + 1];
    for m in 3..=n {
        let x = x_count(m, tables);
        let y = if m % 2 == 1 {
            z[m - 2]
        } else {
            z[m - 2] + tables.s[m / 2 - 1]
        };
        z[m] = x + y;
    }
    let x = x_count(n, tables);
    let y = z[n] - x;
    let mut z_by_core = BTreeMap::new();
    for nc in 1..=n - 2 {
        z_by_core.insert(nc, z_by_core_count(n, nc, tables));
    }
    let mut counts = BTreeMap::new();
    counts.insert("x".to_string(), x);
    counts.insert("y".to_string(), y);
    counts.insert("z".to_string(), z[n]);
    if n < tables.t.len() {
        counts.insert("t".to_string(), tables.t[n]);
    }
    if n < tables.s.len() {
        counts.insert("s".to_string(), tables.s[n]);
    }
    Ok(CensusResult {
        n,
        counts,
        z_by_core,
        witnesses: None,
    })
}

/// Enumeration route for [`enumerate_csp_structures`].
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum StructureRoute {
    /// Filter every 3-labeling of every census graph through the validator.
    BruteForce,
    /// Compose twin-free parts per the structural characterization.
    Constructive,
}

/// All non-(partitioned-)isomorphic CSP structures of order `n`, as sorted
/// partitioned canonical forms.
pub fn enumerate_csp_structures(
    n: usize,
    route: StructureRoute,
) -> Result<Vec<CanonicalForm>, CensusError> {
    if !(3..=MAX_STRUCTURE_ORDER).contains(&n) {
        return Err(CensusError::OrderBound {
            what: "csp structure enumeration",
            order: n,
            bound: MAX_STRUCTURE_ORDER,
        });
    }
    let mut forms: BTreeSet<CanonicalForm> = BTreeSet::new();
    match route {
        StructureRoute::BruteForce => {
            let graphs = census_graphs(n)?;
            let total = 3usize.pow(n as u32);
            for g in &graphs {
                if !g.is_connected() {
                    continue;
                }
                for code in 0..total {
                    let mut classes = Vec::with_capacity(n);
                    let mut c = code;
                    for _ in 0..n {
                        classes.push(match c % 3 {
                            0 => CspClass::Core,
                            1 => CspClass::Semiperiphery,
                            _ => CspClass::Periphery,
                        });
                        c /= 3;
                    }
                    if csp::validate(g, &classes)?.is_csp_structure {
                        forms.insert(csp::partitioned_form(g, &classes)?);
                    }
                }
            }
        }
        StructureRoute::Constructive => {
            // n = 2*n0 + n1 + 2*ns with ns ≥ 1 and n0 + n1 ≥ 1.
            for n0 in 0..=n / 2 {
                for ns in 1..=(n.saturating_sub(2 * n0)) / 2 {
                    let n1 = match (n - 2 * n0).checked_sub(2 * ns) {
                        Some(v) => v,
                        None => continue,
                    };
                    if n0 + n1 == 0 {
                        continue;
                    }
                    let c1_parts = graphs_without_true_twins(n1)?;
                    let s_parts = graphs_without_f_twins(ns)?;
                    for c1 in &c1_parts {
                        for s in &s_parts {
                            let (g, classes) = csp::compose(c1, s, n0)?;
                            forms.insert(csp::partitioned_form(&g, &classes)?);
                        }
                    }
                }
            }
        }
    }
    Ok(forms.into_iter().collect())
}

/// Structures of one order as (graph, labeling) pairs, constructive route.
pub fn csp_structure_graphs(n: usize) -> Result<Vec<(Graph, Vec<CspClass>)>, CensusError> {
    Ok(enumerate_csp_structures(n, StructureRoute::Constructive)?
        .into_iter()
        .map(|form| {
            let (g, names) = form.to_graph();
            let classes: Vec<CspClass> = names
                .iter()
                .map(|s| CspClass::from_name(s).expect("csp class name"))
                .collect();
            (g, classes)
        })
        .collect())
}

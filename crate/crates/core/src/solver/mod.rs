//! Exact search for interval colorings and the quantities built on it:
//! the feasible spectrum, `w(G)`, `W(G)`, and whether `χ'(G) = Δ(G)`.

mod interval;
mod proper;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::constructions::bound_report;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Span and surjectivity pruning. Turning it off leaves a plain
    /// proper-coloring search that checks the interval condition at the leaves.
    pub pruning: bool,
    /// Restrict the first edge to colors `<= ceil(t/2)`, using the symmetry
    /// `c -> t + 1 - c`. Witnesses may differ from the default search.
    pub reflection: bool,
    /// Give up after this many color assignments.
    pub node_limit: Option<u64>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            pruning: true,
            reflection: false,
            node_limit: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Feasible,
    Infeasible,
    Inconclusive,
}

impl SearchStatus {
    /// Process exit code: 0 feasible, 1 infeasible, 2 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            SearchStatus::Feasible => 0,
            SearchStatus::Infeasible => 1,
            SearchStatus::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub coloring: Option<EdgeColoring>,
    /// Color assignments tried.
    pub nodes: u64,
}

/// Edge indices in the order the searches color them: vertices are visited
/// in BFS order from vertex 1 and each contributes its not-yet-listed edges,
/// sorted by the other endpoint.
pub fn bfs_edge_order(graph: &Graph) -> Vec<usize> {
    let mut taken = vec![false; graph.edge_count()];
    let mut order = Vec::with_capacity(graph.edge_count());
    for v in graph.bfs_order(1) {
        for &e in graph.incident(v) {
            if !taken[e] {
                taken[e] = true;
                order.push(e);
            }
        }
    }
    debug_assert_eq!(order.len(), graph.edge_count());
    order
}

/// Exhaustive search for an interval `t`-coloring under `opts`.
pub fn search_interval_coloring(graph: &Graph, t: u32, opts: SolverOptions) -> SearchOutcome {
    interval::IntervalSearch::new(graph, t, opts).run()
}

/// An interval `t`-coloring of `graph`, or `None` if there is none.
///
/// The search is exhaustive and deterministic: `None` proves nonexistence and
/// repeated calls return the same coloring.
pub fn find_interval_coloring(graph: &Graph, t: u32) -> Option<EdgeColoring> {
    search_interval_coloring(graph, t, SolverOptions::default()).coloring
}

/// Search for a proper edge coloring with at most `k` colors.
pub fn search_proper_coloring(graph: &Graph, k: u32, opts: SolverOptions) -> SearchOutcome {
    proper::ProperSearch::new(graph, k, opts).run()
}

/// Whether `graph` has a proper edge coloring with `Δ(G)` colors.
pub fn chromatic_index_is_delta(graph: &Graph) -> bool {
    chromatic_index_status(graph, SolverOptions::default()) == SearchStatus::Feasible
}

pub fn chromatic_index_status(graph: &Graph, opts: SolverOptions) -> SearchStatus {
    search_proper_coloring(graph, graph.max_degree() as u32, opts).status
}

/// Whether `graph` has an interval `t`-coloring for some `t`.
///
/// Regular graphs are decided by whether `χ'(G) = Δ(G)`. Other graphs are
/// swept over `Δ(G) ..= bound`, with the bound from the diameter and maximum
/// degree; any interval coloring uses at most that many colors, so the sweep
/// is complete. A graph without edges has no interval coloring.
pub fn is_interval_colorable(graph: &Graph) -> bool {
    if graph.edge_count() == 0 {
        return false;
    }
    if graph.is_regular() {
        return chromatic_index_is_delta(graph);
    }
    interval_spectrum(graph, Cap::Auto, SolverOptions::default())
        .map(|r| !r.feasible_t.is_empty())
        .unwrap_or(false)
}

/// Upper end of a spectrum sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    /// The diameter bound for the graph's bipartiteness class.
    Auto,
    Fixed(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub diameter: usize,
    pub bipartite: bool,
    pub regular: bool,
}

impl GraphSummary {
    pub fn of(graph: &Graph) -> Self {
        GraphSummary {
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            max_degree: graph.max_degree(),
            diameter: graph.diameter(),
            bipartite: graph.is_bipartite(),
            regular: graph.is_regular(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRun {
    pub t: u32,
    pub status: SearchStatus,
    pub nodes: u64,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub graph: GraphSummary,
    pub t_min_searched: u32,
    pub t_max_searched: u32,
    pub feasible_t: Vec<u32>,
    pub infeasible_t: Vec<u32>,
    pub inconclusive_t: Vec<u32>,
    /// Least feasible `t`, known once every smaller searched `t` is resolved.
    pub w: Option<u32>,
    /// Greatest feasible `t`, known once every larger searched `t` is resolved.
    pub big_w: Option<u32>,
    /// One entry per searched `t`, ascending.
    pub runs: Vec<SweepRun>,
    pub witnesses: BTreeMap<u32, EdgeColoring>,
}

/// Searches every `t` from `max(Δ(G), 1)` to the cap. Each `t` is searched
/// independently and possibly in parallel; the report is in `t` order.
pub fn interval_spectrum(graph: &Graph, cap: Cap, opts: SolverOptions) -> Result<SpectrumReport> {
    let lo = graph.max_degree().max(1) as u32;
    let auto = (bound_report(graph).applicable_bound as u32).max(lo);
    let hi = match cap {
        Cap::Auto => auto,
        Cap::Fixed(c) if c < lo => {
            return Err(Error::domain(format!("cap {c} is below the maximum degree {lo}")));
        }
        Cap::Fixed(c) => c,
    };

    let outcomes: Vec<(SweepRun, Option<EdgeColoring>)> = (lo..=hi)
        .into_par_iter()
        .map(|t| {
            let start = Instant::now();
            let out = search_interval_coloring(graph, t, opts);
            let run = SweepRun {
                t,
                status: out.status,
                nodes: out.nodes,
                millis: start.elapsed().as_millis(),
            };
            (run, out.coloring)
        })
        .collect();

    let mut report = SpectrumReport {
        graph: GraphSummary::of(graph),
        t_min_searched: lo,
        t_max_searched: hi,
        feasible_t: Vec::new(),
        infeasible_t: Vec::new(),
        inconclusive_t: Vec::new(),
        w: None,
        big_w: None,
        runs: Vec::new(),
        witnesses: BTreeMap::new(),
    };
    for (run, coloring) in outcomes {
        match run.status {
            SearchStatus::Feasible => report.feasible_t.push(run.t),
            SearchStatus::Infeasible => report.infeasible_t.push(run.t),
            SearchStatus::Inconclusive => report.inconclusive_t.push(run.t),
        }
        if let Some(c) = coloring {
            report.witnesses.insert(run.t, c);
        }
        report.runs.push(run);
    }

    // Nothing below `lo` is feasible. Above the automatic cap, and above the
    // edge count, nothing is either.
    let first_open = report.inconclusive_t.first().copied();
    let last_open = report.inconclusive_t.last().copied();
    report.w = report
        .feasible_t
        .first()
        .copied()
        .filter(|&w| first_open.is_none_or(|o| o > w));
    let above_resolved = hi >= auto || hi as usize >= graph.edge_count();
    report.big_w = report
        .feasible_t
        .last()
        .copied()
        .filter(|&w| above_resolved && last_open.is_none_or(|o| o < w));
    Ok(report)
}

//! Proper edge coloring with a fixed number of colors.

use super::{SearchOutcome, SearchStatus, SolverOptions};
use crate::coloring::{is_proper, EdgeColoring};
use crate::graph::Graph;

pub(super) struct ProperSearch<'g> {
    graph: &'g Graph,
    k: u32,
    node_limit: Option<u64>,
    order: Vec<usize>,
    color: Vec<u32>,
    nodes: u64,
}

impl<'g> ProperSearch<'g> {
    pub(super) fn new(graph: &'g Graph, k: u32, opts: SolverOptions) -> Self {
        ProperSearch {
            graph,
            k,
            node_limit: opts.node_limit,
            order: super::bfs_edge_order(graph),
            color: vec![0; graph.edge_count()],
            nodes: 0,
        }
    }

    pub(super) fn run(mut self) -> SearchOutcome {
        let status = match self.dfs(0, 0) {
            Some(true) => SearchStatus::Feasible,
            Some(false) => SearchStatus::Infeasible,
            None => SearchStatus::Inconclusive,
        };
        let coloring = (status == SearchStatus::Feasible).then(|| {
            let c = EdgeColoring::from_raw(self.k.max(1), self.color.clone());
            debug_assert!(is_proper(self.graph, &c));
            c
        });
        SearchOutcome {
            status,
            coloring,
            nodes: self.nodes,
        }
    }

    fn conflicts(&self, edge: usize, c: u32) -> bool {
        let (u, v) = self.graph.edge(edge);
        self.graph
            .incident(u)
            .iter()
            .chain(self.graph.incident(v))
            .any(|&f| self.color[f] == c)
    }

    /// `Some(found)`, or `None` when the node limit ran out. Colors are
    /// interchangeable, so a color above `1 + highest` so far is never tried.
    fn dfs(&mut self, pos: usize, highest: u32) -> Option<bool> {
        if pos == self.order.len() {
            return Some(true);
        }
        let edge = self.order[pos];
        for c in 1..=self.k.min(highest + 1) {
            if self.conflicts(edge, c) {
                continue;
            }
            self.nodes += 1;
            if self.node_limit.is_some_and(|limit| self.nodes > limit) {
                return None;
            }
            self.color[edge] = c;
            if self.dfs(pos + 1, highest.max(c))? {
                return Some(true);
            }
            self.color[edge] = 0;
        }
        Some(false)
    }
}

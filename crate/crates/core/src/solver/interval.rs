//! Backtracking search for interval `t`-colorings.
//!
//! Edges are colored one at a time in BFS order from vertex 1, colors tried in
//! ascending order. With pruning on, each vertex keeps the smallest and largest
//! color among its colored edges; a new color `c` at a vertex of degree `d` must
//! keep the span within `d`, which also guarantees the remaining edges can
//! close the palette into a consecutive run. After each assignment the search
//! backs off if some still-unused color lies outside the reach of every
//! uncolored edge.

use super::{SearchOutcome, SearchStatus, SolverOptions};
use crate::coloring::{is_interval, EdgeColoring};
use crate::graph::Graph;

enum Step {
    Found,
    Exhausted,
    Aborted,
}

#[derive(Clone, Copy)]
struct VertexState {
    degree: u32,
    colored: u32,
    lo: u32,
    hi: u32,
}

impl VertexState {
    /// Colors an uncolored edge at this vertex may still take, as `(lo, hi)`.
    fn window(&self, t: u32) -> (u32, u32) {
        if self.colored == 0 {
            (1, t)
        } else {
            let lo = (self.hi + 1).saturating_sub(self.degree).max(1);
            let hi = (self.lo + self.degree - 1).min(t);
            (lo, hi)
        }
    }
}

pub(super) struct IntervalSearch<'g> {
    graph: &'g Graph,
    t: u32,
    opts: SolverOptions,
    order: Vec<usize>,
    // Endpoints (0-based) of order[k].
    ends: Vec<(usize, usize)>,
    color: Vec<u32>,
    vertices: Vec<VertexState>,
    uses: Vec<u32>,
    unused: u32,
    nodes: u64,
    // Scratch for the coverage check, indexed by color.
    reach: Vec<i32>,
}

impl<'g> IntervalSearch<'g> {
    pub(super) fn new(graph: &'g Graph, t: u32, opts: SolverOptions) -> Self {
        let order = super::bfs_edge_order(graph);
        let ends = order
            .iter()
            .map(|&e| {
                let (u, v) = graph.edge(e);
                (u - 1, v - 1)
            })
            .collect();
        let vertices = graph
            .vertices()
            .map(|v| VertexState {
                degree: graph.incident(v).len() as u32,
                colored: 0,
                lo: 0,
                hi: 0,
            })
            .collect();
        IntervalSearch {
            graph,
            t,
            opts,
            order,
            ends,
            color: vec![0; graph.edge_count()],
            vertices,
            uses: vec![0; t as usize + 2],
            unused: t,
            nodes: 0,
            reach: vec![0; t as usize + 2],
        }
    }

    pub(super) fn run(mut self) -> SearchOutcome {
        let step = if self.t == 0 { Step::Exhausted } else { self.dfs(0) };
        let (status, coloring) = match step {
            Step::Found => {
                let coloring = EdgeColoring::from_raw(self.t, self.color.clone());
                debug_assert!(is_interval(self.graph, &coloring).verdict());
                (SearchStatus::Feasible, Some(coloring))
            }
            Step::Exhausted => (SearchStatus::Infeasible, None),
            Step::Aborted => (SearchStatus::Inconclusive, None),
        };
        SearchOutcome {
            status,
            coloring,
            nodes: self.nodes,
        }
    }

    fn used_at(&self, vertex: usize, c: u32) -> bool {
        self.graph
            .incident(vertex + 1)
            .iter()
            .any(|&e| self.color[e] == c)
    }

    fn dfs(&mut self, k: usize) -> Step {
        if k == self.order.len() {
            let done = if self.opts.pruning {
                self.unused == 0
            } else {
                is_interval(self.graph, &EdgeColoring::from_raw(self.t, self.color.clone())).verdict()
            };
            return if done { Step::Found } else { Step::Exhausted };
        }

        let edge = self.order[k];
        let (u, v) = self.ends[k];
        let (mut lo, mut hi) = (1, self.t);
        if self.opts.pruning {
            let (lu, hu) = self.vertices[u].window(self.t);
            let (lv, hv) = self.vertices[v].window(self.t);
            lo = lu.max(lv);
            hi = hu.min(hv);
        }
        if k == 0 && self.opts.reflection {
            hi = hi.min(self.t.div_ceil(2));
        }

        for c in lo..=hi {
            if self.used_at(u, c) || self.used_at(v, c) {
                continue;
            }
            self.nodes += 1;
            if self.opts.node_limit.is_some_and(|limit| self.nodes > limit) {
                return Step::Aborted;
            }

            let saved = (self.vertices[u], self.vertices[v]);
            self.place(edge, u, v, c);
            if !self.opts.pruning || self.can_cover(k + 1) {
                match self.dfs(k + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.unplace(edge, c);
            (self.vertices[u], self.vertices[v]) = saved;
        }
        Step::Exhausted
    }

    fn place(&mut self, edge: usize, u: usize, v: usize, c: u32) {
        self.color[edge] = c;
        for w in [u, v] {
            let s = &mut self.vertices[w];
            if s.colored == 0 {
                s.lo = c;
                s.hi = c;
            } else {
                s.lo = s.lo.min(c);
                s.hi = s.hi.max(c);
            }
            s.colored += 1;
        }
        if self.uses[c as usize] == 0 {
            self.unused -= 1;
        }
        self.uses[c as usize] += 1;
    }

    fn unplace(&mut self, edge: usize, c: u32) {
        self.color[edge] = 0;
        self.uses[c as usize] -= 1;
        if self.uses[c as usize] == 0 {
            self.unused += 1;
        }
    }

    /// Whether every unused color can still be reached by some edge at
    /// positions `from..`.
    fn can_cover(&mut self, from: usize) -> bool {
        if self.unused == 0 {
            return true;
        }
        if self.unused as usize > self.order.len() - from {
            return false;
        }
        self.reach.iter_mut().for_each(|r| *r = 0);
        for &(u, v) in &self.ends[from..] {
            let (lu, hu) = self.vertices[u].window(self.t);
            let (lv, hv) = self.vertices[v].window(self.t);
            let (lo, hi) = (lu.max(lv), hu.min(hv));
            if lo > hi {
                return false;
            }
            self.reach[lo as usize] += 1;
            self.reach[hi as usize + 1] -= 1;
        }
        let mut running = 0;
        for c in 1..=self.t as usize {
            running += self.reach[c];
            if running == 0 && self.uses[c] == 0 {
                return false;
            }
        }
        true
    }
}

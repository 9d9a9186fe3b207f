//! The explicit interval `(n+2)`-coloring of `M_{2n}` and the diameter-based
//! upper bounds on the largest feasible number of colors.

use serde::Serialize;

use crate::coloring::{is_interval, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moebius::moebius_ladder;

/// Collects color assignments and checks that no edge is colored twice and
/// none is left over.
struct Assignment<'g> {
    graph: &'g Graph,
    colors: Vec<Option<u32>>,
}

impl<'g> Assignment<'g> {
    fn new(graph: &'g Graph) -> Self {
        Assignment {
            graph,
            colors: vec![None; graph.edge_count()],
        }
    }

    fn set(&mut self, u: usize, v: usize, color: u32) {
        let idx = self
            .graph
            .edge_index(u, v)
            .unwrap_or_else(|| panic!("({u}, {v}) is not an edge"));
        let previous = self.colors[idx].replace(color);
        assert!(previous.is_none(), "edge ({u}, {v}) assigned twice");
    }

    fn finish(self, t: u32) -> EdgeColoring {
        let colors = self
            .colors
            .into_iter()
            .enumerate()
            .map(|(idx, c)| c.unwrap_or_else(|| panic!("edge {:?} left uncolored", self.graph.edge(idx))))
            .collect();
        EdgeColoring::from_raw(t, colors)
    }
}

/// Interval `(n+2)`-coloring of `M_{2n}` (with the canonical labeling of
/// [`moebius_ladder`]).
///
/// Even `n = 2m` and odd `n = 2m+1` use separate formula families; each family
/// colors a run of rungs with odd colors, the rungs on the other side with even
/// colors, and the rim edges between them so that every vertex sees three
/// consecutive colors.
pub fn moebius_max_coloring(n: usize) -> Result<EdgeColoring> {
    let ladder = moebius_ladder(n)?;
    let g = ladder.graph();
    let mut a = Assignment::new(g);
    let m = n / 2;
    let c = |k: usize| k as u32;

    if n.is_multiple_of(2) {
        for i in 1..=m {
            a.set(m - 1 + i, 3 * m - 1 + i, c(2 * i - 1));
            a.set(m - 1 + i, m + i, c(2 * i));
            a.set(3 * m - 1 + i, 3 * m + i, c(2 * i));
        }
        for i in 1..m {
            a.set(m - i, 3 * m - i, c(2 * (i + 1)));
            a.set(m - i, m + 1 - i, c(2 * i + 1));
            a.set(3 * m - i, 3 * m + 1 - i, c(2 * i + 1));
        }
        a.set(1, 4 * m, c(2 * m + 1));
        a.set(2 * m, 2 * m + 1, c(2 * m + 1));
        a.set(2 * m, 4 * m, c(2 * m + 2));
    } else {
        for i in 1..=m + 1 {
            a.set(m + i, 3 * m + 1 + i, c(2 * i - 1));
        }
        for i in 1..m {
            a.set(m + 1 - i, 3 * m + 2 - i, c(2 * (i + 1)));
        }
        for i in 1..=m {
            a.set(m + i, m + 1 + i, c(2 * i));
            a.set(3 * m + 1 + i, 3 * m + 2 + i, c(2 * i));
            a.set(m + 1 - i, m + 2 - i, c(2 * i + 1));
            a.set(3 * m + 2 - i, 3 * m + 3 - i, c(2 * i + 1));
        }
        a.set(1, 4 * m + 2, c(2 * m + 2));
        a.set(2 * m + 1, 2 * m + 2, c(2 * m + 2));
        a.set(1, 2 * m + 2, c(2 * m + 3));
    }

    let coloring = a.finish(c(n + 2));
    debug_assert!(
        is_interval(g, &coloring).verdict(),
        "construction failed for n = {n}"
    );
    Ok(coloring)
}

/// `d(G) * (Δ(G) - 1) + 1`, the bound for bipartite interval-colorable graphs.
pub fn bipartite_bound(graph: &Graph) -> Result<usize> {
    if !graph.is_bipartite() {
        return Err(Error::domain(
            "bipartite bound requested for a graph with an odd cycle",
        ));
    }
    Ok(diameter_bound(graph.diameter(), graph.max_degree()))
}

/// `(d(G) + 1) * (Δ(G) - 1) + 1`, the bound for interval-colorable graphs
/// with an odd cycle.
pub fn odd_cycle_bound(graph: &Graph) -> Result<usize> {
    if graph.is_bipartite() {
        return Err(Error::domain("odd-cycle bound requested for a bipartite graph"));
    }
    Ok(diameter_bound(graph.diameter() + 1, graph.max_degree()))
}

fn diameter_bound(factor: usize, delta: usize) -> usize {
    factor * delta.saturating_sub(1) + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub delta: usize,
    pub diameter: usize,
    pub bipartite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_cycle_bound: Option<usize>,
    pub applicable_bound: usize,
}

pub fn bound_report(graph: &Graph) -> BoundReport {
    let delta = graph.max_degree();
    let diameter = graph.diameter();
    let bipartite = graph.is_bipartite();
    let (bipartite_bound, odd_cycle_bound) = if bipartite {
        (Some(diameter_bound(diameter, delta)), None)
    } else {
        (None, Some(diameter_bound(diameter + 1, delta)))
    };
    BoundReport {
        delta,
        diameter,
        bipartite,
        bipartite_bound,
        odd_cycle_bound,
        applicable_bound: bipartite_bound.or(odd_cycle_bound).unwrap(),
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("Moebius ladder needs n >= 2, got {n}")));
    }
    Ok(())
}

/// Least `t` with an interval `t`-coloring of `M_{2n}`: always 3.
pub fn moebius_w(n: usize) -> Result<usize> {
    check_n(n)?;
    Ok(3)
}

/// Greatest `t` with an interval `t`-coloring of `M_{2n}`: `n + 2`.
pub fn moebius_big_w(n: usize) -> Result<usize> {
    check_n(n)?;
    Ok(n + 2)
}

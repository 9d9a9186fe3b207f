//! Moebius ladders `M_{2n}`: the cycle `x_1 .. x_{2n}` plus the rungs
//! `(x_i, x_{n+i})` for `1 <= i <= n`.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusLadder {
    n: usize,
    graph: Graph,
    rim_edges: Vec<Edge>,
    rung_edges: Vec<Edge>,
}

impl MoebiusLadder {
    /// Half the number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// The `2n` cycle edges, `(x_i, x_{i+1})` in order of `i`, then `(x_1, x_{2n})`.
    pub fn rim_edges(&self) -> &[Edge] {
        &self.rim_edges
    }

    /// The `n` rungs `(x_i, x_{n+i})` in order of `i`.
    pub fn rung_edges(&self) -> &[Edge] {
        &self.rung_edges
    }

    pub fn is_rung(&self, u: usize, v: usize) -> bool {
        let (a, b) = (u.min(v), u.max(v));
        b == a + self.n
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::domain(format!("Moebius ladder needs n >= 2, got {n}")))
    } else {
        Ok(())
    }
}

/// Builds `M_{2n}` with the canonical labeling. For `n = 2` this is `K_4`.
pub fn moebius_ladder(n: usize) -> Result<MoebiusLadder> {
    check_n(n)?;
    let order = 2 * n;
    let mut rim_edges: Vec<Edge> = (1..order).map(|i| (i, i + 1)).collect();
    rim_edges.push((1, order));
    let rung_edges: Vec<Edge> = (1..=n).map(|i| (i, n + i)).collect();
    let graph = Graph::new(order, rim_edges.iter().chain(&rung_edges).copied())?;
    Ok(MoebiusLadder {
        n,
        graph,
        rim_edges,
        rung_edges,
    })
}

/// `ceil(n / 2)`, the diameter of `M_{2n}`.
pub fn closed_form_diameter(n: usize) -> Result<usize> {
    check_n(n)?;
    Ok(n.div_ceil(2))
}

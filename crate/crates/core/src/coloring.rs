//! Edge colorings and the interval-coloring verifier.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A total map from the edges of a graph to colors `1..=t`.
///
/// Colors are stored by edge index, in the graph's normalized edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    t: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// Checks that there is one color per edge of `graph` and that every color
    /// lies in `1..=t`.
    pub fn new(graph: &Graph, t: u32, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != graph.edge_count() {
            return Err(Error::ColoringLength {
                got: colors.len(),
                expected: graph.edge_count(),
            });
        }
        if t == 0 {
            return Err(Error::domain("number of colors must be positive"));
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > t) {
            return Err(Error::ColorOutOfRange { color, t });
        }
        Ok(EdgeColoring { t, colors })
    }

    /// Builds a coloring from `(edge, color)` pairs, each edge given exactly once.
    pub fn from_pairs(graph: &Graph, t: u32, pairs: impl IntoIterator<Item = (Edge, u32)>) -> Result<Self> {
        let mut colors: Vec<Option<u32>> = vec![None; graph.edge_count()];
        for ((u, v), c) in pairs {
            let idx = graph.edge_index(u, v).ok_or(Error::UnknownEdge(u, v))?;
            if colors[idx].replace(c).is_some() {
                let (a, b) = graph.edge(idx);
                return Err(Error::DuplicateColor(a, b));
            }
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(idx, c)| {
                let (a, b) = graph.edge(idx);
                c.ok_or(Error::MissingColor(a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        EdgeColoring::new(graph, t, colors)
    }

    pub(crate) fn from_raw(t: u32, colors: Vec<u32>) -> Self {
        EdgeColoring { t, colors }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color of the edge with index `edge`.
    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    /// Color of the edge `(u, v)` of `graph`, if it is an edge.
    pub fn color_of(&self, graph: &Graph, u: usize, v: usize) -> Option<u32> {
        graph.edge_index(u, v).map(|idx| self.colors[idx])
    }

    /// Shifts all colors down so the smallest used color becomes 1, and sets
    /// `t` to the largest color after the shift.
    pub fn normalized(&self) -> EdgeColoring {
        let Some(&lo) = self.colors.iter().min() else {
            return self.clone();
        };
        let colors: Vec<u32> = self.colors.iter().map(|&c| c - lo + 1).collect();
        let t = colors.iter().copied().max().unwrap_or(1);
        EdgeColoring { t, colors }
    }

    /// Applies `c -> t + 1 - c`.
    pub fn reflected(&self) -> EdgeColoring {
        let colors = self.colors.iter().map(|&c| self.t + 1 - c).collect();
        EdgeColoring { t: self.t, colors }
    }

    fn check_graph(&self, graph: &Graph) {
        assert_eq!(
            self.colors.len(),
            graph.edge_count(),
            "coloring does not belong to this graph"
        );
    }
}

/// Sorted set of colors on the edges incident to `v`.
pub fn palette(graph: &Graph, coloring: &EdgeColoring, v: usize) -> Result<BTreeSet<u32>> {
    coloring.check_graph(graph);
    Ok(graph
        .incident_edges(v)?
        .iter()
        .map(|&e| coloring.colors[e])
        .collect())
}

/// True iff no two edges sharing a vertex have the same color.
pub fn is_proper(graph: &Graph, coloring: &EdgeColoring) -> bool {
    coloring.check_graph(graph);
    graph.vertices().all(|v| {
        let inc = graph.incident(v);
        let distinct: BTreeSet<u32> = inc.iter().map(|&e| coloring.colors[e]).collect();
        distinct.len() == inc.len()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two edges at `vertex` share `color`.
    RepeatedColor { vertex: usize, color: u32 },
    /// The palette at `vertex` is not a run of consecutive colors.
    NotConsecutive { vertex: usize, palette: Vec<u32> },
    /// No edge has `color`.
    UnusedColor { color: u32 },
    /// `edge` carries a color outside `1..=t`.
    OutOfRange { edge: Edge, color: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RepeatedColor { vertex, color } => {
                write!(f, "vertex {vertex}: color {color} appears on more than one edge")
            }
            Violation::NotConsecutive { vertex, palette } => {
                write!(f, "vertex {vertex}: palette {palette:?} is not consecutive")
            }
            Violation::UnusedColor { color } => write!(f, "color {color} is not used"),
            Violation::OutOfRange { edge, color } => {
                write!(f, "edge ({}, {}): color {color} out of range", edge.0, edge.1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub t: u32,
    pub proper: bool,
    pub surjective: bool,
    pub interval_at_each_vertex: bool,
    pub violations: Vec<Violation>,
    /// Sorted palette of each vertex, indexed by `vertex - 1`.
    pub palettes: Vec<Vec<u32>>,
}

impl VerificationReport {
    pub fn verdict(&self) -> bool {
        self.proper && self.surjective && self.interval_at_each_vertex
    }
}

/// Checks the three conditions of an interval `t`-coloring and reports every
/// failure: properness, every color in `1..=t` used, and each vertex `x`
/// seeing exactly `d(x)` consecutive colors.
pub fn is_interval(graph: &Graph, coloring: &EdgeColoring) -> VerificationReport {
    coloring.check_graph(graph);
    let t = coloring.t;
    let mut violations = Vec::new();

    for (idx, &c) in coloring.colors.iter().enumerate() {
        if c == 0 || c > t {
            violations.push(Violation::OutOfRange {
                edge: graph.edge(idx),
                color: c,
            });
        }
    }
    let mut proper = violations.is_empty();
    let mut interval = true;

    let mut palettes = Vec::with_capacity(graph.vertex_count());
    for v in graph.vertices() {
        let mut colors: Vec<u32> = graph.incident(v).iter().map(|&e| coloring.colors[e]).collect();
        colors.sort_unstable();
        let before = colors.len();
        for w in colors.windows(2) {
            if w[0] == w[1] {
                violations.push(Violation::RepeatedColor {
                    vertex: v,
                    color: w[0],
                });
            }
        }
        colors.dedup();
        if colors.len() != before {
            proper = false;
        }
        if let (Some(&lo), Some(&hi)) = (colors.first(), colors.last()) {
            if (hi - lo) as usize + 1 != before {
                interval = false;
                violations.push(Violation::NotConsecutive {
                    vertex: v,
                    palette: colors.clone(),
                });
            }
        }
        palettes.push(colors);
    }

    let mut used = vec![false; t as usize + 1];
    for &c in &coloring.colors {
        if let Some(slot) = used.get_mut(c as usize) {
            *slot = true;
        }
    }
    let mut surjective = true;
    for color in 1..=t {
        if !used[color as usize] {
            surjective = false;
            violations.push(Violation::UnusedColor { color });
        }
    }

    VerificationReport {
        t,
        proper,
        surjective,
        interval_at_each_vertex: interval,
        violations,
        palettes,
    }
}

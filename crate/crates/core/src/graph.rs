//! Simple undirected connected graphs with 1-based vertex labels.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An unordered edge stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Immutable simple connected graph on vertices `1..=vertex_count`.
///
/// Edges are normalized so that `u < v` and kept in lexicographic order, so
/// two graphs built from the same edge set compare equal regardless of input
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    // incidence[v - 1] holds indices into `edges`, sorted by the other endpoint.
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges, out-of-range
    /// endpoints and disconnected input.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > vertex_count {
                    return Err(Error::InvalidVertex {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut incidence = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in normalized.iter().enumerate() {
            incidence[u - 1].push(idx);
            incidence[v - 1].push(idx);
        }
        for (i, list) in incidence.iter_mut().enumerate() {
            let me = i + 1;
            list.sort_by_key(|&e| other_end(normalized[e], me));
        }

        let graph = Graph {
            vertex_count,
            edges: normalized,
            incidence,
        };
        if graph.bfs_distances(1).iter().any(Option::is_none) {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> Edge {
        self.edges[idx]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.vertex_count
    }

    /// Index of the edge joining `u` and `v`, in either orientation.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Indices of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.incidence[v - 1])
    }

    pub(crate) fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v - 1]
    }

    pub fn neighbors(&self, v: usize) -> Result<impl Iterator<Item = usize> + '_> {
        let inc = self.incident_edges(v)?;
        Ok(inc.iter().map(move |&e| other_end(self.edges[e], v)))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.incident_edges(v).map(<[usize]>::len)
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let first = self.incidence[0].len();
        self.incidence.iter().all(|inc| inc.len() == first)
    }

    /// Shortest-path length between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v - 1].expect("graph is connected"))
    }

    /// Largest distance over all vertex pairs, via one BFS per vertex.
    pub fn diameter(&self) -> usize {
        self.vertices()
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .map(|d| d.expect("graph is connected"))
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// Proper 2-coloring of the vertices by BFS layer parity, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let dist = self.bfs_distances(1);
        let side: Vec<bool> = dist
            .iter()
            .map(|d| d.expect("graph is connected") % 2 == 1)
            .collect();
        self.edges
            .iter()
            .all(|&(u, v)| side[u - 1] != side[v - 1])
            .then_some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// BFS distances from `source`, indexed by `vertex - 1`.
    pub(crate) fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[source - 1] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u - 1].unwrap();
            for &e in &self.incidence[u - 1] {
                let w = other_end(self.edges[e], u);
                if dist[w - 1].is_none() {
                    dist[w - 1] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices in BFS order from `source`.
    pub(crate) fn bfs_order(&self, source: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        let mut order = Vec::with_capacity(self.vertex_count);
        let mut queue = VecDeque::new();
        seen[source - 1] = true;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &e in &self.incidence[u - 1] {
                let w = other_end(self.edges[e], u);
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.vertex_count {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        } else {
            Ok(())
        }
    }
}

/// The endpoint of `edge` that is not `v`.
pub fn other_end(edge: Edge, v: usize) -> usize {
    if edge.0 == v {
        edge.1
    } else {
        edge.0
    }
}

//! JSON, DOT and CSV formats.
//!
//! Graph: `{"vertices":4,"edges":[[1,2],[2,3]]}`, optionally with
//! `"family":"moebius","n":2`.
//! Coloring: `{"t":2,"colors":[{"edge":[1,2],"color":1}]}`.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::coloring::{EdgeColoring, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moebius::MoebiusLadder;
use crate::solver::{GraphSummary, SearchStatus, SpectrumReport, SweepRun};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl GraphJson {
    pub fn from_graph(graph: &Graph) -> Self {
        GraphJson {
            vertices: graph.vertex_count(),
            edges: graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            family: None,
            n: None,
        }
    }

    pub fn from_ladder(ladder: &MoebiusLadder) -> Self {
        GraphJson {
            family: Some("moebius".to_string()),
            n: Some(ladder.n()),
            ..GraphJson::from_graph(ladder.graph())
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.vertices, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub edge: [usize; 2],
    pub color: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub t: u32,
    pub colors: Vec<ColoredEdge>,
}

impl ColoringJson {
    pub fn from_coloring(graph: &Graph, coloring: &EdgeColoring) -> Self {
        let colors = graph
            .edges()
            .iter()
            .zip(coloring.colors())
            .map(|(&(u, v), &color)| ColoredEdge { edge: [u, v], color })
            .collect();
        ColoringJson {
            t: coloring.t(),
            colors,
        }
    }

    pub fn to_coloring(&self, graph: &Graph) -> Result<EdgeColoring> {
        EdgeColoring::from_pairs(
            graph,
            self.t,
            self.colors.iter().map(|c| ((c.edge[0], c.edge[1]), c.color)),
        )
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

pub fn parse_coloring(graph: &Graph, text: &str) -> Result<EdgeColoring> {
    serde_json::from_str::<ColoringJson>(text)?.to_coloring(graph)
}

pub fn graph_to_json(graph: &Graph) -> String {
    to_json(&GraphJson::from_graph(graph))
}

pub fn coloring_to_json(graph: &Graph, coloring: &EdgeColoring) -> String {
    to_json(&ColoringJson::from_coloring(graph, coloring))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

#[derive(Serialize)]
struct SpectrumJson<'a> {
    graph: &'a GraphSummary,
    t_min_searched: u32,
    t_max_searched: u32,
    feasible_t: &'a [u32],
    infeasible_t: &'a [u32],
    inconclusive_t: &'a [u32],
    w: Option<u32>,
    #[serde(rename = "W")]
    big_w: Option<u32>,
    runs: &'a [SweepRun],
    witnesses: BTreeMap<u32, ColoringJson>,
}

pub fn spectrum_to_json(graph: &Graph, report: &SpectrumReport) -> String {
    to_json(&SpectrumJson {
        graph: &report.graph,
        t_min_searched: report.t_min_searched,
        t_max_searched: report.t_max_searched,
        feasible_t: &report.feasible_t,
        infeasible_t: &report.infeasible_t,
        inconclusive_t: &report.inconclusive_t,
        w: report.w,
        big_w: report.big_w,
        runs: &report.runs,
        witnesses: report
            .witnesses
            .iter()
            .map(|(&t, c)| (t, ColoringJson::from_coloring(graph, c)))
            .collect(),
    })
}

pub const SPECTRUM_CSV_HEADER: &str = "n,t,feasible,nodes_searched,millis";

/// One line per searched `t`, no header. `n` is left empty for graphs that
/// are not Moebius ladders.
pub fn spectrum_csv_rows(n: Option<usize>, report: &SpectrumReport) -> String {
    let mut out = String::new();
    let n = n.map(|n| n.to_string()).unwrap_or_default();
    for run in &report.runs {
        let feasible = match run.status {
            SearchStatus::Feasible => "true",
            SearchStatus::Infeasible => "false",
            SearchStatus::Inconclusive => "inconclusive",
        };
        writeln!(out, "{n},{},{feasible},{},{}", run.t, run.nodes, run.millis).unwrap();
    }
    out
}

pub fn spectrum_to_csv(n: Option<usize>, report: &SpectrumReport) -> String {
    format!("{SPECTRUM_CSV_HEADER}\n{}", spectrum_csv_rows(n, report))
}

pub fn report_to_json(report: &VerificationReport) -> String {
    #[derive(Serialize)]
    struct WithVerdict<'a> {
        verdict: bool,
        #[serde(flatten)]
        report: &'a VerificationReport,
    }
    to_json(&WithVerdict {
        verdict: report.verdict(),
        report,
    })
}

/// Undirected DOT text with one node line per vertex and one line per edge,
/// in vertex and edge order. Colored edges carry their color as the label.
pub fn export_dot(graph: &Graph, coloring: Option<&EdgeColoring>) -> Result<String> {
    if let Some(c) = coloring {
        if c.colors().len() != graph.edge_count() {
            return Err(Error::ColoringLength {
                got: c.colors().len(),
                expected: graph.edge_count(),
            });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in graph.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for (idx, &(u, v)) in graph.edges().iter().enumerate() {
        match coloring {
            Some(c) => writeln!(out, "  {u} -- {v} [label=\"{}\"];", c.color(idx)).unwrap(),
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

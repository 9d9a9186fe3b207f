//! Interval edge colorings of graphs.
//!
//! An interval `t`-coloring is a proper edge coloring with colors `1..=t`,
//! each color used at least once, such that the colors at every vertex `x`
//! form `d(x)` consecutive integers. This crate builds the explicit interval
//! `(n+2)`-coloring of the Moebius ladder `M_{2n}`, verifies colorings,
//! and searches exhaustively for interval colorings of small graphs.

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod moebius;
pub mod solver;

pub use coloring::{is_interval, is_proper, palette, EdgeColoring, VerificationReport, Violation};
pub use constructions::{
    bipartite_bound, bound_report, moebius_big_w, moebius_max_coloring, moebius_w, odd_cycle_bound,
    BoundReport,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use moebius::{closed_form_diameter, moebius_ladder, MoebiusLadder};
pub use solver::{
    chromatic_index_is_delta, find_interval_coloring, interval_spectrum, is_interval_colorable,
    search_interval_coloring, Cap, SearchOutcome, SearchStatus, SolverOptions, SpectrumReport,
};

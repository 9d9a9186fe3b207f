//! Command-line front end.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::coloring::{is_interval, EdgeColoring};
use crate::constructions::{bound_report, moebius_max_coloring};
use crate::error::Error;
use crate::graph::Graph;
use crate::io::{self as formats, ColoringJson, GraphJson};
use crate::moebius::{closed_form_diameter, moebius_ladder};
use crate::solver::{
    interval_spectrum, search_interval_coloring, search_proper_coloring, Cap, SearchStatus, SolverOptions,
};

#[derive(Debug, Parser)]
#[command(
    name = "interval-coloring",
    version,
    about = "Interval edge colorings of graphs and Moebius ladders"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Print search statistics to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the graph JSON of M_{2n}.
    Gen {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Emit an interval t-coloring of M_{2n}; `--t max` gives the explicit (n+2)-coloring.
    Color {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value = "max")]
        t: TArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        search: SearchFlags,
        #[command(flatten)]
        out: Output,
    },
    /// Check a coloring (from --coloring or stdin) against the interval definition.
    Verify {
        #[command(flatten)]
        graph: GraphSource,
        /// Coloring JSON; read from stdin when omitted.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Search for an interval t-coloring.
    Solve {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        search: SearchFlags,
        #[command(flatten)]
        out: Output,
    },
    /// Search every t from the maximum degree up to the cap.
    Spectrum {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value = "auto")]
        cap: CapArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        search: SearchFlags,
        #[command(flatten)]
        out: Output,
    },
    /// Diameter-based upper bounds on the number of colors.
    Bounds {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        out: Output,
    },
    /// BFS diameter, with the closed form for Moebius ladders.
    Diameter {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        out: Output,
    },
    /// Whether the graph has a proper edge coloring with max-degree colors.
    ChiPrime {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        search: SearchFlags,
        #[command(flatten)]
        out: Output,
    },
    /// DOT text for a graph, with edge labels when a coloring is given.
    ExportDot {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Use the Moebius ladder M_{2n}.
    #[arg(long, conflicts_with = "input")]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Family::Moebius)]
    pub family: Family,
    /// Graph JSON file (`-` for stdin).
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchFlags {
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Disable span and surjectivity pruning.
    #[arg(long)]
    pub no_pruning: bool,
    /// Break the c -> t+1-c symmetry on the first edge.
    #[arg(long)]
    pub reflection: bool,
}

impl SearchFlags {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            pruning: !self.no_pruning,
            reflection: self.reflection,
            node_limit: self.node_limit,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Moebius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TArg {
    Max,
    Exact(u32),
}

impl FromStr for TArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max" => Ok(TArg::Max),
            _ => s
                .parse()
                .map(TArg::Exact)
                .map_err(|_| format!("expected `max` or an integer, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapArg(pub Cap);

impl FromStr for CapArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(CapArg(Cap::Auto)),
            _ => s
                .parse()
                .map(|c| CapArg(Cap::Fixed(c)))
                .map_err(|_| format!("expected `auto` or an integer, got `{s}`")),
        }
    }
}

/// Exit codes above the 0/1/2 search verdicts.
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: Error },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => EXIT_USAGE,
            CliError::Io { .. } | CliError::Parse { .. } => EXIT_IO,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct LoadedGraph {
    graph: Graph,
    n: Option<usize>,
    from_stdin: bool,
}

fn read_source(path: &Path) -> CliResult<String> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
    } else {
        text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok(text)
}

fn parse_with_path<T>(path: &Path, parsed: crate::error::Result<T>) -> CliResult<T> {
    parsed.map_err(|source| match source {
        Error::Parse { .. } => CliError::Parse {
            path: display_path(path),
            source,
        },
        other => CliError::Input(other),
    })
}

fn display_path(path: &Path) -> String {
    if path == Path::new("-") {
        "<stdin>".into()
    } else {
        path.display().to_string()
    }
}

fn load_graph(source: &GraphSource) -> CliResult<LoadedGraph> {
    if let Some(n) = source.n {
        let Family::Moebius = source.family;
        return Ok(LoadedGraph {
            graph: moebius_ladder(n)?.into_graph(),
            n: Some(n),
            from_stdin: false,
        });
    }
    let path = source.input.clone().unwrap_or_else(|| PathBuf::from("-"));
    let text = read_source(&path)?;
    let json: GraphJson = parse_with_path(&path, serde_json::from_str(&text).map_err(Error::from))?;
    let graph = json.to_graph()?;
    let n = match json.family.as_deref() {
        Some("moebius") => json.n,
        _ => None,
    };
    Ok(LoadedGraph {
        graph,
        n,
        from_stdin: path == Path::new("-"),
    })
}

fn load_coloring(graph: &LoadedGraph, path: Option<&PathBuf>) -> CliResult<EdgeColoring> {
    let path = path.cloned().unwrap_or_else(|| PathBuf::from("-"));
    if graph.from_stdin && path == Path::new("-") {
        return Err(CliError::Usage(
            "graph and coloring cannot both come from stdin; pass --n, --in or --coloring".into(),
        ));
    }
    let text = read_source(&path)?;
    let json: ColoringJson = parse_with_path(&path, serde_json::from_str(&text).map_err(Error::from))?;
    Ok(json.to_coloring(&graph.graph)?)
}

fn emit(out: &Output, text: &str) -> CliResult<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn coloring_text(graph: &Graph, coloring: &EdgeColoring, format: Format) -> CliResult<String> {
    match format {
        Format::Json => Ok(formats::coloring_to_json(graph, coloring)),
        Format::Dot => Ok(formats::export_dot(graph, Some(coloring))?),
        Format::Csv => Err(CliError::Usage(
            "csv output is only available for `spectrum`".into(),
        )),
    }
}

/// Executes one subcommand. Returns 0 on success or a feasible/true result,
/// 1 for infeasible/false, 2 when a node limit was hit, and 3 or 4 for usage
/// and I/O errors (after printing the error to stderr).
pub fn run(config: &RunConfig) -> i32 {
    match dispatch(config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(config: &RunConfig) -> CliResult<i32> {
    let verbose = config.verbose > 0;
    match &config.command {
        Command::Gen { graph, format, out } => {
            if graph.input.is_some() {
                return Err(CliError::Usage("`gen` takes --n, not --in".into()));
            }
            let n = graph.n.ok_or_else(|| CliError::Usage("`gen` needs --n".into()))?;
            let ladder = moebius_ladder(n)?;
            let text = match format {
                Format::Json => formats::to_json(&GraphJson::from_ladder(&ladder)),
                Format::Dot => formats::export_dot(ladder.graph(), None)?,
                Format::Csv => {
                    return Err(CliError::Usage(
                        "csv output is only available for `spectrum`".into(),
                    ))
                }
            };
            emit(out, &text)?;
            Ok(0)
        }
        Command::Color {
            graph,
            t,
            format,
            search,
            out,
        } => {
            let n = graph
                .n
                .ok_or_else(|| CliError::Usage("`color` needs --n".into()))?;
            let g = moebius_ladder(n)?.into_graph();
            let coloring = match *t {
                TArg::Max => moebius_max_coloring(n)?,
                TArg::Exact(t) if t as usize == n + 2 => moebius_max_coloring(n)?,
                TArg::Exact(t) => {
                    let outcome = search_interval_coloring(&g, t, search.options());
                    if verbose {
                        eprintln!("t = {t}: {:?} after {} nodes", outcome.status, outcome.nodes);
                    }
                    match outcome.coloring {
                        Some(c) => c,
                        None => {
                            eprintln!("no interval {t}-coloring found ({:?})", outcome.status);
                            return Ok(outcome.status.exit_code());
                        }
                    }
                }
            };
            emit(out, &coloring_text(&g, &coloring, *format)?)?;
            Ok(0)
        }
        Command::Verify { graph, coloring, out } => {
            let loaded = load_graph(graph)?;
            let c = load_coloring(&loaded, coloring.as_ref())?;
            let report = is_interval(&loaded.graph, &c);
            emit(out, &formats::report_to_json(&report))?;
            if verbose {
                for v in &report.violations {
                    eprintln!("{v}");
                }
            }
            Ok(if report.verdict() { 0 } else { 1 })
        }
        Command::Solve {
            graph,
            t,
            format,
            search,
            out,
        } => {
            let loaded = load_graph(graph)?;
            let outcome = search_interval_coloring(&loaded.graph, *t, search.options());
            if verbose {
                eprintln!("t = {t}: {:?} after {} nodes", outcome.status, outcome.nodes);
            }
            let text = match (&outcome.coloring, format) {
                (Some(c), Format::Dot) => coloring_text(&loaded.graph, c, Format::Dot)?,
                (_, Format::Csv) => {
                    return Err(CliError::Usage(
                        "csv output is only available for `spectrum`".into(),
                    ))
                }
                (c, _) => formats::to_json(&json!({
                    "t": t,
                    "status": outcome.status,
                    "nodes": outcome.nodes,
                    "coloring": c.as_ref().map(|c| ColoringJson::from_coloring(&loaded.graph, c)),
                })),
            };
            emit(out, &text)?;
            Ok(outcome.status.exit_code())
        }
        Command::Spectrum {
            graph,
            cap,
            format,
            search,
            out,
        } => {
            let loaded = load_graph(graph)?;
            let report = interval_spectrum(&loaded.graph, cap.0, search.options())?;
            if verbose {
                for run in &report.runs {
                    eprintln!(
                        "t = {}: {:?}, {} nodes, {} ms",
                        run.t, run.status, run.nodes, run.millis
                    );
                }
            }
            let text = match format {
                Format::Json => formats::spectrum_to_json(&loaded.graph, &report),
                Format::Csv => formats::spectrum_to_csv(loaded.n, &report),
                Format::Dot => {
                    return Err(CliError::Usage(
                        "dot output is not available for `spectrum`".into(),
                    ))
                }
            };
            emit(out, &text)?;
            let open = !report.inconclusive_t.is_empty();
            Ok(if open {
                2
            } else if report.feasible_t.is_empty() {
                1
            } else {
                0
            })
        }
        Command::Bounds { graph, out } => {
            let loaded = load_graph(graph)?;
            emit(out, &formats::to_json(&bound_report(&loaded.graph)))?;
            Ok(0)
        }
        Command::Diameter { graph, out } => {
            let loaded = load_graph(graph)?;
            let closed_form = loaded.n.map(closed_form_diameter).transpose()?;
            let value = json!({ "diameter": loaded.graph.diameter(), "closed_form": closed_form });
            emit(out, &formats::to_json(&value))?;
            Ok(0)
        }
        Command::ChiPrime { graph, search, out } => {
            let loaded = load_graph(graph)?;
            let delta = loaded.graph.max_degree();
            let outcome = search_proper_coloring(&loaded.graph, delta as u32, search.options());
            let value = json!({
                "delta": delta,
                "status": outcome.status,
                "chromatic_index_is_delta": match outcome.status {
                    SearchStatus::Feasible => Some(true),
                    SearchStatus::Infeasible => Some(false),
                    SearchStatus::Inconclusive => None,
                },
                "nodes": outcome.nodes,
            });
            emit(out, &formats::to_json(&value))?;
            Ok(outcome.status.exit_code())
        }
        Command::ExportDot { graph, coloring, out } => {
            let loaded = load_graph(graph)?;
            let c = coloring
                .as_ref()
                .map(|p| load_coloring(&loaded, Some(p)))
                .transpose()?;
            emit(out, &formats::export_dot(&loaded.graph, c.as_ref())?)?;
            Ok(0)
        }
    }
}

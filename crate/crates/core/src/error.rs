use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={vertex_count}")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("({0}, {1}) is not an edge of the graph")]
    UnknownEdge(usize, usize),

    #[error("edge ({0}, {1}) has no color")]
    MissingColor(usize, usize),

    #[error("edge ({0}, {1}) is colored more than once")]
    DuplicateColor(usize, usize),

    #[error("color {color} is outside 1..={t}")]
    ColorOutOfRange { color: u32, t: u32 },

    #[error("coloring has {got} colors but the graph has {expected} edges")]
    ColoringLength { got: usize, expected: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Domain(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

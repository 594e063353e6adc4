use thiserror::Error;

use crate::colorers::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    PartialColoring { expected: usize, got: usize },
    #[error("vertex {0} has no color")]
    Unassigned(usize),
    #[error("vertex {vertex} has color {color} outside a palette of {palette}")]
    ColorOutOfPalette {
        vertex: usize,
        color: usize,
        palette: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph contains K4 on {0:?}")]
    ContainsK4(Vec<usize>),
    #[error("graph contains the triangle {0:?}")]
    ContainsTriangle(Vec<usize>),
    #[error("graph contains the cycle {0:?}")]
    NotAForest(Vec<usize>),
    #[error("{n} vertices exceeds the limit of {limit} for this operation")]
    SizeLimit { n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("class assumption violated: {0}")]
    ClassViolation(Box<Violation>),
    #[error("decomposition depth {depth} exceeded the limit {limit}")]
    RecursionLimit { depth: usize, limit: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown filter `{0}`")]
    UnknownFilter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

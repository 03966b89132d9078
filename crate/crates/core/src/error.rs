use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {reason} (at `{token}`)")]
    Parse {
        line: usize,
        token: String,
        reason: String,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {index} out of range for a graph with {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("{op} supports at most {limit} vertices, got {n}")]
    SizeLimit {
        op: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("{op} needs at least {need} vertices, got {n}")]
    TooFewVertices {
        op: &'static str,
        need: usize,
        n: usize,
    },
    #[error("{op} needs at least one edge")]
    NoEdges { op: &'static str },
    #[error("colouring has length {got}, graph has {expected} edges")]
    ColouringLength { expected: usize, got: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is rigid, not flexible")]
    NotFlexible,
    #[error("graph is not minimally rigid")]
    NotMinimallyRigid,
    #[error("vertices {0} and {1} lie in a common rigid component")]
    CommonRigidComponent(usize, usize),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("colouring is not a NAP-colouring")]
    NotNap,
    #[error("invalid vertex split: {0}")]
    InvalidSplit(String),
    #[error("invalid gluing step: {0}")]
    InvalidGlue(String),
    #[error("input does not have the expected shape: {0}")]
    WrongShape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by an input that violates an operation's
    /// mathematical precondition (as opposed to malformed input).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotConnected
                | Error::NotTwoConnected
                | Error::NotFlexible
                | Error::NotMinimallyRigid
                | Error::CommonRigidComponent(..)
                | Error::InvalidSeparation(_)
                | Error::NotNap
                | Error::InvalidSplit(_)
                | Error::InvalidGlue(_)
                | Error::WrongShape(_)
                | Error::SizeLimit { .. }
                | Error::TooFewVertices { .. }
                | Error::NoEdges { .. }
                | Error::IsolatedVertex(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0} -- {1} while parallel edges are disallowed")]
    DuplicateEdge(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("coloring covers {got} items but the graph has {expected}")]
    ColoringSize { expected: usize, got: usize },
    #[error("color {color} is outside [1, {k}]")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("terminal {0} lies inside the vertex cut")]
    TerminalInCut(VertexId),
    #[error("terminals must be distinct, got {0} twice")]
    SameTerminals(VertexId),
    #[error("budget exceeded: {what} is {actual}, limit {limit}")]
    BudgetExceeded { what: &'static str, actual: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

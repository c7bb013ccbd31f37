use thiserror::Error;

use crate::multigraph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),
    #[error("edge {0} already exists")]
    DuplicateEdge(EdgeId),
    #[error("loop at vertex {0}: graphs are loopless")]
    Loop(VertexId),
    #[error("invalid operation: {0}")]
    Invalid(String),
    #[error("graph must be connected")]
    Disconnected,
    #[error("{what}: size {actual} exceeds the guard of {limit} (override the guard to proceed)")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

/// Checks a size against a guard. `None` disables the guard.
pub(crate) fn guard(what: &'static str, actual: usize, limit: Option<usize>) -> Result<()> {
    match limit {
        Some(limit) if actual > limit => Err(Error::Capacity {
            what,
            limit,
            actual,
        }),
        _ => Ok(()),
    }
}

/// Size guard for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Guard {
    /// The operation's documented default limit.
    #[default]
    Default,
    Limit(usize),
    /// No limit; the caller accepts exponential running time.
    Off,
}

impl Guard {
    pub(crate) fn check(self, what: &'static str, actual: usize, default: usize) -> Result<()> {
        let limit = match self {
            Guard::Default => Some(default),
            Guard::Limit(l) => Some(l),
            Guard::Off => None,
        };
        guard(what, actual, limit)
    }
}

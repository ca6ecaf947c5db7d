use thiserror::Error;

/// Errors produced by group construction, graph operations and the exact
/// invariant solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid group table: {0}")]
    Validation(String),

    #[error("index {index} out of range for {what} of size {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("the group is abelian, so its non-commuting graph has no vertices")]
    AbelianGroup,

    #[error("{operation}: {actual} vertices exceed the configured cap of {cap}")]
    Capacity {
        operation: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("{0}: graph is disconnected")]
    Disconnected(&'static str),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

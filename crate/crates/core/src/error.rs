use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A search exceeded its node budget before reaching a verdict.
    #[error("resource exhausted: {what} exceeded node limit {limit}")]
    ResourceExhausted { what: String, limit: u64 },

    /// An exact search was asked for an instance above its configured cap.
    #[error("refused: {0}")]
    CapExceeded(String),

    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for the errors that signal a budget or cap refusal rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceExhausted { .. } | Error::CapExceeded(_))
    }
}

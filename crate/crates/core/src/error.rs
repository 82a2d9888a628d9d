use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0},{1}}} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("sequence has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("negative entry {0} in sequence")]
    NegativeEntry(i64),
    #[error("graph on {n} vertices exceeds the configured cap of {cap} for {what}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn params(family: &str, reason: impl Into<String>) -> Self {
        Error::InvalidParams {
            family: family.to_string(),
            reason: reason.into(),
        }
    }

    /// True for errors caused by a resource guard rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} is outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("invalid pattern: {0}")]
    Pattern(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("infeasible construction: {0}")]
    Infeasible(String),
    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("n = {n} exceeds the exhaustive search cap of {cap}")]
    SearchCap { n: usize, cap: usize },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

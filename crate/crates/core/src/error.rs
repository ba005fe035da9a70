use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Lie type: {0}")]
    InvalidType(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not integral")]
    NotIntegral(String),
    #[error("weight {0} is not a vertex of the weight polytope")]
    NotVertex(String),
    #[error("empty weight list")]
    EmptyWeights,
    #[error("{0}")]
    Domain(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("capability limit: {0}")]
    Capability(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

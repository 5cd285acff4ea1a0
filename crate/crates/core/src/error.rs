use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} bound exceeded: {got} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("not a group homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("not a ring homomorphism: {0}")]
    NotRingHomomorphism(String),

    #[error("map is not bijective: {0}")]
    NotBijective(String),

    #[error("element outside ring: {0}")]
    ElementOutsideRing(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

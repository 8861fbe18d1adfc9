use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("weight has {parts} nonzero parts but rank is {rank}")]
    RankTooSmall { parts: usize, rank: usize },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("dimension vector {gamma:?} is not bounded by {alpha:?}")]
    NotSubDimension {
        gamma: Vec<usize>,
        alpha: Vec<usize>,
    },

    #[error("dimension vectors have {0} and {1} components")]
    LengthMismatch(usize, usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("manifest: {0}")]
    Manifest(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(what: &'static str, input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
        reason: reason.into(),
    }
}

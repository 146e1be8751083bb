use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no feasible sample after {draws} draws ({placed} of {requested} vertices placed)")]
    Infeasible {
        draws: u64,
        placed: usize,
        requested: usize,
    },

    #[error("dense operator of dimension {dim} exceeds the limit of {limit}")]
    TooLarge { dim: usize, limit: usize },

    #[error("fit failed: {0}")]
    Fit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

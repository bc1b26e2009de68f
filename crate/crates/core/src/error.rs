use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rate `{0}` must be strictly positive")]
    NonPositiveRate(&'static str),
    #[error("rate `{0}` must be nonnegative and finite")]
    NegativeRate(&'static str),
    #[error("sigma1 must be nonzero")]
    ZeroSigma1,
    #[error("sigma2 must be nonzero for this operation")]
    SigmaTwoZero,
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("state became non-finite at step {step}")]
    NonFiniteState { step: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("not enough data: {0}")]
    InsufficientData(String),
    #[error("empty input")]
    EmptyInput,
    #[error("histogram shapes do not match")]
    ShapeMismatch,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

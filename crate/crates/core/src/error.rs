use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A physical quantity outside the range where the model is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The caller asked for something the model does not offer.
    #[error("usage error: {0}")]
    Usage(String),

    /// A matrix failed a numerical contract (unitarity, Hermiticity, ...).
    #[error("numerical contract violated: {0}")]
    Numerical(String),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("validation error: {0}")]
    Validation(String),

    /// A measurement result that the two-level relaxation model cannot produce.
    #[error("out of model: {0}")]
    OutOfModel(String),

    #[error("all {attempts} Monte Carlo samples were unphysical (rejection rate 100%)")]
    AllRejected { attempts: usize },
}

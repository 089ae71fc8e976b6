use thiserror::Error;

/// Crate-wide error type.  Variants mirror how things go wrong in practice:
/// malformed caller input, a matrix that is not a valid state, parameters
/// outside their physical domain, bad tool configuration, a numerical
/// routine losing accuracy, or a solver failing to converge / to give an
/// unambiguous answer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input: {0}")]
    Input(String),
    #[error("state: {0}")]
    State(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("config: {0}")]
    Config(String),
    #[error("numerical: {0}")]
    Numerical(String),
    #[error("solver: {0}")]
    Solver(String),
    #[error("ambiguous: {0}")]
    Ambiguous(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

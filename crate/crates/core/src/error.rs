use thiserror::Error;

/// Errors raised by the library.
///
/// `Parameter` and `Modulus` are caller mistakes. `Feasibility` means the request
/// is well formed but too large to run exhaustively. `DegenerateInput` marks an
/// input that violates the hypotheses of an identity (a vanishing denominator),
/// which reports keep apart from the identity itself failing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("modulus error: {0}")]
    Modulus(String),

    #[error("infeasible: {0}")]
    Feasibility(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

use thiserror::Error;

/// Errors raised by the linear-algebra kernels, the bound registry and the lab.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and column")]
    Empty,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not Hermitian (deviation {deviation:e}, allowed {allowed:e})")]
    NotHermitian { deviation: f64, allowed: f64 },
    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e}, allowed {allowed:e})")]
    NotPositiveSemidefinite { eigenvalue: f64, allowed: f64 },
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter { name: &'static str, value: f64, reason: &'static str },
    #[error("{0} did not converge")]
    NoConvergence(&'static str),
    #[error("bound `{0}` needs a second operand B")]
    MissingOperand(&'static str),
    #[error("bound `{0}` takes a single operand, but B was supplied")]
    UnexpectedOperand(&'static str),
    #[error("unknown bound tag `{0}`")]
    UnknownBound(String),
    #[error("unknown ensemble kind `{0}`")]
    UnknownEnsemble(String),
    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_param(name: &'static str, value: f64, ok: bool, reason: &'static str) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name, value, reason })
    }
}

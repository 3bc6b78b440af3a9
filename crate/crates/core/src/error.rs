use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("capacity exceeded: {what} (n = {n}, cap = {cap})")]
    Capacity { what: &'static str, n: usize, cap: usize },

    #[error("invalid Pauli string: {0}")]
    InvalidPauli(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    #[error("group not finite at this cap ({cap} elements)")]
    GroupNotFinite { cap: usize },

    #[error("unsupported symmetry: {0}")]
    UnsupportedSymmetry(String),

    #[error("generator must be Hermitian (real coefficients): {0}")]
    Convention(String),

    #[error("degenerate group: {0}")]
    DegenerateGroup(String),

    #[error("numeric failure: {message} (residual {residual:.3e})")]
    Numeric { message: String, residual: f64 },

    #[error("parameter outside its domain: {0}")]
    Domain(String),

    #[error("terms may not commute; product formula inapplicable ({0})")]
    ProductFormulaInapplicable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

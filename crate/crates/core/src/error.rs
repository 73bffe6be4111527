use thiserror::Error;

/// Errors raised by the ideal calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values live in ambient rings with different numbers of variables.
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the ambient ring needs at least one variable")]
    ZeroDimension,
    #[error("exponent must be nonnegative, got {0}")]
    NegativeExponent(String),
    #[error("variable index {index} is out of range for {dim} variables")]
    VariableIndex { index: usize, dim: usize },
    #[error("flag must be 0 or 1, got {0}")]
    InvalidFlag(u8),
    #[error("lcm of an empty list of monomials")]
    EmptyLcm,
    #[error("cannot intersect an empty family of generator sets")]
    EmptyFamily,
    #[error("b not in ideal")]
    NotInIdeal,
    #[error("empty region: the zero ideal has no staircase")]
    EmptyRegion,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

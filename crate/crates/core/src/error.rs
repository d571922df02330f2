use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("structure constants not antisymmetric: {0}")]
    NotAntisymmetric(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn check_index(index: usize, bound: usize) -> Result<()> {
    if (1..=bound).contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, bound })
    }
}

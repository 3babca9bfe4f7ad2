use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("{strands} strands exceeds the Temperley-Lieb bound of {max}")]
    TooManyStrands { strands: usize, max: usize },
}

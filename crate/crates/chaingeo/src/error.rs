use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("radicand mismatch: {0} vs {1}")]
    RadicandMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    NegativeSqrt,
    #[error("coincident circles: tangency is undefined")]
    CoincidentCircles,
    #[error("circles are not externally tangent")]
    NotTangent,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction failed its own verification: {0}")]
    ConstructionFailed(String),
    #[error("bad rational literal: {0:?}")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

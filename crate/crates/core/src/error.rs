use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0} is outside 0..=4")]
    DegreeOutOfRange(usize),

    #[error("graded piece {0} is not homogeneous of that degree")]
    NotHomogeneous(usize),

    #[error("total Chern class must have constant term 1, found {0}")]
    NonUnitConstant(String),

    #[error("exponential needs a nilpotent argument, found constant term {0}")]
    NotNilpotent(String),

    #[error("series exponential needs an argument of z-valuation at least 1")]
    SeriesNotNilpotent,

    #[error("phi index {0} must be at least -1")]
    PhiIndex(i64),

    #[error("invalid query (d={d}, k={k}): {constraint} is violated")]
    InvalidQuery { d: i64, k: i64, constraint: &'static str },

    #[error("routes disagree: {0}")]
    RouteMismatch(String),

    #[error("torus weights must be pairwise distinct")]
    DegenerateWeights,

    #[error("expected an integer, found {0}")]
    NonIntegral(String),
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exponent {exponent} in variable t{var} exceeds the budget |e| <= {budget}")]
    ExponentBudget { var: usize, exponent: i64, budget: i64 },

    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("rational character has a zero denominator")]
    ZeroDenominator,

    #[error("computation needs {required} basis words, budget is {budget}")]
    WordBudget { required: u128, budget: u128 },

    #[error("element is not homogeneous in the |.|-degree")]
    Inhomogeneous,

    #[error("grade violation: {0}")]
    GradeViolation(String),

    #[error("multiplication is not associative: {0}")]
    NonAssociative(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dimension vector {0:?} is not thin")]
    NotThin(Vec<usize>),

    #[error("weight cutoff {cutoff} is too small for the series to stabilize")]
    CutoffTooSmall { cutoff: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// True for errors caused by exceeding a size or truncation budget rather
    /// than by malformed input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::ExponentBudget { .. } | Error::WordBudget { .. } | Error::CutoffTooSmall { .. }
        )
    }
}

use thiserror::Error;

/// Errors surfaced by the exact and numeric channels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(
        "character requires |lambda| = |alpha|; got weights {lambda_weight} and {alpha_weight}"
    )]
    WeightMismatch {
        lambda_weight: u32,
        alpha_weight: u32,
    },

    #[error("matrix dimension {d} is too small; need at least {required}")]
    DimensionTooSmall { d: usize, required: usize },

    #[error("matrix size {n} is smaller than the longest partition length {required}")]
    MatrixTooSmall { n: usize, required: usize },

    #[error("Fourier coefficient d_{index} lies outside the truncation range [-{max}, {max}]")]
    FourierIndexOutOfRange { index: i64, max: i64 },

    #[error("Toeplitz denominator determinant is numerically singular at n = {n}")]
    SingularDenominator { n: usize },
}

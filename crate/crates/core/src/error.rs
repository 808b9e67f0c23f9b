use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid quermassintegral vector: {0}")]
    InvalidQuermass(String),

    #[error("Aleksandrov-Fenchel violation at index {index}: W_i^2 = {square}, W_(i-1) W_(i+1) = {product}")]
    LogConcavity {
        index: usize,
        square: f64,
        product: f64,
    },

    #[error("leading coefficient is zero")]
    ZeroLeading,

    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,

    #[error("need at least two nonzero coefficients, found {0}")]
    TooFewCoefficients(usize),

    #[error("coefficients must be positive from the lowest nonzero term upwards")]
    NonPositiveCoefficient,

    #[error("root iteration did not converge after {sweeps} sweeps for polynomial {coeffs:?}")]
    NoConvergence { sweeps: usize, coeffs: Vec<f64> },

    #[error("Routh-Hurwitz test needs a nonconstant polynomial")]
    ConstantPolynomial,

    #[error("polynomial has a zero root; deflate it before the Routh-Hurwitz test")]
    ZeroRoot,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("quadrature did not converge ({0})")]
    Quadrature(String),

    #[error("body spec parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

use num_complex::Complex64;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole at {0}")]
    Pole(Complex64),
    #[error("argument outside the domain: {0}")]
    Domain(&'static str),
    #[error("series diverges: {0}")]
    Divergent(&'static str),
    #[error("no convergence after {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("division by a vanishing denominator at {0}")]
    DivisionByZero(Complex64),
    #[error("non-finite sample at {0}")]
    NonFinite(Complex64),
    #[error("interval arithmetic could not decide step {step}; more digits required")]
    PrecisionExhausted { step: usize },
    #[error("seed {index} failed to converge")]
    SeedFailure { index: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn pole(z: Complex64) -> Error {
    Error::Pole(z)
}

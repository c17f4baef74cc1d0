use thiserror::Error;

/// Failures raised while constructing polynomials or checking identities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// A mathematical precondition failed: a Pochhammer factor vanished or a
    /// Gamma function was requested at a nonpositive integer.
    #[error("pole: {0}")]
    Pole(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("gamma ratio does not reduce to a rational: {0}")]
    NonRationalGamma(String),
    #[error("unresolved half power of {0}")]
    UnresolvedHalfPower(String),
    /// An expansion that must be real produced a nonzero imaginary part.
    #[error("nonvanishing imaginary part: {0}")]
    ImaginaryPart(String),
    /// An expansion that must be free of the adjoined radical was not.
    #[error("nonvanishing radical part: {0}")]
    RadicalPart(String),
    #[error("quadratic extension moduli differ")]
    ModulusMismatch,
    #[error("series error: {0}")]
    Series(String),
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("expansion too large: {0}")]
    TooLarge(String),
}

impl Error {
    /// Whether the error reflects a violated precondition on the parameters
    /// rather than an internal inconsistency.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::Pole(_) | Error::DivisionByZero | Error::InvalidParameter(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

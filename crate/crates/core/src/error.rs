use thiserror::Error;

/// Errors raised by the computational modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("polynomial is not monic: leading coefficient is {0}")]
    NotMonic(String),

    #[error("duplicate root {0} in list")]
    DuplicateRoot(String),

    #[error("no closed form applies for d = {d} with m = {m}, n = {n} (m < d < n-1)")]
    NotApplicable { m: usize, n: usize, d: usize },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("corrupted input: {0}")]
    CorruptedInput(String),

    #[error("malformed rational literal {0:?}")]
    MalformedRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

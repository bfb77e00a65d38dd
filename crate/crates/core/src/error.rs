use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval: lower bound must be below upper bound")]
    EmptyInterval,
    #[error("degenerate Jacobi parameters at recurrence step n={n}")]
    DegenerateJacobi { n: usize },
    /// A family constraint such as `g>h` is violated.
    #[error("{0}")]
    InvalidParams(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("quasi-rational prefactors are incompatible")]
    IncompatibleExponents,
    #[error("expansion does not exist (row {n})")]
    ExpansionDoesNotExist { n: usize },
    #[error("no shifted classical basis gives banded expansions")]
    NoBandedBasis,
    #[error("{0}")]
    Inconsistent(String),
}

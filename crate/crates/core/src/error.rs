use thiserror::Error;

/// Errors raised by the arithmetic layers and the subresultant algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("operands live over different rings (p = {0} and p = {1})")]
    RingMismatch(u64, u64),

    #[error("division by a ball with no known nonzero digit")]
    DivisionByUnknownZero,

    #[error("division by zero")]
    DivisionByZero,

    #[error("division is not exact in this coefficient ring")]
    InexactDivision,

    #[error("{0} is not invertible modulo p^n")]
    NotInvertible(String),

    #[error("leading coefficient of the divisor has no known nonzero digit (step {step})")]
    LeadingCoefficientUnknownZero { step: usize },

    #[error("zero polynomial has no Gauss valuation")]
    ZeroPolynomial,

    #[error("principal subresultant r_{j} has no known nonzero digit")]
    NotNormal { j: usize },

    #[error("hypothesis (H) violated: val(r_{j}) = {valuation} >= {threshold}")]
    HypothesisHViolated { j: usize, valuation: i64, threshold: i64 },

    #[error("transcript is incomplete: {0}")]
    IncompleteTranscript(String),

    #[error("Jacobian is degenerate: {0}")]
    DegenerateJacobian(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("output error: {0}")]
    Output(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

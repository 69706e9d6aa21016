use thiserror::Error;

/// Errors raised by series construction, arithmetic and the identity registry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero leading coefficient")]
    ZeroLeadingCoefficient,
    #[error("exponent {n} out of tracked range {min}..={order}")]
    OutOfRange { n: i64, min: i64, order: i64 },
    #[error("insufficient order: need {needed}, have {have}")]
    InsufficientOrder { needed: i64, have: i64 },
    #[error("divergent theta: f(a, b) needs exponent(a) + exponent(b) > 0, got {0}")]
    DivergentTheta(i64),
    #[error("pole at n = {0}")]
    PoleAt(i64),
    #[error("divergent spec: {0}")]
    DivergentSpec(String),
    #[error("inapplicable prime {0}")]
    InapplicablePrime(u64),
    #[error("not normalized: coefficient of q^1 is {0}")]
    NotNormalized(String),
    #[error("indefinite form ({0}, {1}, {2})")]
    IndefiniteForm(i64, i64, i64),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("syntax error at offset {offset}: unexpected {token}")]
    Syntax { offset: usize, token: String },
    #[error("arity error: {0}")]
    Arity(String),
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable index {index} is outside a ring of arity {arity}")]
    ArityMismatch { index: usize, arity: usize },
    #[error("the zero polynomial has no initial term")]
    ZeroPolynomial,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("ideal still involves `{0}` in every basis tried")]
    ContractionFailed(String),
    #[error("the unit ideal has no Krull dimension")]
    UnitIdeal,
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
    #[error("rings differ")]
    RingMismatch,
}

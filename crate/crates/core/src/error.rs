use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator vanishes at q = {at}")]
    Pole { at: String },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("polynomial degree {degree} exceeds the configured cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },

    #[error("i_{k} is zero; the dual recurrence cannot be solved for phi_{}", k + 1)]
    ZeroI { k: usize },

    #[error("sequence `{name}` is undefined at index {index}")]
    SequenceUndefined { name: String, index: usize },

    #[error("index ({n}, {k}) lies outside the triangle")]
    IndexOutOfRange { n: usize, k: usize },

    #[error("weight vector has {len} entries but {needed} are required")]
    WeightsTooShort { needed: usize, len: usize },

    #[error("`{0}` does not constitute a duality triad")]
    NotATriad(String),

    #[error("polynomial of degree {degree} exceeds the operator depth {depth}")]
    DepthExceeded { degree: usize, depth: usize },

    #[error("operator depths differ: {left} vs {right}")]
    DepthMismatch { left: usize, right: usize },

    #[error("constant term is zero; the series has no reciprocal")]
    NonUnit,

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("psi_{0} is zero; the sequence is not admissible")]
    NotAdmissible(usize),

    #[error("operator weight entry {index} has degree {degree} in qhat, at most {max} allowed")]
    WeightDegree { index: usize, degree: usize, max: usize },

    #[error("invalid triad spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("exponent must be a non-negative integer: `{0}`")]
    BadExponent(String),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("expected {expected} images, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),

    #[error("the zero ideal has no ideal transform")]
    ZeroIdeal,

    #[error("the unit ideal defines the empty set")]
    UnitIdeal,

    #[error("derivation is not locally nilpotent on `{variable}` within {bound} applications")]
    NotLocallyNilpotent { variable: String, bound: usize },

    #[error("ideal is not stable under the derivation: D({generator}) = {image} is not in the ideal")]
    NotStable { generator: String, image: String },

    #[error("f{index} vanishes identically modulo the ideal of Y")]
    DegenerateDatum { index: usize },

    #[error("function is not regular at level {level}: numerator*({generator}) is not in (denominator) + I(Y)")]
    NotRegular { level: usize, generator: String },

    #[error("cofactor extraction failed: {0}")]
    Cofactor(String),

    #[error("line {line}: {message}")]
    Input { line: usize, message: String },

    #[error("{0}")]
    Invalid(String),
}

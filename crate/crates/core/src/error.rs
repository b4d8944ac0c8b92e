use thiserror::Error;

/// Errors raised by the library. Every variant carries enough detail to be
/// reported verbatim by the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("pole at point: denominator factor {0} vanishes")]
    PoleAt(String),
    #[error("group enumeration exceeded {0} elements")]
    NotFinite(usize),
    #[error("root system axiom violated: {0}")]
    AxiomViolation(String),
    #[error("elements are not comparable in the Bruhat order: {0}")]
    NotComparable(String),
    #[error("duality system is singular: {0}")]
    SingularGram(String),
    #[error("internal arithmetic error, expected exact division: {0}")]
    InternalNonDivisible(String),
    #[error("polynomial is not invariant: {0}")]
    NotInvariant(String),
    #[error("point is not standard: {detail}")]
    NotStandard { detail: String, suggestion: Option<String> },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable out of shape: {0}")]
    OutOfShape(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown group element: {0}")]
    UnknownElement(String),
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("Jordan bound violated: {0}")]
    JordanBound(String),
}

impl Error {
    /// Stable machine readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::PoleAt(_) => "PoleAt",
            Error::NotFinite(_) => "NotFinite",
            Error::AxiomViolation(_) => "AxiomViolation",
            Error::NotComparable(_) => "NotComparable",
            Error::SingularGram(_) => "SingularGram",
            Error::InternalNonDivisible(_) => "InternalNonDivisible",
            Error::NotInvariant(_) => "NotInvariant",
            Error::NotStandard { .. } => "NotStandard",
            Error::NoSolution(_) => "NoSolution",
            Error::Syntax { .. } => "SyntaxError",
            Error::OutOfShape(_) => "OutOfShape",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::UnknownElement(_) => "UnknownElement",
            Error::LimitExceeded(_) => "LimitExceeded",
            Error::JordanBound(_) => "JordanBound",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

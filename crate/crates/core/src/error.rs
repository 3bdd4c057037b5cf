use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular")]
    Singular,
    #[error("no antipode: the antipode equations are inconsistent")]
    NoAntipode,
    #[error("antipode not unique: solution space has dimension {0}")]
    NotUnique(usize),
    #[error("antipode fails S(h1)h2S(h3) = S(h) at basis element {0}")]
    Axiom26Failure(usize),
    #[error("missing antipode")]
    MissingAntipode,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("antipode is not invertible")]
    NoAntipodeInverse,
    #[error("counit is degenerate on the target base: {0}")]
    Degenerate(String),
    #[error("not a Frobenius weak Hopf algebra: {0}")]
    NotFrobenius(String),
    #[error("inconsistent dual integral: {0}")]
    Inconsistent(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("S^2 is not the identity on the minimal weak Hopf subalgebra")]
    RegularityViolated,
    #[error("functional is not half-grouplike: {0}")]
    NotHalfGrouplike(String),
    #[error("undecidable within the configured search: {0}")]
    Undecidable(String),
    #[error("polynomial does not split over the base field: {0}")]
    NonSplit(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("not a twist: {0}")]
    NotATwist(String),
    #[error("twist normalizer v is not invertible")]
    VNotInvertible,
    #[error("dynamical equation violated at character {character}: {residual}")]
    DynamicalEquationViolated { character: usize, residual: String },
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("trace condition violated: {0}")]
    TraceConditionViolated(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    /// Short machine-readable tag, used in JSON error payloads.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch(_) => "FieldMismatch",
            Error::Parse(_) => "ParseError",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NoSolution => "NoSolution",
            Error::Singular => "Singular",
            Error::NoAntipode => "NoAntipode",
            Error::NotUnique(_) => "NotUnique",
            Error::Axiom26Failure(_) => "Axiom26Failure",
            Error::MissingAntipode => "MissingAntipode",
            Error::NotInvertible => "NotInvertible",
            Error::NoAntipodeInverse => "NoAntipodeInverse",
            Error::Degenerate(_) => "Degenerate",
            Error::NotFrobenius(_) => "NotFrobenius",
            Error::Inconsistent(_) => "Inconsistent",
            Error::Mismatch(_) => "Mismatch",
            Error::RegularityViolated => "RegularityViolated",
            Error::NotHalfGrouplike(_) => "NotHalfGrouplike",
            Error::Undecidable(_) => "Undecidable",
            Error::NonSplit(_) => "NonSplit",
            Error::PreconditionUnmet(_) => "PreconditionUnmet",
            Error::NotATwist(_) => "NotATwist",
            Error::VNotInvertible => "VNotInvertible",
            Error::DynamicalEquationViolated { .. } => "DynamicalEquationViolated",
            Error::FieldTooSmall(_) => "FieldTooSmall",
            Error::TraceConditionViolated(_) => "TraceConditionViolated",
            Error::InvalidPresentation(_) => "InvalidPresentation",
            Error::AxiomFailure(_) => "AxiomFailure",
            Error::Schema(_) => "SchemaError",
        }
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch in {operation}: {detail}")]
    DimensionMismatch {
        operation: &'static str,
        detail: String,
    },

    #[error("matrix is singular ({0})")]
    Singular(&'static str),

    #[error("{operation} requires an exact field, got {field}")]
    InexactField {
        operation: &'static str,
        field: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("the Chebyshev basis needs a field of characteristic other than 2")]
    ChebyshevCharacteristic2,

    #[error("operation requires the monomial basis")]
    NonMonomialBasis,

    #[error("numerator does not vanish on x = y, not divisible by x - y")]
    NotDivisibleByDiagonal,

    #[error("grade {grade} is smaller than degree {degree}")]
    GradeTooSmall { grade: usize, degree: usize },

    #[error("multiplier compatibility M1*P1 = M2*P2 fails")]
    IncompatibleMultipliers,

    #[error("matrix polynomials do not commute")]
    NonCommuting,

    #[error("leading coefficient is singular")]
    SingularLeadingCoefficient,

    #[error("matrix polynomial is not regular (det P identically zero)")]
    NonRegular,

    #[error("ansatz has wrong length: expected {expected}, got {got}")]
    AnsatzLength { expected: usize, got: usize },

    #[error("ansatz polynomial is zero")]
    ZeroAnsatz,

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("field has too few elements for {0}")]
    FieldTooSmall(&'static str),

    #[error("structure precondition fails: {0}")]
    StructurePrecondition(String),

    #[error("ratio undefined: v vanishes at the eigenvalue")]
    UndefinedRatio,

    #[error("eigensolver failure: {0}")]
    Eigensolver(String),

    /// An identity guaranteed by theory failed; signals an implementation bug.
    #[error("internal assertion failed: {0}")]
    TheoremViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "not_square",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::Singular(_) => "singular",
            Error::InexactField { .. } => "inexact_field",
            Error::Parse(_) => "parse",
            Error::InvalidBasis(_) => "invalid_basis",
            Error::ChebyshevCharacteristic2 => "chebyshev_characteristic_2",
            Error::NonMonomialBasis => "non_monomial_basis",
            Error::NotDivisibleByDiagonal => "not_divisible_by_diagonal",
            Error::GradeTooSmall { .. } => "grade_too_small",
            Error::IncompatibleMultipliers => "incompatible_multipliers",
            Error::NonCommuting => "non_commuting",
            Error::SingularLeadingCoefficient => "singular_leading_coefficient",
            Error::NonRegular => "non_regular",
            Error::AnsatzLength { .. } => "ansatz_length",
            Error::ZeroAnsatz => "zero_ansatz",
            Error::ZeroDegree => "zero_degree",
            Error::FieldTooSmall(_) => "field_too_small",
            Error::StructurePrecondition(_) => "structure_precondition",
            Error::UndefinedRatio => "undefined_ratio",
            Error::Eigensolver(_) => "eigensolver",
            Error::TheoremViolation(_) => "theorem_violation",
        }
    }
}

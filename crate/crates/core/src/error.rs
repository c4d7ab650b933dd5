use thiserror::Error;

/// Coarse grouping of [`Error`] values, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Validation,
    SizeCap,
    Convergence,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex label `{0}`")]
    InvalidLabel(String),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is disconnected after normalization")]
    DisconnectedAfterNormalization,
    #[error("need at least 2 boundary nodes, got {0}")]
    TooFewBoundaryNodes(usize),
    #[error("boundary nodes `{0}` and `{1}` are adjacent")]
    BoundaryNotIndependent(String, String),
    #[error("boundary nodes `{0}` and `{1}` share a boundary value")]
    BoundaryValuesNotInjective(String, String),
    #[error("boundary lists {0} vertices but {1} values")]
    BoundaryLengthMismatch(usize, usize),
    #[error("vertex `{0}` listed twice in the boundary")]
    DuplicateBoundary(String),
    #[error("augmented psi graph is disconnected")]
    DisconnectedAugmentation,
    #[error("{what} exceeds the enumeration cap ({size} > {cap})")]
    InstanceTooLarge { what: &'static str, size: u128, cap: u128 },
    #[error("need at least {min} colors, got {got}")]
    TooFewColors { min: usize, got: usize },
    #[error("orientation is not semicompatible")]
    NotSemicompatible,
    #[error("orientation does not match the edge set")]
    OrientationMismatch,
    #[error("point lies on the hyperplane of edge `{0}`")]
    OnHyperplane(String),
    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weights cover {got} edges, expected {expected}")]
    WeightMismatch { expected: usize, got: usize },
    #[error("no weight for edge `{0}`")]
    MissingWeight(String),
    #[error("exact and floating-point weights cannot be mixed")]
    MixedNumericTags,
    #[error("singular linear system")]
    SingularSystem,
    #[error("energies must be strictly positive (edge `{0}`)")]
    NotPositiveWeights(String),
    #[error("Newton iteration for chamber {orientation} did not converge in {iterations} iterations")]
    DidNotConverge { orientation: String, iterations: usize },
    #[error("conductance roundtrip failed: {0}")]
    RoundtripFailure(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::InstanceTooLarge { .. } => ErrorCategory::SizeCap,
            Error::DidNotConverge { .. } => ErrorCategory::Convergence,
            Error::NonzeroRemainder | Error::Internal(_) | Error::RoundtripFailure(_) => {
                ErrorCategory::Internal
            }
            _ => ErrorCategory::Validation,
        }
    }

    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::Loop(_) => "Loop",
            Error::DuplicateEdge(_) => "DuplicateEdge",
            Error::Disconnected => "Disconnected",
            Error::DisconnectedAfterNormalization => "DisconnectedAfterNormalization",
            Error::TooFewBoundaryNodes(_) => "TooFewBoundaryNodes",
            Error::BoundaryNotIndependent(..) => "BoundaryNotIndependent",
            Error::BoundaryValuesNotInjective(..) => "BoundaryValuesNotInjective",
            Error::BoundaryLengthMismatch(..) => "BoundaryLengthMismatch",
            Error::DuplicateBoundary(_) => "DuplicateBoundary",
            Error::DisconnectedAugmentation => "DisconnectedAugmentation",
            Error::InstanceTooLarge { .. } => "InstanceTooLarge",
            Error::TooFewColors { .. } => "TooFewColors",
            Error::NotSemicompatible => "NotSemicompatible",
            Error::OrientationMismatch => "OrientationMismatch",
            Error::OnHyperplane(_) => "OnHyperplane",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::WeightMismatch { .. } => "WeightMismatch",
            Error::MissingWeight(_) => "MissingWeight",
            Error::MixedNumericTags => "MixedNumericTags",
            Error::SingularSystem => "SingularSystem",
            Error::NotPositiveWeights(_) => "NotPositiveWeights",
            Error::DidNotConverge { .. } => "DidNotConverge",
            Error::RoundtripFailure(_) => "RoundtripFailure",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::Parse(_) => "Parse",
            Error::NonzeroRemainder => "NonzeroRemainder",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

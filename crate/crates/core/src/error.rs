use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("incompatible algebras: {0} vs {1}")]
    IncompatibleAlgebras(String, String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("grade {got} is out of range for a {dim}-dimensional algebra")]
    GradeOutOfRange { got: usize, dim: usize },

    #[error("expected a homogeneous bivector")]
    NotABivector,

    #[error("non-invertible versor: {0}")]
    NonInvertibleVersor(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("expected a homogeneous grade-{0} multivector")]
    ExpectedGrade(usize),

    #[error("expected a round in {0} representation")]
    RepresentationMismatch(&'static str),

    #[error("point at infinity has no target coordinates")]
    PointAtInfinity,

    #[error("cannot compute the stabilizer of a zero multivector")]
    ZeroFixed,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("label outside unitarity region: radicand {radicand} at weight m = {m}")]
    OutsideUnitarity { m: f64, radicand: f64 },

    #[error("invalid representation label: {0}")]
    InvalidLabel(String),

    #[error("not a Lie subalgebra basis: {0}")]
    NotASubalgebra(String),

    #[error("truncation half-width must be at least 2, got {0}")]
    InvalidTruncation(usize),
}

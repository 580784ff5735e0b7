use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("division algebra tag mismatch: {0} vs {1}")]
    TagMismatch(&'static str, &'static str),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("point is not immersive: differential has rank {rank}, generic rank is {generic}")]
    NonImmersive { rank: usize, generic: usize },

    #[error("all target coordinates vanish at the base point")]
    VanishingPoint,

    #[error("certification failed for {what}: values {observed:?} disagree after {rounds} rounds (final bound {bound})")]
    Certification { what: String, observed: Vec<String>, rounds: usize, bound: i64 },

    #[error("degenerate random projection after {0} attempts")]
    DegenerateProjection(usize),

    #[error("clifford action is not well defined: {0}")]
    NotWellDefined(String),

    #[error("restricted quadrics are not proportional")]
    NotProportional,

    #[error("clifford relation fails under both signs")]
    RelationFailure,

    #[error("precondition not met: {0}")]
    NotApplicable(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

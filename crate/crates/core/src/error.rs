use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    /// `position` is 1-based, matching the text grammar.
    #[error("word is not reduced: beta at position {position} is negative")]
    NotReduced { position: usize },

    #[error("enumeration exceeded the cap of {cap} words")]
    CapExceeded { cap: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("the zero cone has no interior point")]
    ZeroCone,

    #[error("Cartan matrix is not simply laced")]
    NotSimplyLaced,

    #[error("word is not adapted to the quiver")]
    NotAdapted,

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("AR quiver recipe is inconsistent with the Euler form: {0}")]
    ConsistencyFailure(String),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("input exceeds the supported scale: {0}")]
    ScaleExceeded(String),

    #[error("interpolated Hall polynomial disagrees with the count at p = {prime}")]
    InterpolationInconsistent { prime: u64 },

    #[error("split term survived in the q-commutator")]
    SplitTermSurvived,

    #[error("missing weight coordinate for subset {0}")]
    MissingCoordinate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

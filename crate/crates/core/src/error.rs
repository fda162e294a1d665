use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A character other than `+`, `-` or whitespace in word text.
    #[error("unexpected character {found:?} at position {position}")]
    Parse { position: usize, found: char },

    #[error("word is not in reduced run form: {0}")]
    NotReducedForm(String),

    #[error("invalid run word: {0}")]
    InvalidRuns(String),

    #[error("not a model word: {0}")]
    NotModelWord(String),

    #[error("crossing number {c} is outside the supported range {min}..={max}")]
    CrossingNumber { c: usize, min: usize, max: usize },

    #[error("crossing number {0} is below 3")]
    TooFewCrossings(usize),

    #[error("crossing index {i} is outside 2..={max}")]
    CrossingIndex { i: usize, max: usize },

    /// `1 - s + c` was odd or negative; only an upstream bug produces this.
    #[error("genus parity error: 1 - s + c = {0} is not a nonnegative even integer")]
    Parity(i64),

    #[error("billiard word of length {0} closes to a 2-component link")]
    LinkLength(usize),

    #[error("diagram has {0} components, expected 1")]
    MultiComponent(usize),

    #[error("invalid fraction {p}/{q}: {reason}")]
    InvalidFraction {
        p: String,
        q: String,
        reason: &'static str,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

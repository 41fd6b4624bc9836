use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scroll rank must be ≥ 2")]
    ScrollRank,

    #[error("classes live on different scrolls: twists {left:?} vs {right:?}")]
    MismatchedScroll { left: Vec<i64>, right: Vec<i64> },

    #[error("{role} class {class} must have pure codimension {expected}")]
    Codimension {
        role: &'static str,
        class: String,
        expected: usize,
    },

    #[error("smooth 3-fold scroll requires g ≥ 6")]
    GenusTooSmall { genus: i64 },

    #[error("genus {genus} exceeds the supported maximum {max}")]
    GenusTooLarge { genus: i64, max: i64 },

    #[error("invalid scroll twists: {0}")]
    InvalidTwists(String),

    #[error("invalid syzygy invariants: {0}")]
    InvalidBetti(String),

    #[error("bundle rank must be at least 1")]
    ZeroRank,

    #[error("quotient rank {quotient} exceeds ambient rank {ambient}")]
    QuotientRank { quotient: u64, ambient: u64 },

    #[error("{0}")]
    OutOfRange(String),

    #[error("certificate has provenance {found}, expected {expected}")]
    Provenance {
        found: &'static str,
        expected: &'static str,
    },

    #[error("rational value does not fit the target integer type")]
    Overflow,
}

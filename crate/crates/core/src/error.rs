use thiserror::Error;

use crate::latin::LatinViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("amplitude is NaN or infinite")]
    NonFinite,

    #[error("vector norm {norm} is not within tolerance of 1")]
    NotNormalized { norm: f64 },

    #[error("matrix is not unitary (max |M^dagger M - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("unsupported order {order}: {reason}")]
    UnsupportedOrder { order: usize, reason: String },

    #[error("invalid Latin square: {0}")]
    InvalidLatin(LatinViolation),

    #[error("block size {size} is not allowed in dimension {dim} (need 2 <= s <= {dim})")]
    InvalidBlockSize { size: usize, dim: usize },

    #[error(
        "{count} equally spaced phases leave overlap {overlap:.9} for blocks up to {max_block}, above the allowed {limit:.9}"
    )]
    InsufficientSeparation {
        count: usize,
        max_block: usize,
        overlap: f64,
        limit: f64,
    },

    /// `first`/`second` are column indices for unitary comparisons and
    /// row-major cell indices for square-level grouping.
    #[error("overlap {overlap:.12} between items {first} and {second} falls inside the ambiguity band")]
    AmbiguousPhase {
        overlap: f64,
        first: usize,
        second: usize,
    },

    #[error("measured cardinality {count} is impossible for order {order}: {reason}")]
    InconsistentCardinality {
        count: usize,
        order: usize,
        reason: String,
    },

    #[error("phase classes are not transitive: items {first} and {second} share a class with overlap {overlap:.12}")]
    InconsistentGrouping {
        overlap: f64,
        first: usize,
        second: usize,
    },

    #[error("basis is not orthonormal (max deviation {deviation:e})")]
    NonOrthonormalBasis { deviation: f64 },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("vector has no component above the pivot threshold")]
    ZeroVector,

    #[error("order {order} is too small (minimum {min})")]
    OrderTooSmall { order: usize, min: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("cardinality {cardinality} is unachievable for order {order}: {reason}")]
    Unachievable {
        order: usize,
        cardinality: usize,
        reason: String,
    },

    #[error("achievability of cardinality {cardinality} for order {order} is unknown: {reason}")]
    UnknownAchievability {
        order: usize,
        cardinality: usize,
        reason: String,
    },

    #[error("cardinality {cardinality} is not in the order-8 catalog: {reason}")]
    NotInCatalog { cardinality: usize, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("document does not hold a valid quantum Latin square: {0}")]
    InvalidQls(String),

    #[error("unsupported schema version {found} (expected {expected})")]
    SchemaVersion { found: u32, expected: u32 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<LatinViolation> for Error {
    fn from(v: LatinViolation) -> Self {
        Error::InvalidLatin(v)
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

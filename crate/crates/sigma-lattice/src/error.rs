use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A ground set needs at least one point.
    #[error("ground set must contain at least one point")]
    EmptyGroundSet,

    /// A requested ground set is larger than the compiled-in limit.
    #[error("ground set of {size} points exceeds the capacity limit of {capacity}")]
    CapacityExceeded { size: usize, capacity: usize },

    /// Two objects that must live on the same ground set do not.
    #[error("ground set sizes differ: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    /// A point index lies outside its ground set.
    #[error("point {point} is outside a ground set of {size} points")]
    PointOutOfRange { point: usize, size: usize },

    /// A product-space set admits no representation over the given factors.
    #[error("not a member of the product sigma-algebra: {detail}")]
    NotInProduct { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("class bounds differ: {left} vs {right}")]
    ClassBoundMismatch { left: usize, right: usize },
    #[error("weight {weight} outside 1..={class_bound}")]
    WeightOutOfRange { weight: usize, class_bound: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    /// The logarithm of a group-like series failed to be a Lie element.
    /// Only an implementation bug can trigger this.
    #[error("series is not primitive in weight {weight}")]
    NotPrimitive { weight: usize },
    #[error("simplicial identity violated: {0}")]
    Simplicial(String),
    #[error("invalid cdga: {0}")]
    Cdga(String),
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A filtered computation did not stabilize within the allowed bound.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

//! Error type shared by all modules.

use crate::calculus::Circle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex counts must be positive, got ({0}, {1}, {2})")]
    InvalidSpec(u32, u32, u32),

    #[error("label {value} out of range 1..={limit}")]
    LabelOutOfRange { value: u32, limit: u32 },

    #[error("label family {from:?}->{to:?} has length {got}, expected {expected}")]
    LengthMismatch {
        from: Circle,
        to: Circle,
        expected: usize,
        got: usize,
    },

    #[error("source and target circle of a label family must differ")]
    SameCircle,

    #[error("label family for {from:?}->{to:?} is {problem}")]
    BadFamily {
        from: Circle,
        to: Circle,
        problem: &'static str,
    },

    #[error("y-families must target the same circle, got {0:?} and {1:?}")]
    TargetMismatch(Circle, Circle),

    #[error("{0}")]
    InputRange(String),

    #[error("malformed stripe drawing: {0}")]
    MalformedStripe(String),
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::InputRange(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

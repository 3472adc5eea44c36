use thiserror::Error;

use crate::partition::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partitions {left:?} and {right:?} have different weights")]
    WeightMismatch {
        left: Box<Partition>,
        right: Box<Partition>,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {0:?} does not have distinct parts")]
    RepeatedParts(Box<Partition>),

    #[error("invalid block: {0}")]
    InvalidBlock(String),

    #[error("blocks are not comparable: {0}")]
    BlockMismatch(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("family tuple has no type")]
    UndefinedType,

    #[error("family tuple does not fit the character: {0}")]
    ShapeMismatch(String),

    #[error("family tuple is not closed")]
    NotClosed,

    #[error("degree {degree} exceeds the guard {guard}")]
    DegreeGuard { degree: u32, guard: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

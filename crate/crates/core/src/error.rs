use thiserror::Error;

use crate::shape::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("shape {inner} is not contained in {outer}")]
    NotNested { inner: String, outer: String },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("{0} already occurs in the tableau")]
    DuplicateEntry(u32),
    #[error("entry {entry} lies outside [1, {max}]")]
    EntryOutOfRange { entry: u32, max: u32 },
    #[error("{0} is not an outer corner")]
    NotCorner(Cell),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    /// A signed 64-bit accumulator would overflow. Reduce `n`.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

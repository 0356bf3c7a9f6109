use thiserror::Error;

use crate::shapes::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("cell coordinates are 1-based, got ({row}, {col})")]
    BadCell { row: usize, col: usize },

    #[error("inner partition {inner:?} is not contained in outer partition {outer:?}")]
    NotNested { outer: Vec<usize>, inner: Vec<usize> },

    #[error("tableau rows do not match shape: {0}")]
    ShapeMismatch(String),

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("cell {0} is not in the shape")]
    CellOutsideShape(Cell),

    #[error("cell {0} is not a removable corner")]
    NotACorner(Cell),

    #[error("letter {letter} exceeds rank bound {max}")]
    LetterOutOfRange { letter: usize, max: usize },

    #[error("crystal index {k} out of range 1..={rank}")]
    IndexOutOfRange { k: usize, rank: usize },

    #[error("window at position {pos} does not fit in a word of length {len}")]
    WindowOutOfRange { pos: usize, len: usize },

    #[error("two-rowed array rows differ in length ({top} vs {bottom})")]
    RaggedArray { top: usize, bottom: usize },

    #[error("two-rowed array is not in lexicographic order of column type")]
    NotLexicographic,

    #[error("enumeration bound exceeded: {size} > {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("not a picture: {0}")]
    InvalidPicture(String),

    #[error("membership check failed: {0}")]
    Membership(String),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    /// A stage produced output outside its proven target set.
    #[error("internal error: {0}")]
    Internal(String),
}

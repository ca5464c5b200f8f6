//! Crate-wide error type.

use thiserror::Error;

use crate::partition::Cell;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("row {row} is not addable")]
    NotAddable { row: usize },

    #[error("row {row} is not removable")]
    NotRemovable { row: usize },

    #[error("shape has a slidable hole at {cell}")]
    HasSlidableHole { cell: Cell },

    #[error("shape has a reversely slidable hole at {cell}")]
    HasReverselySlidableHole { cell: Cell },

    #[error("{cell} is not a hole")]
    NotAHole { cell: Cell },

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("tableau is not symplectic")]
    NotSymplectic,

    #[error("letter {letter} is outside [1, {bound}]")]
    LetterOutOfRange { letter: usize, bound: usize },

    #[error("word is not strictly increasing")]
    NotStrictlyIncreasing,

    #[error("word is not weakly increasing")]
    NotWeaklyIncreasing,

    #[error("word is not strictly decreasing")]
    NotStrictlyDecreasing,

    #[error("no preimage exists for the given data")]
    NoPreimage,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}

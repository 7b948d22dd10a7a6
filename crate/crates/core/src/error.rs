use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A malformed line in a code or cover file. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MixedLength { expected: usize, found: usize },
    BadCharacter { column: usize, found: char },
    EmptyCode,
    BadHeader(String),
    BadPoint(String),
    PointOutOfRange { point: usize, ground_size: usize },
    MissingSets { expected: usize, found: usize },
    TrailingData,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::MixedLength { expected, found } => write!(
                f,
                "word has length {found}, but earlier words have length {expected}"
            ),
            ParseErrorKind::BadCharacter { column, found } => {
                write!(
                    f,
                    "column {column}: unexpected character {found:?} (expected '0' or '1')"
                )
            }
            ParseErrorKind::EmptyCode => write!(f, "no codewords found"),
            ParseErrorKind::BadHeader(got) => {
                write!(f, "expected header \"points M sets N\", found {got:?}")
            }
            ParseErrorKind::BadPoint(tok) => write!(f, "invalid point index {tok:?}"),
            ParseErrorKind::PointOutOfRange { point, ground_size } => {
                write!(f, "point {point} outside 1..={ground_size}")
            }
            ParseErrorKind::MissingSets { expected, found } => {
                write!(f, "expected {expected} set lines, found {found}")
            }
            ParseErrorKind::TrailingData => write!(f, "unexpected data after the last set line"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{what} is {value}, above the supported limit of {limit}")]
    CapacityExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("word length must be positive")]
    ZeroLength,

    #[error("the code is empty")]
    EmptyCode,

    #[error("a cover needs at least one set")]
    ZeroSets,

    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("point {point} outside 1..={ground_size}")]
    PointOutOfRange { point: usize, ground_size: usize },

    #[error("ground set must contain at least one point")]
    EmptyGround,

    #[error("plain and complemented factors share index {index}")]
    OverlappingFactors { index: usize },

    #[error("grid dimension must be 1, 2 or 3 (got {dim})")]
    BadDimension { dim: usize },

    #[error("grid extent is empty")]
    EmptyExtent,

    #[error("box {index} does not fit inside the grid extent")]
    BoxOutOfExtent { index: usize },

    #[error("circle grid must have at least 3 points (got {grid})")]
    BadGrid { grid: usize },

    #[error("arc {index} has length {length}; lengths must lie strictly between 0 and {grid}")]
    BadArc {
        index: usize,
        length: usize,
        grid: usize,
    },

    #[error("vertex {vertex} is not a vertex of the complex")]
    NotAVertex { vertex: usize },

    #[error("basepoint {vertex} is not a vertex of the complex")]
    MissingBasepoint { vertex: usize },

    #[error("the complex is not connected")]
    Disconnected,

    #[error("no edge path from {from} to {to}")]
    NoPath { from: usize, to: usize },
}

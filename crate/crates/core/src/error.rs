use thiserror::Error;

use crate::axioms::AxiomReport;
use crate::elemset::Elem;

/// Shape problems in a candidate table, reported before any axiom is evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("order {0} is below the minimum of 2")]
    TooSmall(usize),
    #[error("expected {expected} names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("invalid element name {0:?}")]
    BadName(String),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("{table} table has {found} rows, expected {expected}")]
    RowCount {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{table} table row {row} has {found} entries, expected {expected}")]
    RowLength {
        table: &'static str,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("{table}[{row}][{col}] = {value} is out of range for order {order}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("axioms violated: {}", .0.summary())]
    Axioms(AxiomReport),
}

/// Failure of an element-level operation whose precondition is not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("element {0} is out of range")]
    OutOfRange(Elem),
    #[error("nilpotency index is undefined for the zero element")]
    ZeroNilpotency,
    #[error("element {0} is not a nonzero idempotent")]
    NotNonzeroIdempotent(Elem),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

/// Text-format parse failure; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

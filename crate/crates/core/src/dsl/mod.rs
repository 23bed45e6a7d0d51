//! Text syntax for knot expressions and batch documents.

mod document;
mod parser;
mod printer;

use thiserror::Error;

use crate::knot::KnotError;
use crate::slope::SlopeError;

pub use document::{
    parse, parse_int_set, DslDocument, IntSet, QueryLine, SlopeSpec, CONJECTURE_FLAG,
};
pub use parser::parse_expr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{line}:{col}: syntax error: expected {expected}, found {found}")]
    Syntax {
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },
    #[error("{line}:{col}: unknown attribute `{key}` for {constructor}")]
    UnknownAttribute {
        line: usize,
        col: usize,
        key: String,
        constructor: String,
    },
    #[error("{line}:{col}: {source}")]
    Validation {
        line: usize,
        col: usize,
        source: KnotError,
    },
    #[error("{line}:{col}: {source}")]
    Slope {
        line: usize,
        col: usize,
        source: SlopeError,
    },
    #[error("{line}: {message}")]
    Document { line: usize, message: String },
}

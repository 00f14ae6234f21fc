use thiserror::Error;

use crate::identity::ViolationReport;
use crate::linalg::Vector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("{message} at path {path}")]
    Document { path: String, message: String },

    #[error("unknown catalog `{0}`")]
    UnknownCatalog(String),

    #[error("missing operation `{0}`")]
    MissingOperation(String),

    #[error("sort mismatch: {0}")]
    SortMismatch(String),

    #[error("invalid identity `{id}`: {message}")]
    Schema { id: String, message: String },

    #[error("unknown operation `{op}` in pairing")]
    UnknownPairing { op: String },

    /// A construction or theorem was applied to input that fails its
    /// hypothesis; the report holds the failing equations.
    #[error("{what}: {} violation(s)", report.violation_count())]
    Precondition {
        what: String,
        report: ViolationReport,
    },

    #[error("not an ideal: {op}({left}, {right}) leaves the subspace")]
    NotAnIdeal {
        op: String,
        left: Vector,
        right: Vector,
    },

    #[error("ill-defined collapse: `{first}` and `{second}` disagree modulo the ideal at basis pair ({i}, {j})")]
    IllDefinedCollapse {
        first: String,
        second: String,
        i: usize,
        j: usize,
    },

    #[error("ill-defined action `{op}`: ideal element {element} acts non-trivially on basis vector {basis}")]
    IllDefinedAction {
        op: String,
        element: Vector,
        basis: usize,
    },

    #[error("search space of {candidates} candidates exceeds the cap of {cap}; shrink the grid or the dimensions")]
    CapExceeded { candidates: String, cap: u64 },

    #[error("{0}")]
    Invalid(String),
}

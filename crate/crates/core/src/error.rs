use thiserror::Error;

/// Errors raised by constructions and enumerations.
///
/// Law violations found by the validators are not errors; they are returned
/// as [`crate::report::ValidationReport`] content.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("enumeration budget exceeded in {what}: more than {limit} candidates")]
    Budget { what: String, limit: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("shape is not locally discrete: 2-cell {0} is not an identity")]
    NotLocallyDiscrete(usize),

    #[error("localization undecided within budget: {0}")]
    Undecided(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A semantic error located at the start of the offending block.
    #[error("line {line}, column {column}: {inner}")]
    At {
        line: usize,
        column: usize,
        inner: Box<Error>,
    },

    #[error("unresolved name `{name}` in {context}")]
    Unresolved { name: String, context: String },

    #[error("block `{block}` failed validation: {details}")]
    Invalid { block: String, details: String },

    /// An internal consistency check failed. Signals a bug or invalid input
    /// that slipped past validation.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// The error with any position annotation stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { inner, .. } => inner.root(),
            e => e,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self.root(), Error::Budget { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Crate-wide error type.
///
/// User-facing errors (bad input, non-admissible columns given on the command
/// line) are distinguished from internal ones: an internal error means a
/// theorem-backed postcondition failed, which falsifies the implementation,
/// not the input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid letter code {code} for rank {rank}")]
    InvalidLetter { code: i8, rank: u8 },

    #[error("invalid column: {0}")]
    InvalidColumn(String),

    #[error("column {column} is not admissible: no free complement letter below {letter} (pair #{index})")]
    NotAdmissible {
        column: String,
        letter: u8,
        index: usize,
    },

    #[error("not a symplectic tableau: {0}")]
    NotSymplectic(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Inexact division always signals a bug in operator application,
    /// never a user error.
    #[error("inexact division: ({num}) / ({den})")]
    InexactDivision { num: String, den: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that can only arise from a bug in this crate.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InexactDivision { .. } | Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

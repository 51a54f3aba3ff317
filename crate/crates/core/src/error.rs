use thiserror::Error;

use crate::surface::Surface;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor classes live on different surfaces ({0} vs {1})")]
    SurfaceMismatch(Surface, Surface),

    #[error("class {0} is not integral")]
    NonIntegral(String),

    #[error("rank must be positive, got {0}")]
    Rank(i128),

    #[error("c2 = c1^2/2 - ch2 = {0} is not an integer")]
    Integrality(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("scan exceeded safety cap of {cap} while {context}")]
    ScanLimit { cap: i128, context: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Errors that come from malformed input rather than unmet hypotheses.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Integrality(_)
                | Error::Rank(_)
                | Error::NonIntegral(_)
                | Error::SurfaceMismatch(..)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

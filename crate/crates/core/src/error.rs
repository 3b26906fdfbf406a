use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Geometry that fails structural checks (open loops, self-intersections, ...).
    #[error("invalid geometry: {0}")]
    Validation(String),
    /// Operation not available for the given input kind.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    /// Parameter outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),
    /// Hypothesis of an inequality or construction is not met.
    #[error("precondition of {inequality} violated: {detail}")]
    Precondition { inequality: String, detail: String },
    /// Malformed input document.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn pre(inequality: &str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            inequality: inequality.to_string(),
            detail: detail.into(),
        }
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A family parameter is outside its admissible range.
    #[error("invalid parameters for {family}: {constraint}")]
    ParameterRange {
        family: String,
        constraint: &'static str,
    },

    #[error("cannot parse family spec {input:?}: {reason}")]
    FamilySyntax { input: String, reason: String },

    /// Two objects that must share a basis (or a diagram) do not.
    #[error("structural mismatch: {0}")]
    Structural(String),

    /// The mark relation has no unique primitive positive solution.
    #[error("degenerate mark relation: {0}")]
    Degenerate(String),

    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    /// Malformed document text; the message carries the location.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

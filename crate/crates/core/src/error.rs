use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coordinate systems differ")]
    CoordsMismatch,
    #[error("invalid coordinate system: {0}")]
    InvalidCoords(String),
    #[error("variable index {index} out of range for {dim} coordinates")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },
    #[error("grade mismatch: {0}")]
    Grade(String),
    #[error("not the standard volume form")]
    NotVolumeForm,
    #[error("form is not closed")]
    NotClosed,
    #[error("field is not divergence-free")]
    NonzeroDivergence,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

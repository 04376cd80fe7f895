use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: dimension mismatch between {left:?} and {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    #[error("invalid shape {shape:?} for data of length {len}")]
    InvalidShape { shape: Vec<usize>, len: usize },

    #[error("sequence of {len} rows is shorter than window {window}; pad before encoding")]
    SequenceTooShort { len: usize, window: usize },

    #[error("max-pool over zero rows")]
    EmptyPool,

    #[error("dropout rate {0} outside [0, 1)")]
    DropoutRate(f64),

    #[error("zero-norm vector in {0}")]
    DegenerateVector(&'static str),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parameter '{0}' not found")]
    UnknownParameter(String),

    #[error("duplicate parameter '{0}'")]
    DuplicateParameter(String),

    #[error("no gradients recorded; run backward before stepping the optimizer")]
    MissingGradients,

    #[error("index {index} out of range for catalog of {len} entries")]
    CatalogIndex { index: usize, len: usize },

    #[error("unknown attribute '{name}'; nearest known attributes: {suggestions}")]
    UnknownAttribute { name: String, suggestions: String },

    #[error("catalog has fewer than two distinct values")]
    DegenerateCatalog,

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("configuration: {0}")]
    Config(String),

    #[error("{path}:{line}: {message}")]
    Format {
        path: String,
        line: usize,
        message: String,
    },

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error("training diverged: non-finite loss at epoch {epoch}, batch {batch}")]
    Diverged { epoch: usize, batch: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

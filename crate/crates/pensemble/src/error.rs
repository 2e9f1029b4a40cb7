//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the engine.
#[derive(Debug)]
pub enum Error {
    /// An input vector had the wrong dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// A value fell outside its documented range.
    OutOfRange { what: &'static str, value: f64 },
    /// An operation needs more observations than are available.
    InsufficientData(&'static str),
    /// Prediction was requested from an expert or ensemble with no rules.
    Untrained,
    /// A rule's covariance is degenerate (non-positive determinant).
    DegenerateRule,
    /// Invalid configuration (bad parameter, unknown key, unknown stream).
    Config(String),
    /// Malformed input data; `row` is 1-based and counts the header.
    Parse { row: usize, message: String },
    /// The stream ran out before the requested stamp completed.
    StreamExhausted { stamp: usize },
    /// A persisted model could not be read back.
    Model(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::OutOfRange { what, value } => {
                write!(f, "{what} out of range: {value}")
            }
            Error::InsufficientData(what) => write!(f, "insufficient data for {what}"),
            Error::Untrained => write!(f, "untrained: no rules to infer from"),
            Error::DegenerateRule => write!(f, "degenerate rule covariance"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
            Error::Parse { row, message } => write!(f, "parse error at row {row}: {message}"),
            Error::StreamExhausted { stamp } => {
                write!(f, "stream exhausted during stamp {stamp}")
            }
            Error::Model(msg) => write!(f, "model error: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl Error {
    /// Process exit code for the CLI: 1 for configuration problems, 2 for
    /// data/model problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 1,
            _ => 2,
        }
    }
}

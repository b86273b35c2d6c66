//! Error type shared across the toolkit.

use std::io;

/// Errors produced by collectors, the joiner, model training, and the
/// workload generators.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration or hyperparameters.
    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed input file; carries the location of the offending line.
    #[error("parse error in {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// Input data violates a schema contract (header, feature ordering).
    #[error("schema error: {0}")]
    Schema(String),

    /// Input data violates a value contract (range, finiteness, ordering).
    #[error("data error: {0}")]
    Data(String),

    /// Timestamp join produced no usable rows.
    #[error("join error: {0}")]
    Join(String),

    /// Feature vector of the wrong length.
    #[error("shape error: {0}")]
    Shape(String),

    /// A metric is undefined on the given input (e.g. zero-variance R²).
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    /// Model file written by an incompatible version of the toolkit.
    #[error("unsupported model version {found} (this build reads version {supported})")]
    UnsupportedVersion { found: u64, supported: u64 },

    /// Non-positive or backwards time delta.
    #[error("timing error: {0}")]
    Timing(String),

    /// A live counter or telemetry source could not be read.
    #[error("collection error: {0}")]
    Collection(String),

    /// The thinning bound λ(t) ≤ λ_max was violated at a candidate point.
    #[error("rate bound violation: {0}")]
    BoundViolation(String),

    /// An input file could not be opened or read.
    #[error("cannot read {path}: {source}")]
    ReadInput {
        path: String,
        #[source]
        source: io::Error,
    },

    /// An output sink could not be written.
    #[error("cannot write {path}: {source}")]
    WriteOutput {
        path: String,
        #[source]
        source: io::Error,
    },

    /// HTTP replay failure outside per-request error accounting.
    #[error("http error: {0}")]
    Http(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn read(path: impl Into<String>, source: io::Error) -> Self {
        Error::ReadInput {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn write(path: impl Into<String>, source: io::Error) -> Self {
        Error::WriteOutput {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}

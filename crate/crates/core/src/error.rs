use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("power-product base must be strictly positive, got {0}")]
    NonPositiveBase(String),

    #[error("logarithm argument must be strictly positive, got {0}")]
    NonPositiveLogArgument(String),

    #[error("term a_{index} of `{sequence}` is not positive")]
    NonPositiveTerm { sequence: String, index: u64 },

    #[error("recurrence `{sequence}` produced a non-integral term a_{index}")]
    NonIntegralTerm { sequence: String, index: u64 },

    #[error("index {index} invalid for `{sequence}`: {reason}")]
    InvalidIndex {
        sequence: String,
        index: u64,
        reason: String,
    },

    #[error("ratio at index {index} of `{sequence}` has a zero denominator")]
    ZeroDenominator { sequence: String, index: u64 },

    #[error("invalid range [{lo}, {hi}]: {reason}")]
    InvalidRange { lo: u64, hi: u64, reason: String },

    #[error("invalid precision ladder: {0}")]
    InvalidLadder(String),

    #[error("invalid bound specification: {0}")]
    SpecInvalid(String),

    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),

    #[error("store for `{store}` cannot serve recurrence `{recurrence}`")]
    StoreMismatch { store: String, recurrence: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {message}")]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}:{line}: checksum mismatch")]
    ChecksumMismatch { path: PathBuf, line: usize },

    #[error("internal cross-check failed: {0}")]
    CrossCheckFailed(String),

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),

    #[error("certificate contradicted by pointwise check: {0}")]
    SoundnessViolation(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

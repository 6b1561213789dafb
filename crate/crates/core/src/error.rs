//! Error types for the engine and the storage layer.

use thiserror::Error;

/// Errors raised by the storage layer.
#[derive(Debug, Error)]
pub enum StoreError {
    /// The store could not be reached or a file operation failed.
    #[error("store unavailable: {0}")]
    Unavailable(String),
    /// A non-trailing journal entry failed integrity checks.
    #[error("corrupt journal: {0}")]
    CorruptJournal(String),
    /// The on-disk format version is not supported by this build.
    #[error("unsupported store format version {found} (expected {expected})")]
    UnsupportedFormat { found: u32, expected: u32 },
    /// A record could not be encoded or decoded.
    #[error("serialization failure: {0}")]
    Codec(String),
}

impl From<std::io::Error> for StoreError {
    fn from(err: std::io::Error) -> Self {
        StoreError::Unavailable(err.to_string())
    }
}

/// Errors surfaced by engine operations.
///
/// Each variant maps one-to-one onto a wire error code (see `protocol`),
/// so service clients observe the same failure taxonomy as library callers.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("authentication failed")]
    AuthFailed,
    #[error("invalid user identifier")]
    InvalidUser,
    #[error("token expired")]
    TokenExpired,
    #[error("token invalid")]
    TokenInvalid,
    #[error("unknown session {0}")]
    UnknownSession(String),
    #[error("session {0} already closed")]
    AlreadyClosed(String),
    #[error("session {0} is closed")]
    SessionClosed(String),
    #[error("turn text must be nonempty")]
    EmptyText,
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("unknown record {0}")]
    UnknownRecord(u64),
    #[error("per-user record quota of {cap} exceeded")]
    QuotaExceeded { cap: usize },
    #[error("no answer available")]
    NoAnswer,
    #[error("bad fact file at line {line}: {reason}")]
    BadFactFile { line: usize, reason: String },
    #[error("bad lexicon file at line {line}: {reason}")]
    BadLexiconFile { line: usize, reason: String },
    #[error("bad transcript at line {line}: {reason}")]
    BadTranscript { line: usize, reason: String },
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error("failed to bind service address: {0}")]
    BindFailed(String),
    #[error(transparent)]
    Store(#[from] StoreError),
}

impl EngineError {
    /// Stable error code used on the wire and in reports.
    pub fn code(&self) -> &'static str {
        match self {
            EngineError::AuthFailed => "AuthFailed",
            EngineError::InvalidUser => "InvalidUser",
            EngineError::TokenExpired => "TokenExpired",
            EngineError::TokenInvalid => "TokenInvalid",
            EngineError::UnknownSession(_) => "UnknownSession",
            EngineError::AlreadyClosed(_) => "AlreadyClosed",
            EngineError::SessionClosed(_) => "SessionClosed",
            EngineError::EmptyText => "EmptyText",
            EngineError::InvalidWeights(_) => "InvalidWeights",
            EngineError::UnknownRecord(_) => "UnknownRecord",
            EngineError::QuotaExceeded { .. } => "QuotaExceeded",
            EngineError::NoAnswer => "NoAnswer",
            EngineError::BadFactFile { .. } => "BadFactFile",
            EngineError::BadLexiconFile { .. } => "BadLexiconFile",
            EngineError::BadTranscript { .. } => "BadTranscript",
            EngineError::BadConfig(_) => "BadConfig",
            EngineError::BindFailed(_) => "BindFailed",
            EngineError::Store(StoreError::CorruptJournal(_)) => "CorruptJournal",
            EngineError::Store(StoreError::UnsupportedFormat { .. }) => "UnsupportedFormat",
            EngineError::Store(_) => "StoreUnavailable",
        }
    }
}

pub type EngineResult<T> = Result<T, EngineError>;
pub type StoreResult<T> = Result<T, StoreError>;

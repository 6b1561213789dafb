//! Identifier newtypes shared across the engine.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{EngineError, EngineResult};

pub const MAX_USER_ID_LEN: usize = 128;

/// Opaque external user identifier. Nonempty, at most 128 characters, and
/// never written raw into durable storage — see [`PseudonymKey`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UserId(String);

impl UserId {
    pub fn new(raw: impl Into<String>) -> EngineResult<Self> {
        let raw = raw.into();
        if raw.is_empty() || raw.chars().count() > MAX_USER_ID_LEN {
            return Err(EngineError::InvalidUser);
        }
        Ok(Self(raw))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for UserId {
    fmt_forward!();
}

/// Session identifier, unique for the lifetime of the store.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SessionId(String);

impl SessionId {
    pub(crate) fn from_seq(seq: u64) -> Self {
        Self(format!("s{seq}"))
    }

    pub fn new(raw: impl Into<String>) -> Self {
        Self(raw.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for SessionId {
    fmt_forward!();
}

/// Durable record identifier, allocated from the store's sequence counter.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct RecordId(pub u64);

impl std::fmt::Display for RecordId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "r{}", self.0)
    }
}

/// Candidate identifier, unique within a session.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CandidateId(String);

impl CandidateId {
    pub(crate) fn new(session: &SessionId, ordinal: u64) -> Self {
        Self(format!("{}-c{}", session.as_str(), ordinal))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CandidateId {
    fmt_forward!();
}

/// Salted digest standing in for the user identity everywhere data touches
/// disk. Deterministic for a given (user, salt) pair, so records written in
/// one process remain addressable in the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PseudonymKey(String);

impl PseudonymKey {
    pub fn derive(user: &UserId, salt: &[u8]) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(salt);
        hasher.update([0u8]);
        hasher.update(user.as_str().as_bytes());
        let digest = hasher.finalize();
        let mut hex = String::with_capacity(64);
        for byte in digest {
            hex.push_str(&format!("{byte:02x}"));
        }
        Self(hex)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for PseudonymKey {
    fmt_forward!();
}

macro_rules! fmt_forward {
    () => {
        fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            f.write_str(&self.0)
        }
    };
}
use fmt_forward;

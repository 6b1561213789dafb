//! Engine configuration.
//!
//! Loaded from a TOML file; every key has a default so an empty file (or no
//! file at all) yields a working engine. Paths are resolved relative to the
//! process working directory.

use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

use crate::error::{EngineError, EngineResult};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EngineConfig {
    pub auth: AuthConfig,
    pub session: SessionConfig,
    pub stm: StmConfig,
    pub relevance: RelevanceConfig,
    pub ltm: LtmConfig,
    pub store: StoreConfig,
    pub knowledge: KnowledgeConfig,
    pub router: RouterConfig,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            auth: AuthConfig::default(),
            session: SessionConfig::default(),
            stm: StmConfig::default(),
            relevance: RelevanceConfig::default(),
            ltm: LtmConfig::default(),
            store: StoreConfig::default(),
            knowledge: KnowledgeConfig::default(),
            router: RouterConfig::default(),
        }
    }
}

impl EngineConfig {
    pub fn load(path: &Path) -> EngineResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| EngineError::BadConfig(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| EngineError::BadConfig(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    /// Salt location: configured path, or a sibling of the data directory so
    /// the salt never lives among the store files it protects.
    pub fn salt_path(&self) -> PathBuf {
        self.ltm.salt_file.clone().unwrap_or_else(|| {
            let mut name = self
                .store
                .data_dir
                .file_name()
                .map(|n| n.to_os_string())
                .unwrap_or_else(|| "cogmem".into());
            name.push(".salt");
            self.store.data_dir.with_file_name(name)
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AuthConfig {
    /// File of `user<TAB>credential` lines. No file means no user can
    /// authenticate.
    pub credentials_file: Option<PathBuf>,
    /// Token time-to-live in seconds.
    pub token_ttl_secs: u64,
}

impl Default for AuthConfig {
    fn default() -> Self {
        Self {
            credentials_file: None,
            token_ttl_secs: 86_400,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SessionConfig {
    /// Sessions idle longer than this are auto-closed through the normal
    /// end-of-session sweep.
    pub idle_timeout_secs: u64,
}

impl Default for SessionConfig {
    fn default() -> Self {
        Self {
            idle_timeout_secs: 3_600,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StmConfig {
    /// Attention window capacity in turns.
    pub window_capacity: usize,
}

impl Default for StmConfig {
    fn default() -> Self {
        Self { window_capacity: 7 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RelevanceConfig {
    pub weights: RawWeights,
    /// Promotion threshold; a score must strictly exceed it.
    pub threshold: f64,
    /// Similarity at or above which a candidate adding nothing new is
    /// redundant.
    pub dup_threshold: f64,
    /// Similarity at or above which a candidate updates an existing record.
    pub update_threshold: f64,
    pub lexicons_file: Option<PathBuf>,
}

impl Default for RelevanceConfig {
    fn default() -> Self {
        Self {
            weights: RawWeights::default(),
            threshold: 0.5,
            dup_threshold: 0.9,
            update_threshold: 0.6,
            lexicons_file: None,
        }
    }
}

/// Raw (pre-normalization) feature weights. Normalized to sum 1 at load.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RawWeights {
    pub recency: f64,
    pub repetition: f64,
    pub preference: f64,
    pub recurrence: f64,
    pub confirmation: f64,
    pub specificity: f64,
}

impl Default for RawWeights {
    fn default() -> Self {
        Self {
            recency: 1.0,
            repetition: 1.0,
            preference: 1.0,
            recurrence: 1.0,
            confirmation: 1.0,
            specificity: 1.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LtmConfig {
    pub max_records_per_user: usize,
    pub salt_file: Option<PathBuf>,
}

impl Default for LtmConfig {
    fn default() -> Self {
        Self {
            max_records_per_user: 10_000,
            salt_file: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StoreConfig {
    pub data_dir: PathBuf,
    /// Write a snapshot after this many journal entries.
    pub snapshot_every_n_entries: u64,
    /// Sync journal writes to disk on every commit. Disable only for test
    /// workloads where durability is not the property under test.
    pub fsync: bool,
}

impl Default for StoreConfig {
    fn default() -> Self {
        Self {
            data_dir: PathBuf::from("./cogmem-data"),
            snapshot_every_n_entries: 1_000,
            fsync: true,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct KnowledgeConfig {
    /// Static fact file: `key<TAB>answer` lines.
    pub facts_file: Option<PathBuf>,
    /// Minimum Jaccard overlap for a long-term record to answer a query.
    pub dynamic_floor: f64,
}

impl Default for KnowledgeConfig {
    fn default() -> Self {
        Self {
            facts_file: None,
            dynamic_floor: 0.3,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RouterConfig {
    /// Extra routing rules: `logical<TAB>phrase` lines. Matched phrases
    /// force analytical routing ahead of the built-in rules' default.
    pub rules_file: Option<PathBuf>,
}

impl Default for RouterConfig {
    fn default() -> Self {
        Self { rules_file: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_documented_values() {
        let cfg = EngineConfig::default();
        assert_eq!(cfg.auth.token_ttl_secs, 86_400);
        assert_eq!(cfg.session.idle_timeout_secs, 3_600);
        assert_eq!(cfg.stm.window_capacity, 7);
        assert_eq!(cfg.relevance.threshold, 0.5);
        assert_eq!(cfg.relevance.dup_threshold, 0.9);
        assert_eq!(cfg.relevance.update_threshold, 0.6);
        assert_eq!(cfg.ltm.max_records_per_user, 10_000);
        assert_eq!(cfg.store.snapshot_every_n_entries, 1_000);
        assert_eq!(cfg.knowledge.dynamic_floor, 0.3);
    }

    #[test]
    fn round_trips_through_toml() {
        let cfg = EngineConfig::default();
        let text = cfg.to_toml();
        let back: EngineConfig = toml::from_str(&text).unwrap();
        assert_eq!(back.stm.window_capacity, cfg.stm.window_capacity);
    }

    #[test]
    fn partial_file_keeps_other_defaults() {
        let parsed: EngineConfig = toml::from_str("[stm]\nwindow_capacity = 3\n").unwrap();
        assert_eq!(parsed.stm.window_capacity, 3);
        assert_eq!(parsed.relevance.threshold, 0.5);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = toml::from_str::<EngineConfig>("[stm]\nwindowcapacity = 3\n");
        assert!(err.is_err());
    }

    #[test]
    fn default_salt_path_sits_beside_data_dir() {
        let mut cfg = EngineConfig::default();
        cfg.store.data_dir = PathBuf::from("/var/lib/cogmem/data");
        assert_eq!(cfg.salt_path(), PathBuf::from("/var/lib/cogmem/data.salt"));
        cfg.ltm.salt_file = Some(PathBuf::from("/etc/cogmem/salt"));
        assert_eq!(cfg.salt_path(), PathBuf::from("/etc/cogmem/salt"));
    }
}

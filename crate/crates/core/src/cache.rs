//! Checksummed JSON disk caches.
//!
//! Cache files carry a format version and a SHA-256 checksum of their body;
//! anything that fails to parse or verify is treated as absent and silently
//! rebuilt, so corruption costs time, never correctness.

use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::{Error, Result};

pub const CACHE_DIR_ENV: &str = "EVSYM_CACHE_DIR";
pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Where (and whether) to persist expensive build products.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CacheConfig {
    dir: Option<PathBuf>,
}

impl CacheConfig {
    /// No persistence; everything is rebuilt in memory.
    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: Some(dir.into()),
        }
    }

    /// Reads the cache directory from `EVSYM_CACHE_DIR`, if set and nonempty.
    pub fn from_env() -> Self {
        match std::env::var(CACHE_DIR_ENV) {
            Ok(dir) if !dir.trim().is_empty() => Self::with_dir(dir),
            _ => Self::disabled(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    format_version: u32,
    checksum: String,
    body: serde_json::Value,
}

fn checksum_of(body: &serde_json::Value) -> Result<String> {
    let bytes = serde_json::to_vec(body).map_err(|e| Error::Cache(e.to_string()))?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("{:x}", hasher.finalize()))
}

/// Writes `body` wrapped in a versioned, checksummed envelope.
pub(crate) fn save_checksummed<T: Serialize>(path: &Path, body: &T) -> Result<()> {
    let body = serde_json::to_value(body).map_err(|e| Error::Cache(e.to_string()))?;
    let envelope = Envelope {
        format_version: CACHE_FORMAT_VERSION,
        checksum: checksum_of(&body)?,
        body,
    };
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(|e| Error::Cache(e.to_string()))?;
    }
    let text = serde_json::to_string(&envelope).map_err(|e| Error::Cache(e.to_string()))?;
    std::fs::write(path, text).map_err(|e| Error::Cache(e.to_string()))
}

/// Loads and verifies an envelope; any version, checksum, parse, or I/O
/// problem comes back as an error for the caller to treat as a cache miss.
pub(crate) fn load_checksummed<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Cache(e.to_string()))?;
    let envelope: Envelope =
        serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
    if envelope.format_version != CACHE_FORMAT_VERSION {
        return Err(Error::Cache(format!(
            "format version {} (expected {})",
            envelope.format_version, CACHE_FORMAT_VERSION
        )));
    }
    let expected = checksum_of(&envelope.body)?;
    if envelope.checksum != expected {
        return Err(Error::Cache("checksum mismatch".to_string()));
    }
    serde_json::from_value(envelope.body).map_err(|e| Error::Cache(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Sample {
        degree: u32,
        values: Vec<String>,
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sample.json");
        let sample = Sample {
            degree: 7,
            values: vec!["12".into(), "-3".into()],
        };
        save_checksummed(&path, &sample).unwrap();
        let back: Sample = load_checksummed(&path).unwrap();
        assert_eq!(back, sample);
    }

    #[test]
    fn corruption_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sample.json");
        let sample = Sample {
            degree: 7,
            values: vec!["12".into()],
        };
        save_checksummed(&path, &sample).unwrap();
        let mut text = std::fs::read_to_string(&path).unwrap();
        text = text.replace("\"12\"", "\"13\"");
        std::fs::write(&path, text).unwrap();
        assert!(matches!(
            load_checksummed::<Sample>(&path),
            Err(Error::Cache(_))
        ));
    }

    #[test]
    fn missing_file_is_an_error() {
        assert!(load_checksummed::<Sample>(Path::new("/nonexistent/x.json")).is_err());
    }
}

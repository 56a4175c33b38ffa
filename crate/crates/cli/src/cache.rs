use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use log::{debug, warn};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

/// Bumped whenever a change to the analysis could alter a report.
pub const ALGORITHM_VERSION: &str = "cover-analysis/1";

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    version: String,
    entries: BTreeMap<String, String>,
}

/// Serialized reports keyed by a content hash of the input and every setting
/// that can change the report.
#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    entries: RwLock<BTreeMap<String, String>>,
    dirty: RwLock<bool>,
}

/// `sha256(version, caps, name, format, payload)` in hex.
pub fn cache_key(name: &str, format: &str, payload: &str, coset_cap: usize, group_cap: usize) -> String {
    let mut h = Sha256::new();
    for part in [ALGORITHM_VERSION, &coset_cap.to_string(), &group_cap.to_string(), name, format, payload] {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    hex::encode(h.finalize())
}

impl ResultCache {
    /// Opens the cache at `path`; a missing file is an empty cache and a
    /// file from another algorithm version is discarded.
    pub fn open(path: &Path) -> Result<Self, CliError> {
        let entries = match std::fs::read_to_string(path) {
            Ok(text) => {
                let file: CacheFile = serde_json::from_str(&text)
                    .map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))?;
                if file.version == ALGORITHM_VERSION {
                    file.entries
                } else {
                    warn!("discarding cache {} from version {}", path.display(), file.version);
                    BTreeMap::new()
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(CliError::Cache(format!("{}: {e}", path.display()))),
        };
        debug!("cache {} holds {} entries", path.display(), entries.len());
        Ok(ResultCache { path: path.to_path_buf(), entries: RwLock::new(entries), dirty: RwLock::new(false) })
    }

    pub fn get(&self, key: &str) -> Option<String> {
        self.entries.read().expect("cache lock").get(key).cloned()
    }

    pub fn insert(&self, key: String, value: String) {
        self.entries.write().expect("cache lock").insert(key, value);
        *self.dirty.write().expect("cache lock") = true;
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes the cache through a temporary file and a rename, so readers
    /// never see a partial file.
    pub fn persist(&self) -> Result<(), CliError> {
        if !*self.dirty.read().expect("cache lock") {
            return Ok(());
        }
        let file = CacheFile {
            version: ALGORITHM_VERSION.to_string(),
            entries: self.entries.read().expect("cache lock").clone(),
        };
        let text = serde_json::to_string_pretty(&file).map_err(|e| CliError::Cache(e.to_string()))?;
        let io = |e: std::io::Error| CliError::Cache(format!("{}: {e}", self.path.display()));
        let dir = match self.path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
            _ => PathBuf::from("."),
        };
        std::fs::create_dir_all(&dir).map_err(io)?;
        let tmp = dir.join(format!(
            ".{}.{}.tmp",
            self.path.file_name().and_then(|n| n.to_str()).unwrap_or("cache"),
            std::process::id()
        ));
        let mut f = std::fs::File::create(&tmp).map_err(io)?;
        f.write_all(text.as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        std::fs::rename(&tmp, &self.path).map_err(io)?;
        *self.dirty.write().expect("cache lock") = false;
        Ok(())
    }
}

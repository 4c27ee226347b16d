//! Persistent transliteration cache: one JSON document mapping the hex digest
//! of the input to its entry.
//!
//! Reads are served from memory. Writes take an exclusive lock on a sidecar
//! `.lock` file, merge with whatever is on disk, and replace the file through
//! a temp file + rename so readers never see a partial document.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::validate::validate_translit;
use crate::language::TargetLanguage;

/// Lowercase hex SHA-256 of the raw UTF-8 bytes. No normalisation is applied.
pub fn cache_key(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslitCacheEntry {
    pub key: String,
    pub input: String,
    pub output: String,
    pub provider_id: String,
    pub prompt_version: String,
    pub lang: TargetLanguage,
    pub created_at: DateTime<Utc>,
}

impl TranslitCacheEntry {
    pub fn new(input: &str, output: &str, provider_id: &str, prompt_version: &str, lang: TargetLanguage) -> Self {
        TranslitCacheEntry {
            key: cache_key(input),
            input: input.to_string(),
            output: output.to_string(),
            provider_id: provider_id.to_string(),
            prompt_version: prompt_version.to_string(),
            lang,
            created_at: Utc::now(),
        }
    }

    /// Why this entry cannot be trusted, if it can't.
    pub fn defect(&self) -> Option<String> {
        if self.key != cache_key(&self.input) {
            return Some("key does not match SHA-256 of input".into());
        }
        let v = validate_translit(&self.input, &self.output);
        if !v.is_ok() {
            let reasons: Vec<String> = v.violations.iter().map(ToString::to_string).collect();
            return Some(format!("stored output fails validation: {}", reasons.join("; ")));
        }
        None
    }
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("cache file {path} is not a valid cache document: {message}")]
    Unreadable { path: PathBuf, message: String },
}

type Entries = BTreeMap<String, TranslitCacheEntry>;

#[derive(Debug)]
pub struct TranslitCache {
    path: Option<PathBuf>,
    entries: RwLock<Entries>,
}

impl TranslitCache {
    /// A cache that lives only as long as the value.
    pub fn in_memory() -> Self {
        TranslitCache {
            path: None,
            entries: RwLock::new(Entries::new()),
        }
    }

    /// Open (or lazily create) the cache file at `path`.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self, CacheError> {
        let path = path.into();
        let entries = read_file(&path)?;
        Ok(TranslitCache {
            path: Some(path),
            entries: RwLock::new(entries),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, key: &str) -> Option<TranslitCacheEntry> {
        self.entries.read().expect("cache lock poisoned").get(key).cloned()
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn entries(&self) -> Vec<TranslitCacheEntry> {
        self.entries
            .read()
            .expect("cache lock poisoned")
            .values()
            .cloned()
            .collect()
    }

    pub fn insert(&self, entry: TranslitCacheEntry) -> Result<(), CacheError> {
        let key = entry.key.clone();
        self.write_through(|map| {
            map.insert(key.clone(), entry.clone());
        })
    }

    pub fn evict(&self, key: &str) -> Result<(), CacheError> {
        let key = key.to_string();
        self.write_through(move |map| {
            map.remove(&key);
        })
    }

    fn write_through(&self, change: impl Fn(&mut Entries)) -> Result<(), CacheError> {
        let mut mem = self.entries.write().expect("cache lock poisoned");
        let Some(path) = &self.path else {
            change(&mut mem);
            return Ok(());
        };
        let io_err = |source| CacheError::Io {
            path: path.clone(),
            source,
        };

        let lock = OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(lock_path(path))
            .map_err(io_err)?;
        lock.lock().map_err(io_err)?;

        // Another process may have written since we loaded.
        let mut merged = read_file(path)?;
        for (k, v) in mem.iter() {
            merged.entry(k.clone()).or_insert_with(|| v.clone());
        }
        change(&mut merged);
        change(&mut mem);

        let dir = path
            .parent()
            .filter(|p| !p.as_os_str().is_empty())
            .unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
        let json = serde_json::to_string_pretty(&merged).expect("cache entries serialise");
        tmp.write_all(json.as_bytes()).map_err(io_err)?;
        tmp.write_all(b"\n").map_err(io_err)?;
        tmp.as_file().sync_all().map_err(io_err)?;
        tmp.persist(path).map_err(|e| io_err(e.error))?;

        *mem = merged;
        lock.unlock().map_err(io_err)?;
        Ok(())
    }
}

fn lock_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".lock");
    path.with_file_name(name)
}

fn read_file(path: &Path) -> Result<Entries, CacheError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Entries::new()),
        Err(source) => {
            return Err(CacheError::Io {
                path: path.to_path_buf(),
                source,
            })
        }
    };
    if text.trim().is_empty() {
        return Ok(Entries::new());
    }
    serde_json::from_str(&text).map_err(|e| CacheError::Unreadable {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

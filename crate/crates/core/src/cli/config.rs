//! Optional `key=value` defaults file.
//!
//! ```text
//! # comments start with '#'
//! provider = http
//! endpoint = https://example.invalid/v1/complete
//! model = some-model
//! api_key_env = INDIC_FRONTEND_API_KEY
//! cache_file = translit-cache.json
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use thiserror::Error;

pub const KNOWN_KEYS: &[&str] = &[
    "provider",
    "endpoint",
    "model",
    "api_key_env",
    "wire",
    "dict",
    "cache_file",
    "max_tokens",
    "timeout_secs",
    "max_retries",
];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {message}")]
    Read { path: String, message: String },
    #[error("config line {line}: expected key=value")]
    Syntax { line: usize },
    #[error("config line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FileConfig {
    values: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn parse(source: &str) -> Result<Self, ConfigError> {
        let mut values = BTreeMap::new();
        for (idx, raw) in source.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax { line: idx + 1 })?;
            let key = k.trim().to_ascii_lowercase().replace('-', "_");
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(ConfigError::UnknownKey { line: idx + 1, key });
            }
            values.insert(key, v.trim().to_string());
        }
        Ok(FileConfig { values })
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path).map_err(|e| ConfigError::Read {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs() {
        let c = FileConfig::parse("# x\nmodel = m1\ncache-file=c.json\n\n").unwrap();
        assert_eq!(c.get("model"), Some("m1"));
        assert_eq!(c.get("cache_file"), Some("c.json"));
        assert_eq!(c.get("endpoint"), None);
    }

    #[test]
    fn rejects_junk() {
        assert!(matches!(
            FileConfig::parse("model"),
            Err(ConfigError::Syntax { line: 1 })
        ));
        assert!(matches!(
            FileConfig::parse("colour=red"),
            Err(ConfigError::UnknownKey { .. })
        ));
    }
}

//! Completion providers for the transliteration call.
//!
//! Temperature is pinned to zero on every request; it is not part of any
//! configuration surface.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;
use std::time::Duration;

use log::{debug, warn};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::language::TargetLanguage;
use crate::script::latin_runs;

pub const TEMPERATURE: f32 = 0.0;
pub const DEFAULT_API_KEY_ENV: &str = "INDIC_FRONTEND_API_KEY";
pub const DEFAULT_MAX_TOKENS: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompletionRequest {
    pub model: String,
    pub system: String,
    pub user: String,
    pub temperature: f32,
    pub max_tokens: u32,
    /// Not sent on the wire; lets offline providers pick a dictionary.
    #[serde(skip)]
    pub language: TargetLanguage,
}

#[derive(Debug, Error)]
pub enum ProviderError {
    #[error("provider unreachable after {attempts} attempt(s): {message}")]
    Unreachable { attempts: u32, message: String },
    #[error("provider rejected the request with HTTP {status}: {body}")]
    Rejected { status: u16, body: String },
    #[error("malformed provider response: {0}")]
    MalformedResponse(String),
    #[error("credential environment variable {0} is not set")]
    MissingCredential(String),
    #[error("dictionary {path}: {message}")]
    Dictionary { path: PathBuf, message: String },
}

pub trait CompletionProvider: Send + Sync {
    /// Stable identifier recorded in cache entries.
    fn id(&self) -> String;
    fn complete(&self, request: &CompletionRequest) -> Result<String, ProviderError>;
}

/// Word-for-word replacement from a fixed dictionary. Unknown words are left
/// in Latin script, which validation then reports.
#[derive(Debug, Default)]
pub struct OfflineDictionaryProvider {
    entries: HashMap<(TargetLanguage, String), String>,
    calls: AtomicUsize,
}

impl OfflineDictionaryProvider {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, lang: TargetLanguage, word: &str, native: &str) {
        self.entries.insert((lang, word.to_lowercase()), native.to_string());
    }

    pub fn with(mut self, lang: TargetLanguage, word: &str, native: &str) -> Self {
        self.insert(lang, word, native);
        self
    }

    /// Parse `lang<TAB>word<TAB>native` lines; `#` comments and blank lines are skipped.
    pub fn parse(source: &str) -> Result<Self, String> {
        let mut provider = Self::new();
        for (idx, raw) in source.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
            let [lang, word, native] = cols.as_slice() else {
                return Err(format!("line {}: expected lang<TAB>word<TAB>native", idx + 1));
            };
            let lang: TargetLanguage = lang.parse().map_err(|e| format!("line {}: {e}", idx + 1))?;
            provider.insert(lang, word, native);
        }
        Ok(provider)
    }

    pub fn from_file(path: &Path) -> Result<Self, ProviderError> {
        let source = fs::read_to_string(path).map_err(|e| ProviderError::Dictionary {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        Self::parse(&source).map_err(|message| ProviderError::Dictionary {
            path: path.to_path_buf(),
            message,
        })
    }

    /// The mappings published for the Hindi code-mix example, plus the rest of
    /// that sentence.
    pub fn builtin() -> Self {
        Self::parse(include_str!("../../data/dictionary/builtin.tsv")).expect("embedded dictionary parses")
    }

    /// Number of `complete` calls served so far.
    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::SeqCst)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl CompletionProvider for OfflineDictionaryProvider {
    fn id(&self) -> String {
        "offline-dictionary".into()
    }

    fn complete(&self, request: &CompletionRequest) -> Result<String, ProviderError> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        let text = &request.user;
        let mut out = String::with_capacity(text.len() * 2);
        let mut last = 0;
        for (range, letters) in latin_runs(text) {
            if letters < 2 {
                continue;
            }
            let word = &text[range.clone()];
            if let Some(native) = self.entries.get(&(request.language, word.to_lowercase())) {
                out.push_str(&text[last..range.start]);
                out.push_str(native);
                last = range.end;
            }
        }
        out.push_str(&text[last..]);
        Ok(out)
    }
}

/// Request/response shape for a remote provider.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WireFormat {
    /// `{model, system, user, temperature, max_tokens}` in, `{text}` out.
    #[default]
    Generic,
    /// Anthropic Messages API.
    Anthropic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ProviderKind {
    Remote {
        endpoint: String,
        model: String,
        api_key_env: String,
        #[serde(default)]
        wire: WireFormat,
    },
    OfflineDictionary {
        path: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProviderConfig {
    #[serde(flatten)]
    pub kind: ProviderKind,
    pub timeout_secs: u64,
    pub max_retries: u32,
    pub max_tokens: u32,
}

impl ProviderConfig {
    pub fn offline(path: Option<PathBuf>) -> Self {
        ProviderConfig {
            kind: ProviderKind::OfflineDictionary { path },
            timeout_secs: 30,
            max_retries: 2,
            max_tokens: DEFAULT_MAX_TOKENS,
        }
    }

    pub fn remote(endpoint: impl Into<String>, model: impl Into<String>) -> Self {
        ProviderConfig {
            kind: ProviderKind::Remote {
                endpoint: endpoint.into(),
                model: model.into(),
                api_key_env: DEFAULT_API_KEY_ENV.into(),
                wire: WireFormat::Generic,
            },
            timeout_secs: 30,
            max_retries: 2,
            max_tokens: DEFAULT_MAX_TOKENS,
        }
    }

    pub fn model(&self) -> &str {
        match &self.kind {
            ProviderKind::Remote { model, .. } => model,
            ProviderKind::OfflineDictionary { .. } => "offline-dictionary",
        }
    }

    /// Build the provider this configuration describes.
    pub fn build(&self) -> Result<Box<dyn CompletionProvider>, ProviderError> {
        Ok(match &self.kind {
            ProviderKind::OfflineDictionary { path: Some(path) } => {
                Box::new(OfflineDictionaryProvider::from_file(path)?)
            }
            ProviderKind::OfflineDictionary { path: None } => Box::new(OfflineDictionaryProvider::builtin()),
            ProviderKind::Remote { .. } => Box::new(RemoteProvider::new(self.clone())?),
        })
    }
}

pub struct RemoteProvider {
    config: ProviderConfig,
    client: reqwest::blocking::Client,
}

impl RemoteProvider {
    pub fn new(config: ProviderConfig) -> Result<Self, ProviderError> {
        if !matches!(config.kind, ProviderKind::Remote { .. }) {
            return Err(ProviderError::MalformedResponse(
                "remote provider needs a remote config".into(),
            ));
        }
        let client = reqwest::blocking::Client::builder()
            .timeout(Duration::from_secs(config.timeout_secs.max(1)))
            .build()
            .map_err(|e| ProviderError::Unreachable {
                attempts: 0,
                message: e.to_string(),
            })?;
        Ok(RemoteProvider { config, client })
    }

    fn parts(&self) -> (&str, &str, WireFormat) {
        match &self.config.kind {
            ProviderKind::Remote {
                endpoint,
                api_key_env,
                wire,
                ..
            } => (endpoint, api_key_env, *wire),
            ProviderKind::OfflineDictionary { .. } => unreachable!("checked in new"),
        }
    }

    fn body(&self, request: &CompletionRequest, wire: WireFormat) -> Value {
        match wire {
            WireFormat::Generic => json!({
                "model": request.model,
                "system": request.system,
                "user": request.user,
                "temperature": TEMPERATURE,
                "max_tokens": request.max_tokens,
            }),
            WireFormat::Anthropic => json!({
                "model": request.model,
                "system": request.system,
                "messages": [{"role": "user", "content": request.user}],
                "temperature": TEMPERATURE,
                "max_tokens": request.max_tokens,
            }),
        }
    }

    fn extract(wire: WireFormat, body: &Value) -> Result<String, ProviderError> {
        let text = match wire {
            WireFormat::Generic => body.get("text").and_then(Value::as_str).map(str::to_string),
            WireFormat::Anthropic => body.get("content").and_then(Value::as_array).map(|blocks| {
                blocks
                    .iter()
                    .filter_map(|b| b.get("text").and_then(Value::as_str))
                    .collect::<String>()
            }),
        };
        text.ok_or_else(|| ProviderError::MalformedResponse(format!("no completion text in {body}")))
    }
}

impl CompletionProvider for RemoteProvider {
    fn id(&self) -> String {
        let (endpoint, _, wire) = self.parts();
        format!("remote:{wire:?}:{}@{endpoint}", self.config.model()).to_lowercase()
    }

    fn complete(&self, request: &CompletionRequest) -> Result<String, ProviderError> {
        let (endpoint, key_env, wire) = self.parts();
        let key = std::env::var(key_env).ok();
        if wire == WireFormat::Anthropic && key.is_none() {
            return Err(ProviderError::MissingCredential(key_env.to_string()));
        }
        let body = self.body(request, wire);
        let attempts = self.config.max_retries + 1;
        let mut last_error = String::new();

        for attempt in 1..=attempts {
            let mut req = self.client.post(endpoint).json(&body);
            req = match (wire, &key) {
                (WireFormat::Anthropic, Some(k)) => {
                    req.header("x-api-key", k).header("anthropic-version", "2023-06-01")
                }
                (WireFormat::Generic, Some(k)) => req.bearer_auth(k),
                _ => req,
            };
            match req.send() {
                Ok(resp) => {
                    let status = resp.status();
                    if status.is_success() {
                        let value: Value = resp
                            .json()
                            .map_err(|e| ProviderError::MalformedResponse(e.to_string()))?;
                        return Self::extract(wire, &value);
                    }
                    let text = resp.text().unwrap_or_default();
                    if !(status.is_server_error() || status.as_u16() == 429) {
                        return Err(ProviderError::Rejected {
                            status: status.as_u16(),
                            body: text.chars().take(200).collect(),
                        });
                    }
                    last_error = format!("HTTP {status}");
                }
                Err(e) => last_error = e.to_string(),
            }
            warn!("transliteration call attempt {attempt}/{attempts} failed: {last_error}");
            if attempt < attempts {
                let delay = Duration::from_millis(200 * (1 << (attempt - 1)));
                debug!("retrying in {delay:?}");
                thread::sleep(delay);
            }
        }
        Err(ProviderError::Unreachable {
            attempts,
            message: last_error,
        })
    }
}

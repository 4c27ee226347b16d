//! Code-mix detection and cached, validated transliteration of Latin spans
//! into the matrix language's script.

mod cache;
mod provider;
mod validate;

use std::sync::Arc;

use log::{debug, warn};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::language::TargetLanguage;
use crate::script::latin_runs;

pub use cache::{cache_key, CacheError, TranslitCache, TranslitCacheEntry};
pub use provider::{
    CompletionProvider, CompletionRequest, OfflineDictionaryProvider, ProviderConfig, ProviderError, ProviderKind,
    RemoteProvider, WireFormat, DEFAULT_API_KEY_ENV, DEFAULT_MAX_TOKENS, TEMPERATURE,
};
pub use validate::{validate_translit, Clause, Validation, Violation};

/// Tag of the embedded system prompt; recorded on every cache entry.
pub const PROMPT_VERSION: &str = "translit-v1";

const PROMPT_TEMPLATE: &str = include_str!("../../data/prompts/translit_v1.txt");

/// True when `text` holds at least one Latin word of two or more letters.
/// Single letters and digits never count.
pub fn detect_codemix(text: &str) -> bool {
    latin_runs(text).iter().any(|(_, letters)| *letters >= 2)
}

/// The fixed system prompt for `lang`.
pub fn system_prompt(lang: TargetLanguage) -> String {
    let script = match lang {
        TargetLanguage::Hi => "Devanagari",
        TargetLanguage::Te => "Telugu",
        TargetLanguage::Ta => "Tamil",
    };
    PROMPT_TEMPLATE
        .replace("{language}", lang.english_name())
        .replace("{script}", script)
        .trim_end()
        .to_string()
}

fn retry_prompt(lang: TargetLanguage, violations: &[Violation]) -> String {
    let mut prompt = system_prompt(lang);
    prompt.push_str("\n\nYour previous reply broke these rules:");
    for v in violations {
        prompt.push_str("\n- ");
        prompt.push_str(&v.to_string());
    }
    prompt.push_str("\nRewrite the text again, following every rule.");
    prompt
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslitRequest {
    pub text: String,
    pub lang: TargetLanguage,
    pub prompt_version: String,
}

impl TranslitRequest {
    pub fn new(text: impl Into<String>, lang: TargetLanguage) -> Self {
        TranslitRequest {
            text: text.into(),
            lang,
            prompt_version: PROMPT_VERSION.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum TranslitError {
    #[error("transliteration input is empty")]
    EmptyInput,
    #[error("unknown prompt version `{0}`")]
    UnknownPromptVersion(String),
    #[error(transparent)]
    Provider(#[from] ProviderError),
    #[error("provider output failed validation twice: {}", summary(.second_violations))]
    ValidationFailed {
        first_output: String,
        first_violations: Vec<Violation>,
        second_output: String,
        second_violations: Vec<Violation>,
    },
    #[error(transparent)]
    Cache(#[from] CacheError),
}

fn summary(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TranslitSource {
    /// Input had no code-mix; returned untouched.
    Unchanged,
    Cache,
    Provider {
        attempts: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslitOutcome {
    pub output: String,
    pub source: TranslitSource,
    /// Set when a corrupt cache entry was dropped on the way.
    pub evicted: Option<String>,
}

/// Transliteration seam used by the planner.
pub trait Transliterate: Send + Sync {
    fn transliterate(&self, text: &str, lang: TargetLanguage) -> Result<String, TranslitError>;
}

pub struct Transliterator {
    provider: Arc<dyn CompletionProvider>,
    cache: Arc<TranslitCache>,
    model: String,
    max_tokens: u32,
}

impl Transliterator {
    pub fn new(provider: Arc<dyn CompletionProvider>, cache: Arc<TranslitCache>) -> Self {
        Transliterator {
            provider,
            cache,
            model: String::new(),
            max_tokens: DEFAULT_MAX_TOKENS,
        }
    }

    pub fn with_model(mut self, model: impl Into<String>) -> Self {
        self.model = model.into();
        self
    }

    pub fn with_max_tokens(mut self, max_tokens: u32) -> Self {
        self.max_tokens = max_tokens;
        self
    }

    pub fn cache(&self) -> &TranslitCache {
        &self.cache
    }

    pub fn run(&self, req: &TranslitRequest) -> Result<TranslitOutcome, TranslitError> {
        if req.text.is_empty() {
            return Err(TranslitError::EmptyInput);
        }
        if req.prompt_version != PROMPT_VERSION {
            return Err(TranslitError::UnknownPromptVersion(req.prompt_version.clone()));
        }
        if !detect_codemix(&req.text) {
            return Ok(TranslitOutcome {
                output: req.text.clone(),
                source: TranslitSource::Unchanged,
                evicted: None,
            });
        }

        let key = cache_key(&req.text);
        let mut evicted = None;
        if let Some(entry) = self.cache.get(&key) {
            match entry
                .defect()
                .or_else(|| (entry.input != req.text).then(|| "input mismatch".into()))
            {
                Some(reason) => {
                    warn!("evicting corrupt cache entry {key}: {reason}");
                    self.cache.evict(&key)?;
                    evicted = Some(reason);
                }
                None if entry.lang == req.lang && entry.prompt_version == req.prompt_version => {
                    debug!("cache hit {key}");
                    return Ok(TranslitOutcome {
                        output: entry.output,
                        source: TranslitSource::Cache,
                        evicted: None,
                    });
                }
                None => debug!(
                    "cache entry {key} is for {}/{}; treating as miss",
                    entry.lang, entry.prompt_version
                ),
            }
        }

        let first = self.call(req, system_prompt(req.lang))?;
        let first_check = validate_translit(&req.text, &first);
        let (output, attempts) = if first_check.is_ok() {
            (first, 1)
        } else {
            warn!(
                "transliteration failed validation, retrying once: {}",
                summary(&first_check.violations)
            );
            let second = self.call(req, retry_prompt(req.lang, &first_check.violations))?;
            let second_check = validate_translit(&req.text, &second);
            if !second_check.is_ok() {
                return Err(TranslitError::ValidationFailed {
                    first_output: first,
                    first_violations: first_check.violations,
                    second_output: second,
                    second_violations: second_check.violations,
                });
            }
            (second, 2)
        };

        self.cache.insert(TranslitCacheEntry::new(
            &req.text,
            &output,
            &self.provider.id(),
            &req.prompt_version,
            req.lang,
        ))?;
        Ok(TranslitOutcome {
            output,
            source: TranslitSource::Provider { attempts },
            evicted,
        })
    }

    fn call(&self, req: &TranslitRequest, system: String) -> Result<String, ProviderError> {
        let request = CompletionRequest {
            model: self.model.clone(),
            system,
            user: req.text.clone(),
            temperature: TEMPERATURE,
            max_tokens: self.max_tokens,
            language: req.lang,
        };
        let reply = self.provider.complete(&request)?;
        Ok(reply.trim_end_matches(['\n', '\r']).nfc().collect())
    }
}

impl Transliterate for Transliterator {
    fn transliterate(&self, text: &str, lang: TargetLanguage) -> Result<String, TranslitError> {
        self.run(&TranslitRequest::new(text, lang)).map(|o| o.output)
    }
}

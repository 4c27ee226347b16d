//! Branch selection and synthesis-plan assembly.
//!
//! | input                  | branch    | backend            |
//! |------------------------|-----------|--------------------|
//! | any code-mix           | CodeMix   | indicf5            |
//! | te / ta, pure script   | LoraBups  | chatterbox-lora    |
//! | hi, pure script        | Vanilla   | chatterbox-vanilla |

mod sampling;
mod voice;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codemix::{detect_codemix, TranslitError, Transliterate};
use crate::language::TargetLanguage;
use crate::normalise::Normalise;
use crate::romanise::{Romanise, RomaniseError};
use crate::script::{is_brahmic, ScriptClass};

pub use sampling::{PresetName, SamplingConfig, SamplingError, UnknownPreset};
pub use voice::{
    validate_voice_prompt, wav_duration, PromptLanguage, VoicePrompt, VoicePromptError, MAX_PROMPT_SECS,
    MIN_PROMPT_SECS, RECOMMENDED_MAX_SECS,
};

pub const PLAN_VERSION: &str = "plan_v1";
pub const PIPELINE_VERSION: &str = concat!("indic-frontend/", env!("CARGO_PKG_VERSION"));
/// Conditioning tag for both Chatterbox branches.
pub const HINDI_PROXY_ID: &str = "hi";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    LoraBups,
    Vanilla,
    CodeMix,
}

impl Branch {
    pub fn backend(self) -> BackendId {
        match self {
            Branch::LoraBups => BackendId::ChatterboxLora,
            Branch::Vanilla => BackendId::ChatterboxVanilla,
            Branch::CodeMix => BackendId::Indicf5,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::LoraBups => "lora_bups",
            Branch::Vanilla => "vanilla",
            Branch::CodeMix => "code_mix",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BackendId {
    ChatterboxLora,
    ChatterboxVanilla,
    Indicf5,
}

/// Non-fatal findings attached to a plan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Warning {
    CrossLanguagePrompt {
        prompt_language: PromptLanguage,
        target_language: TargetLanguage,
    },
    LongVoicePrompt {
        duration: f64,
        recommended_max: f64,
    },
    /// Forced onto the LoRA branch although no result backs this language.
    UnvalidatedLanguage {
        script: ScriptClass,
    },
    /// Caller's language disagrees with the script actually present.
    LanguageMismatch {
        requested: TargetLanguage,
        detected: String,
    },
    NumberOutOfRange {
        text: String,
        offset: usize,
    },
    /// `force_lora` only applies to scripts without a branch of their own.
    ForceLoraIgnored,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LanguageError {
    #[error("text has no Brahmic content")]
    NoBrahmicContent,
    #[error("no synthesis branch for {0} text")]
    UnsupportedLanguage(ScriptClass),
}

/// ISO 639-1 code for a Brahmic script's main language.
pub fn script_language_code(script: ScriptClass) -> &'static str {
    match script {
        ScriptClass::Devanagari => "hi",
        ScriptClass::Bengali => "bn",
        ScriptClass::Gujarati => "gu",
        ScriptClass::Tamil => "ta",
        ScriptClass::Telugu => "te",
        ScriptClass::Kannada => "kn",
        ScriptClass::Malayalam => "ml",
        ScriptClass::PassThrough => "und",
    }
}

/// Most frequent Brahmic script by codepoint count; ties go to the script seen first.
pub fn majority_script(text: &str) -> Option<ScriptClass> {
    let mut counts: Vec<(ScriptClass, usize)> = Vec::new();
    for c in text.chars().filter(|&c| is_brahmic(c)) {
        let class = ScriptClass::of_block(c);
        match counts.iter_mut().find(|(s, _)| *s == class) {
            Some((_, n)) => *n += 1,
            None => counts.push((class, 1)),
        }
    }
    // max_by_key returns the last maximum; scan in reverse so the first wins
    counts.into_iter().rev().max_by_key(|&(_, n)| n).map(|(s, _)| s)
}

pub fn detect_language(text: &str) -> Result<TargetLanguage, LanguageError> {
    let script = majority_script(text).ok_or(LanguageError::NoBrahmicContent)?;
    TargetLanguage::from_script(script).ok_or(LanguageError::UnsupportedLanguage(script))
}

/// Code-mix on the raw text wins; otherwise Telugu and Tamil take the LoRA
/// branch and Hindi the vanilla one.
pub fn route(text: &str, lang: TargetLanguage) -> Branch {
    if detect_codemix(text) {
        return Branch::CodeMix;
    }
    match lang {
        TargetLanguage::Te | TargetLanguage::Ta => Branch::LoraBups,
        TargetLanguage::Hi => Branch::Vanilla,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub source_text: String,
    pub detected_language: String,
    pub pipeline_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthesisPlan {
    pub version: String,
    pub branch: Branch,
    pub backend_id: BackendId,
    pub processed_text: String,
    pub language_id: Option<String>,
    pub sampling: Option<SamplingConfig>,
    pub voice_prompt: Option<VoicePrompt>,
    pub warnings: Vec<Warning>,
    pub provenance: Provenance,
}

impl SynthesisPlan {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plan serialises")
    }
}

#[derive(Debug, Error)]
pub enum PlanError {
    #[error("input text is empty")]
    EmptyText,
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error(transparent)]
    Romanise(#[from] RomaniseError),
    #[error(transparent)]
    Translit(#[from] TranslitError),
    #[error(transparent)]
    VoicePrompt(#[from] VoicePromptError),
    #[error("the {0} branch needs a voice prompt (strict mode)")]
    MissingVoicePrompt(Branch),
    #[error("code-mixed input but no transliterator is configured")]
    NoTransliterator,
}

impl PlanError {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            PlanError::EmptyText => "empty_text",
            PlanError::Language(LanguageError::NoBrahmicContent) => "no_brahmic_content",
            PlanError::Language(LanguageError::UnsupportedLanguage(_)) => "unsupported_language",
            PlanError::Romanise(RomaniseError::UnmappedCodepoint { .. }) => "unmapped_codepoint",
            PlanError::Romanise(RomaniseError::NonBrahmicRun(_)) => "romanise_error",
            PlanError::Translit(TranslitError::Provider(_)) => "provider_unreachable",
            PlanError::Translit(TranslitError::ValidationFailed { .. }) => "validation_failed",
            PlanError::Translit(_) => "translit_error",
            PlanError::VoicePrompt(VoicePromptError::DurationOutOfRange { .. }) => "duration_out_of_range",
            PlanError::VoicePrompt(_) => "invalid_voice_prompt",
            PlanError::MissingVoicePrompt(_) => "missing_voice_prompt",
            PlanError::NoTransliterator => "no_transliterator",
        }
    }

    pub fn is_provider_failure(&self) -> bool {
        matches!(self, PlanError::Translit(TranslitError::Provider(_)))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanRequest {
    pub text: String,
    pub lang: Option<TargetLanguage>,
    pub voice_prompt: Option<VoicePrompt>,
    pub preset: PresetName,
    /// Require a voice prompt on the Chatterbox branches.
    pub strict: bool,
    /// Send Bengali/Gujarati/Kannada/Malayalam text down the LoRA branch.
    pub force_lora: bool,
}

impl PlanRequest {
    pub fn new(text: impl Into<String>) -> Self {
        PlanRequest {
            text: text.into(),
            lang: None,
            voice_prompt: None,
            preset: PresetName::ConfigB,
            strict: true,
            force_lora: false,
        }
    }

    pub fn lang(mut self, lang: TargetLanguage) -> Self {
        self.lang = Some(lang);
        self
    }

    pub fn voice_prompt(mut self, vp: VoicePrompt) -> Self {
        self.voice_prompt = Some(vp);
        self
    }

    pub fn preset(mut self, preset: PresetName) -> Self {
        self.preset = preset;
        self
    }

    pub fn strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }

    pub fn force_lora(mut self, force: bool) -> Self {
        self.force_lora = force;
        self
    }
}

#[derive(Clone, Copy)]
pub struct PlanDeps<'a> {
    pub normaliser: &'a dyn Normalise,
    pub romaniser: &'a dyn Romanise,
    pub transliterator: Option<&'a dyn Transliterate>,
}

pub fn build_plan(req: &PlanRequest, deps: PlanDeps<'_>) -> Result<SynthesisPlan, PlanError> {
    if req.text.is_empty() {
        return Err(PlanError::EmptyText);
    }
    let mut warnings = Vec::new();
    let detected = majority_script(&req.text);

    let lang = match req.lang {
        Some(lang) => {
            if let Some(script) = detected.filter(|&s| s != lang.script()) {
                warnings.push(Warning::LanguageMismatch {
                    requested: lang,
                    detected: script_language_code(script).into(),
                });
            }
            lang
        }
        None => match detect_language(&req.text) {
            Ok(lang) => lang,
            Err(LanguageError::UnsupportedLanguage(script)) if req.force_lora => {
                return forced_lora_plan(req, script, deps);
            }
            Err(e) => return Err(e.into()),
        },
    };
    if req.force_lora {
        warnings.push(Warning::ForceLoraIgnored);
    }

    let branch = route(&req.text, lang);
    let normalised = deps.normaliser.normalise(&req.text, lang);
    warnings.extend(normalised.out_of_range.iter().map(|n| Warning::NumberOutOfRange {
        text: n.text.clone(),
        offset: n.offset,
    }));

    let processed_text = match branch {
        Branch::LoraBups => deps.romaniser.romanise(&normalised.text)?,
        Branch::Vanilla => normalised.text,
        Branch::CodeMix => deps
            .transliterator
            .ok_or(PlanError::NoTransliterator)?
            .transliterate(&normalised.text, lang)?,
    };

    let (sampling, language_id) = match branch {
        Branch::CodeMix => (None, None),
        _ => {
            match &req.voice_prompt {
                Some(vp) => warnings.extend(validate_voice_prompt(vp, lang)?),
                None if req.strict => return Err(PlanError::MissingVoicePrompt(branch)),
                None => {}
            }
            (
                Some(SamplingConfig::preset(req.preset)),
                Some(HINDI_PROXY_ID.to_string()),
            )
        }
    };

    Ok(SynthesisPlan {
        version: PLAN_VERSION.into(),
        branch,
        backend_id: branch.backend(),
        processed_text,
        language_id,
        sampling,
        voice_prompt: req.voice_prompt.clone(),
        warnings,
        provenance: Provenance {
            source_text: req.text.clone(),
            detected_language: lang.code().into(),
            pipeline_version: PIPELINE_VERSION.into(),
        },
    })
}

/// LoRA plan for a script with no branch of its own. There is no normaliser
/// table for these languages, so the text is romanised as written.
fn forced_lora_plan(req: &PlanRequest, script: ScriptClass, deps: PlanDeps<'_>) -> Result<SynthesisPlan, PlanError> {
    let mut warnings = vec![Warning::UnvalidatedLanguage { script }];
    let processed_text = deps.romaniser.romanise(&req.text)?;
    match &req.voice_prompt {
        Some(vp) => {
            if !(MIN_PROMPT_SECS..=MAX_PROMPT_SECS).contains(&vp.duration) {
                return Err(VoicePromptError::DurationOutOfRange { duration: vp.duration }.into());
            }
            if vp.duration > RECOMMENDED_MAX_SECS {
                warnings.push(Warning::LongVoicePrompt {
                    duration: vp.duration,
                    recommended_max: RECOMMENDED_MAX_SECS,
                });
            }
        }
        None if req.strict => return Err(PlanError::MissingVoicePrompt(Branch::LoraBups)),
        None => {}
    }
    Ok(SynthesisPlan {
        version: PLAN_VERSION.into(),
        branch: Branch::LoraBups,
        backend_id: BackendId::ChatterboxLora,
        processed_text,
        language_id: Some(HINDI_PROXY_ID.into()),
        sampling: Some(SamplingConfig::preset(req.preset)),
        voice_prompt: req.voice_prompt.clone(),
        warnings,
        provenance: Provenance {
            source_text: req.text.clone(),
            detected_language: script_language_code(script).into(),
            pipeline_version: PIPELINE_VERSION.into(),
        },
    })
}

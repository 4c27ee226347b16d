use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Warning;
use crate::language::TargetLanguage;

/// Accepted reference-clip length, seconds (inclusive).
pub const MIN_PROMPT_SECS: f64 = 8.0;
pub const MAX_PROMPT_SECS: f64 = 20.0;
/// Recommended upper end; longer clips are accepted with a warning.
pub const RECOMMENDED_MAX_SECS: f64 = 11.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PromptLanguage {
    Te,
    Ta,
    Hi,
    Other,
}

impl From<TargetLanguage> for PromptLanguage {
    fn from(lang: TargetLanguage) -> Self {
        match lang {
            TargetLanguage::Te => PromptLanguage::Te,
            TargetLanguage::Ta => PromptLanguage::Ta,
            TargetLanguage::Hi => PromptLanguage::Hi,
        }
    }
}

impl FromStr for PromptLanguage {
    type Err = std::convert::Infallible;

    /// Anything that is not te/ta/hi is `Other`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.parse::<TargetLanguage>() {
            Ok(lang) => lang.into(),
            Err(_) => PromptLanguage::Other,
        })
    }
}

impl fmt::Display for PromptLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PromptLanguage::Te => "te",
            PromptLanguage::Ta => "ta",
            PromptLanguage::Hi => "hi",
            PromptLanguage::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VoicePromptError {
    #[error("voice prompt path is empty")]
    EmptyPath,
    #[error("voice prompt duration {0} s is not in (0, 600)")]
    ImplausibleDuration(f64),
    #[error("voice prompt is {duration} s; accepted range is [{MIN_PROMPT_SECS}, {MAX_PROMPT_SECS}] s")]
    DurationOutOfRange { duration: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VoicePrompt {
    pub audio_path: PathBuf,
    pub duration: f64,
    pub language: PromptLanguage,
}

impl VoicePrompt {
    pub fn new(
        audio_path: impl Into<PathBuf>,
        duration: f64,
        language: PromptLanguage,
    ) -> Result<Self, VoicePromptError> {
        let audio_path = audio_path.into();
        if audio_path.as_os_str().is_empty() {
            return Err(VoicePromptError::EmptyPath);
        }
        if !(duration > 0.0 && duration < 600.0) {
            return Err(VoicePromptError::ImplausibleDuration(duration));
        }
        Ok(VoicePrompt {
            audio_path,
            duration,
            language,
        })
    }
}

/// Check a reference clip for use with `lang`. Warnings do not block the plan.
pub fn validate_voice_prompt(vp: &VoicePrompt, lang: TargetLanguage) -> Result<Vec<Warning>, VoicePromptError> {
    if !(MIN_PROMPT_SECS..=MAX_PROMPT_SECS).contains(&vp.duration) {
        return Err(VoicePromptError::DurationOutOfRange { duration: vp.duration });
    }
    let mut warnings = Vec::new();
    if vp.language != PromptLanguage::from(lang) {
        warnings.push(Warning::CrossLanguagePrompt {
            prompt_language: vp.language,
            target_language: lang,
        });
    }
    if vp.duration > RECOMMENDED_MAX_SECS {
        warnings.push(Warning::LongVoicePrompt {
            duration: vp.duration,
            recommended_max: RECOMMENDED_MAX_SECS,
        });
    }
    Ok(warnings)
}

/// Clip length from a WAV header: frames / sample rate. No samples are decoded.
pub fn wav_duration(path: &Path) -> Result<f64, hound::Error> {
    let reader = hound::WavReader::open(path)?;
    let spec = reader.spec();
    Ok(reader.duration() as f64 / spec.sample_rate as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vp(secs: f64, lang: PromptLanguage) -> VoicePrompt {
        VoicePrompt::new("ref.wav", secs, lang).unwrap()
    }

    #[test]
    fn duration_bounds() {
        let te = TargetLanguage::Te;
        assert_eq!(validate_voice_prompt(&vp(9.0, PromptLanguage::Te), te), Ok(vec![]));
        assert_eq!(validate_voice_prompt(&vp(11.0, PromptLanguage::Te), te), Ok(vec![]));
        assert!(validate_voice_prompt(&vp(8.0, PromptLanguage::Te), te).is_ok());
        assert!(validate_voice_prompt(&vp(20.0, PromptLanguage::Te), te).is_ok());
        assert!(validate_voice_prompt(&vp(6.0, PromptLanguage::Te), te).is_err());
        assert!(validate_voice_prompt(&vp(49.0, PromptLanguage::Other), te).is_err());
    }

    #[test]
    fn cross_language_warns() {
        let w = validate_voice_prompt(&vp(10.0, PromptLanguage::Hi), TargetLanguage::Te).unwrap();
        assert_eq!(
            w,
            vec![Warning::CrossLanguagePrompt {
                prompt_language: PromptLanguage::Hi,
                target_language: TargetLanguage::Te
            }]
        );
    }

    #[test]
    fn long_clip_warns() {
        let w = validate_voice_prompt(&vp(15.0, PromptLanguage::Ta), TargetLanguage::Ta).unwrap();
        assert!(matches!(w[..], [Warning::LongVoicePrompt { .. }]));
    }

    #[test]
    fn construction_invariants() {
        assert_eq!(
            VoicePrompt::new("", 9.0, PromptLanguage::Te),
            Err(VoicePromptError::EmptyPath)
        );
        assert!(VoicePrompt::new("a.wav", 0.0, PromptLanguage::Te).is_err());
        assert!(VoicePrompt::new("a.wav", 600.0, PromptLanguage::Te).is_err());
        assert_eq!("en".parse::<PromptLanguage>().unwrap(), PromptLanguage::Other);
    }

    #[test]
    fn wav_header_duration() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("clip.wav");
        let spec = hound::WavSpec {
            channels: 1,
            sample_rate: 8000,
            bits_per_sample: 16,
            sample_format: hound::SampleFormat::Int,
        };
        let mut w = hound::WavWriter::create(&path, spec).unwrap();
        for _ in 0..8000 * 9 {
            w.write_sample(0i16).unwrap();
        }
        w.finalize().unwrap();
        assert_eq!(wav_duration(&path).unwrap(), 9.0);
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresetName {
    Default,
    ConfigA,
    ConfigB,
    ConfigC,
    Custom,
}

impl PresetName {
    pub fn as_str(self) -> &'static str {
        match self {
            PresetName::Default => "default",
            PresetName::ConfigA => "config_a",
            PresetName::ConfigB => "config_b",
            PresetName::ConfigC => "config_c",
            PresetName::Custom => "custom",
        }
    }
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown preset `{0}` (expected default, a, b or c)")]
pub struct UnknownPreset(pub String);

impl FromStr for PresetName {
    type Err = UnknownPreset;

    /// Accepts the short CLI spelling (`a`) and the full name (`config_a`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "default" => Ok(PresetName::Default),
            "a" | "config_a" => Ok(PresetName::ConfigA),
            "b" | "config_b" => Ok(PresetName::ConfigB),
            "c" | "config_c" => Ok(PresetName::ConfigC),
            _ => Err(UnknownPreset(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SamplingError {
    #[error("{knob} = {value} is outside [0, 2]")]
    OutOfRange { knob: &'static str, value: f64 },
    #[error("temperature must be positive")]
    ZeroTemperature,
}

/// Backend sampling knobs. Absent optional knobs serialise as `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplingConfig {
    pub exaggeration: f64,
    pub temperature: f64,
    pub min_p: f64,
    pub cfg_weight: Option<f64>,
    pub repetition_penalty: Option<f64>,
    pub preset_name: PresetName,
}

impl SamplingConfig {
    pub fn preset(name: PresetName) -> SamplingConfig {
        let base = SamplingConfig {
            exaggeration: 0.5,
            temperature: 0.8,
            min_p: 0.05,
            cfg_weight: None,
            repetition_penalty: None,
            preset_name: name,
        };
        match name {
            PresetName::Default | PresetName::Custom => base,
            PresetName::ConfigA => SamplingConfig {
                min_p: 0.03,
                repetition_penalty: Some(1.2),
                ..base
            },
            PresetName::ConfigB => SamplingConfig {
                exaggeration: 0.7,
                temperature: 0.6,
                min_p: 0.1,
                ..base
            },
            PresetName::ConfigC => SamplingConfig {
                temperature: 0.6,
                cfg_weight: Some(0.7),
                ..base
            },
        }
    }

    pub fn custom(
        exaggeration: f64,
        temperature: f64,
        min_p: f64,
        cfg_weight: Option<f64>,
        repetition_penalty: Option<f64>,
    ) -> Result<SamplingConfig, SamplingError> {
        let cfg = SamplingConfig {
            exaggeration,
            temperature,
            min_p,
            cfg_weight,
            repetition_penalty,
            preset_name: PresetName::Custom,
        };
        cfg.check()?;
        Ok(cfg)
    }

    pub fn check(&self) -> Result<(), SamplingError> {
        let knobs = [
            ("exaggeration", Some(self.exaggeration)),
            ("temperature", Some(self.temperature)),
            ("min_p", Some(self.min_p)),
            ("cfg_weight", self.cfg_weight),
            ("repetition_penalty", self.repetition_penalty),
        ];
        for (knob, value) in knobs {
            if let Some(value) = value {
                if !(0.0..=2.0).contains(&value) {
                    return Err(SamplingError::OutOfRange { knob, value });
                }
            }
        }
        if self.temperature <= 0.0 {
            return Err(SamplingError::ZeroTemperature);
        }
        Ok(())
    }
}

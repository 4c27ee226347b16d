use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::script::ScriptClass;

/// Deployment languages with a synthesis branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetLanguage {
    Te,
    Ta,
    Hi,
}

impl TargetLanguage {
    pub const ALL: [TargetLanguage; 3] = [TargetLanguage::Te, TargetLanguage::Ta, TargetLanguage::Hi];

    pub fn code(self) -> &'static str {
        match self {
            TargetLanguage::Te => "te",
            TargetLanguage::Ta => "ta",
            TargetLanguage::Hi => "hi",
        }
    }

    pub fn english_name(self) -> &'static str {
        match self {
            TargetLanguage::Te => "Telugu",
            TargetLanguage::Ta => "Tamil",
            TargetLanguage::Hi => "Hindi",
        }
    }

    /// The script the language is written in.
    pub fn script(self) -> ScriptClass {
        match self {
            TargetLanguage::Te => ScriptClass::Telugu,
            TargetLanguage::Ta => ScriptClass::Tamil,
            TargetLanguage::Hi => ScriptClass::Devanagari,
        }
    }

    pub fn from_script(script: ScriptClass) -> Option<TargetLanguage> {
        match script {
            ScriptClass::Telugu => Some(TargetLanguage::Te),
            ScriptClass::Tamil => Some(TargetLanguage::Ta),
            ScriptClass::Devanagari => Some(TargetLanguage::Hi),
            _ => None,
        }
    }
}

impl fmt::Display for TargetLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown language `{0}` (expected te, ta or hi)")]
pub struct UnknownLanguage(pub String);

impl FromStr for TargetLanguage {
    type Err = UnknownLanguage;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "te" => Ok(TargetLanguage::Te),
            "ta" => Ok(TargetLanguage::Ta),
            "hi" => Ok(TargetLanguage::Hi),
            _ => Err(UnknownLanguage(s.to_string())),
        }
    }
}

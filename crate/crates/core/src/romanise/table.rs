//! Per-script ISO-15919 tables and their text format.
//!
//! One entry per line: `HEX[ HEX]<TAB>output<TAB>flag`. `#` starts a comment,
//! blank lines are ignored, and the output column may be empty (the codepoint
//! is dropped). Flags are `consonant`, `vowel_sign`, `virama`, `digit`,
//! `modifier` or `-`.

use std::collections::HashMap;
use std::str::FromStr;

use thiserror::Error;

use crate::script::ScriptClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    /// Consonant carrying the inherent vowel `a`.
    Consonant,
    VowelSign,
    Virama,
    Digit,
    /// Dropped and transparent to inherent-vowel decisions (nukta, length marks).
    Modifier,
    Plain,
}

impl FromStr for EntryKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "consonant" => EntryKind::Consonant,
            "vowel_sign" => EntryKind::VowelSign,
            "virama" => EntryKind::Virama,
            "digit" => EntryKind::Digit,
            "modifier" => EntryKind::Modifier,
            "-" => EntryKind::Plain,
            other => return Err(format!("unknown flag `{other}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub latin: String,
    pub kind: EntryKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: U+{codepoint:04X} is outside the {script} block")]
    OutsideBlock {
        line: usize,
        codepoint: u32,
        script: ScriptClass,
    },
    #[error("line {line}: duplicate entry")]
    Duplicate { line: usize },
}

#[derive(Debug, Clone)]
pub struct TransliterationTable {
    script: ScriptClass,
    singles: HashMap<char, Entry>,
    pairs: HashMap<(char, char), Entry>,
}

impl TransliterationTable {
    pub fn parse(script: ScriptClass, source: &str) -> Result<Self, TableError> {
        let start = script.block_start().ok_or(TableError::Syntax {
            line: 0,
            message: "pass-through has no table".into(),
        })?;
        let block = start..start + 0x80;
        let mut singles = HashMap::new();
        let mut pairs = HashMap::new();

        for (idx, raw) in source.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let syntax = |message: String| TableError::Syntax { line, message };
            let cols: Vec<&str> = content.trim_end_matches([' ', '\r']).split('\t').collect();
            if cols.len() != 3 {
                return Err(syntax(format!(
                    "expected 3 tab-separated columns, found {}",
                    cols.len()
                )));
            }
            let kind: EntryKind = cols[2].trim().parse().map_err(syntax)?;
            let mut cps = Vec::new();
            for hex in cols[0].split_whitespace() {
                let cp = u32::from_str_radix(hex, 16).map_err(|e| syntax(format!("bad codepoint `{hex}`: {e}")))?;
                if !block.contains(&cp) {
                    return Err(TableError::OutsideBlock {
                        line,
                        codepoint: cp,
                        script,
                    });
                }
                cps.push(char::from_u32(cp).ok_or_else(|| syntax(format!("invalid scalar {hex}")))?);
            }
            let entry = Entry {
                latin: cols[1].to_string(),
                kind,
            };
            let dup = match cps.as_slice() {
                [c] => singles.insert(*c, entry).is_some(),
                [a, b] => pairs.insert((*a, *b), entry).is_some(),
                _ => return Err(syntax("expected one or two codepoints".into())),
            };
            if dup {
                return Err(TableError::Duplicate { line });
            }
        }
        Ok(TransliterationTable { script, singles, pairs })
    }

    pub fn script(&self) -> ScriptClass {
        self.script
    }

    pub fn single(&self, c: char) -> Option<&Entry> {
        self.singles.get(&c)
    }

    pub fn pair(&self, a: char, b: char) -> Option<&Entry> {
        self.pairs.get(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.singles.len() + self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All single-codepoint entries, for auditing.
    pub fn singles(&self) -> impl Iterator<Item = (char, &Entry)> {
        self.singles.iter().map(|(c, e)| (*c, e))
    }
}

pub(crate) fn embedded_source(script: ScriptClass) -> Option<&'static str> {
    Some(match script {
        ScriptClass::Devanagari => include_str!("../../data/translit/devanagari.tsv"),
        ScriptClass::Bengali => include_str!("../../data/translit/bengali.tsv"),
        ScriptClass::Gujarati => include_str!("../../data/translit/gujarati.tsv"),
        ScriptClass::Tamil => include_str!("../../data/translit/tamil.tsv"),
        ScriptClass::Telugu => include_str!("../../data/translit/telugu.tsv"),
        ScriptClass::Kannada => include_str!("../../data/translit/kannada.tsv"),
        ScriptClass::Malayalam => include_str!("../../data/translit/malayalam.tsv"),
        ScriptClass::PassThrough => return None,
    })
}

//! Native-script number words, month names, currency units and Latin letter names.
//!
//! Tables use the same line format as the transliteration tables:
//! `slot<TAB>value`, `#` comments. Every slot is required.

use std::collections::HashMap;
use std::sync::LazyLock;

use thiserror::Error;

use crate::language::TargetLanguage;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpelloutTableError {
    #[error("line {line}: expected `slot<TAB>value`")]
    Syntax { line: usize },
    #[error("missing slot `{0}`")]
    MissingSlot(String),
    #[error("slot `{slot}` has non-native value `{value}`")]
    NonNative { slot: String, value: String },
}

#[derive(Debug, Clone)]
pub struct ScaleWord {
    pub singular: String,
    pub plural: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Hundred,
    Thousand,
    Lakh,
    Crore,
}

impl Scale {
    pub fn value(self) -> u64 {
        match self {
            Scale::Hundred => 100,
            Scale::Thousand => 1_000,
            Scale::Lakh => 100_000,
            Scale::Crore => 10_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpelloutTable {
    pub language: TargetLanguage,
    cardinals: Vec<String>,
    /// Adjectival "one" used before a scale word (एक लाख, ఒక లక్ష, ஒரு லட்சம்).
    pub one: String,
    scales: [ScaleWord; 4],
    months: Vec<String>,
    pub rupee: ScaleWord,
    pub paisa: ScaleWord,
    pub percent: String,
    pub point: String,
    letters: Vec<String>,
}

impl SpelloutTable {
    pub fn parse(language: TargetLanguage, source: &str) -> Result<Self, SpelloutTableError> {
        let mut slots: HashMap<&str, &str> = HashMap::new();
        for (idx, raw) in source.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('\t')
                .ok_or(SpelloutTableError::Syntax { line: idx + 1 })?;
            if v.trim().is_empty() {
                return Err(SpelloutTableError::Syntax { line: idx + 1 });
            }
            slots.insert(k.trim(), v.trim());
        }

        let script = language.script();
        let get = |slot: String| -> Result<String, SpelloutTableError> {
            let value = slots
                .get(slot.as_str())
                .ok_or_else(|| SpelloutTableError::MissingSlot(slot.clone()))?;
            let native = value
                .chars()
                .all(|c| c == ' ' || crate::script::ScriptClass::of_block(c) == script);
            if !native {
                return Err(SpelloutTableError::NonNative {
                    slot,
                    value: value.to_string(),
                });
            }
            Ok(value.to_string())
        };
        let pair = |base: &str| -> Result<ScaleWord, SpelloutTableError> {
            Ok(ScaleWord {
                singular: get(format!("{base}.singular"))?,
                plural: get(format!("{base}.plural"))?,
            })
        };

        Ok(SpelloutTable {
            language,
            cardinals: (0..100)
                .map(|n| get(format!("cardinal.{n}")))
                .collect::<Result<_, _>>()?,
            one: get("one".into())?,
            scales: [pair("hundred")?, pair("thousand")?, pair("lakh")?, pair("crore")?],
            months: (1..=12).map(|m| get(format!("month.{m}"))).collect::<Result<_, _>>()?,
            rupee: pair("rupee")?,
            paisa: pair("paisa")?,
            percent: get("percent".into())?,
            point: get("point".into())?,
            letters: ('A'..='Z')
                .map(|l| get(format!("letter.{l}")))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Words for 0..=99.
    pub fn small(&self, n: u64) -> &str {
        &self.cardinals[n as usize]
    }

    pub fn scale(&self, scale: Scale) -> &ScaleWord {
        let idx = match scale {
            Scale::Hundred => 0,
            Scale::Thousand => 1,
            Scale::Lakh => 2,
            Scale::Crore => 3,
        };
        &self.scales[idx]
    }

    /// Month name, `month` in 1..=12.
    pub fn month(&self, month: u32) -> &str {
        &self.months[month as usize - 1]
    }

    /// Name of an ASCII letter, either case.
    pub fn letter(&self, c: char) -> Option<&str> {
        c.is_ascii_alphabetic()
            .then(|| self.letters[(c.to_ascii_uppercase() as u8 - b'A') as usize].as_str())
    }
}

static TABLES: LazyLock<[SpelloutTable; 3]> = LazyLock::new(|| {
    let load = |lang: TargetLanguage, src: &str| {
        SpelloutTable::parse(lang, src).unwrap_or_else(|e| panic!("embedded {lang} spellout table: {e}"))
    };
    [
        load(TargetLanguage::Te, include_str!("../../data/spellout/te.tsv")),
        load(TargetLanguage::Ta, include_str!("../../data/spellout/ta.tsv")),
        load(TargetLanguage::Hi, include_str!("../../data/spellout/hi.tsv")),
    ]
});

pub fn table(lang: TargetLanguage) -> &'static SpelloutTable {
    let idx = match lang {
        TargetLanguage::Te => 0,
        TargetLanguage::Ta => 1,
        TargetLanguage::Hi => 2,
    };
    &TABLES[idx]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_complete() {
        for lang in TargetLanguage::ALL {
            let t = table(lang);
            assert_eq!(t.language, lang);
            assert_eq!(t.cardinals.len(), 100);
            assert_eq!(t.months.len(), 12);
            assert_eq!(t.letters.len(), 26);
        }
    }

    #[test]
    fn missing_slot_is_reported() {
        let err = SpelloutTable::parse(TargetLanguage::Hi, "cardinal.0\tशून्य\n").unwrap_err();
        assert_eq!(err, SpelloutTableError::MissingSlot("cardinal.1".into()));
    }

    #[test]
    fn non_native_value_is_rejected() {
        let mut src = include_str!("../../data/spellout/hi.tsv").to_string();
        src = src.replace("percent\tप्रतिशत", "percent\tpercent");
        assert!(matches!(
            SpelloutTable::parse(TargetLanguage::Hi, &src),
            Err(SpelloutTableError::NonNative { .. })
        ));
    }

    #[test]
    fn letters_any_case() {
        let te = table(TargetLanguage::Te);
        assert_eq!(te.letter('A'), Some("ఏ"));
        assert_eq!(te.letter('a'), Some("ఏ"));
        assert_eq!(te.letter('1'), None);
    }
}

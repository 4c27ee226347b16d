//! ISO-15919 romanisation of Brahmic runs and reassembly of mixed-script text.
//!
//! Transliteration is strictly orthographic: every consonant carries the
//! inherent `a` unless a vowel sign or virama follows, and no schwa deletion
//! is attempted (`कमल` becomes `kamala`). Output is NFC.

mod table;

use std::collections::BTreeSet;
use std::sync::LazyLock;

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::script::{is_joiner, segment, ScriptClass, ScriptRun};

pub use table::{Entry, EntryKind, TableError, TransliterationTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RomaniseError {
    #[error("run of class {0} is not Brahmic")]
    NonBrahmicRun(ScriptClass),
    #[error("no {script} table entry for U+{:04X}", *.codepoint as u32)]
    UnmappedCodepoint { codepoint: char, script: ScriptClass },
}

static TABLES: LazyLock<Vec<TransliterationTable>> = LazyLock::new(|| {
    ScriptClass::BRAHMIC
        .iter()
        .map(|&s| {
            let src = table::embedded_source(s).expect("brahmic script has a table");
            TransliterationTable::parse(s, src).unwrap_or_else(|e| panic!("embedded {s} table: {e}"))
        })
        .collect()
});

/// The embedded table for a Brahmic script.
pub fn table_for(script: ScriptClass) -> Option<&'static TransliterationTable> {
    TABLES.iter().find(|t| t.script() == script)
}

pub fn supported_scripts() -> BTreeSet<ScriptClass> {
    ScriptClass::BRAHMIC.into_iter().collect()
}

/// Romanise one Brahmic run.
pub fn transliterate_run(run: &ScriptRun) -> Result<String, RomaniseError> {
    let table = table_for(run.class).ok_or(RomaniseError::NonBrahmicRun(run.class))?;
    transliterate_with(table, &run.text)
}

pub(crate) fn transliterate_with(table: &TransliterationTable, text: &str) -> Result<String, RomaniseError> {
    let chars: Vec<char> = text.nfc().filter(|c| !is_joiner(*c)).collect();

    let mut units: Vec<&Entry> = Vec::with_capacity(chars.len());
    let mut i = 0;
    while i < chars.len() {
        if let Some(entry) = chars.get(i + 1).and_then(|&next| table.pair(chars[i], next)) {
            units.push(entry);
            i += 2;
            continue;
        }
        let entry = table.single(chars[i]).ok_or(RomaniseError::UnmappedCodepoint {
            codepoint: chars[i],
            script: table.script(),
        })?;
        units.push(entry);
        i += 1;
    }

    let mut out = String::with_capacity(text.len());
    for (idx, unit) in units.iter().enumerate() {
        out.push_str(&unit.latin);
        if unit.kind == EntryKind::Consonant {
            let follower = units[idx + 1..].iter().find(|u| u.kind != EntryKind::Modifier);
            if !matches!(follower.map(|u| u.kind), Some(EntryKind::VowelSign | EntryKind::Virama)) {
                out.push('a');
            }
        }
    }
    Ok(out.nfc().collect())
}

/// Romanise every Brahmic run of `text`, passing everything else through verbatim.
pub fn romanise(text: &str) -> Result<String, RomaniseError> {
    let mut out = String::with_capacity(text.len());
    for run in segment(text) {
        if run.class.is_brahmic() {
            out.push_str(&transliterate_run(&run)?);
        } else {
            out.push_str(&run.text);
        }
    }
    Ok(out)
}

/// Romanisation seam used by the planner.
pub trait Romanise: Send + Sync {
    fn romanise(&self, text: &str) -> Result<String, RomaniseError>;
}

/// The embedded-table romaniser.
#[derive(Debug, Default, Clone, Copy)]
pub struct IsoRomaniser;

impl Romanise for IsoRomaniser {
    fn romanise(&self, text: &str) -> Result<String, RomaniseError> {
        romanise(text)
    }
}

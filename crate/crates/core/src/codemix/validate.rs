use std::fmt;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::script::{is_brahmic, latin_runs};

/// The three output rules a transliteration must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// (a) native-script characters and word order kept verbatim
    PreservesNative,
    /// (b) no Latin word of two or more letters remains
    ReplacesLatin,
    /// (c) digits unchanged
    KeepsDigits,
}

impl Clause {
    pub fn letter(self) -> char {
        match self {
            Clause::PreservesNative => 'a',
            Clause::ReplacesLatin => 'b',
            Clause::KeepsDigits => 'c',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub clause: Clause,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.clause.letter(), self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, clause: Clause) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }
}

#[derive(Debug)]
enum Piece {
    Native(Vec<char>),
    /// where a Latin word stood; any native spelling may appear here
    Gap,
}

/// Native characters of `input`, split at every Latin word of two or more letters.
fn native_pattern(input: &str) -> Vec<Piece> {
    let mut pieces = Vec::new();
    let mut current = Vec::new();
    let words: Vec<_> = latin_runs(input)
        .into_iter()
        .filter(|(_, n)| *n >= 2)
        .map(|(r, _)| r)
        .collect();
    let mut words = words.iter().peekable();
    for (i, c) in input.char_indices() {
        if let Some(w) = words.peek() {
            if w.start == i {
                if !current.is_empty() {
                    pieces.push(Piece::Native(std::mem::take(&mut current)));
                }
                if !matches!(pieces.last(), Some(Piece::Gap)) {
                    pieces.push(Piece::Gap);
                }
            }
            if i + c.len_utf8() >= w.end {
                words.next();
            }
        }
        if is_brahmic(c) {
            current.push(c);
        }
    }
    if !current.is_empty() {
        pieces.push(Piece::Native(current));
    }
    pieces
}

fn find(haystack: &[char], needle: &[char], from: usize) -> Option<usize> {
    if needle.len() > haystack.len() {
        return None;
    }
    (from..=haystack.len() - needle.len()).find(|&i| haystack[i..i + needle.len()] == *needle)
}

/// Native text must appear in order, anchored at the ends, with new native
/// text allowed only where Latin words were.
fn native_preserved(pattern: &[Piece], output: &[char]) -> bool {
    let mut pos = 0;
    let last = pattern.len().saturating_sub(1);
    for (idx, piece) in pattern.iter().enumerate() {
        let Piece::Native(lit) = piece else { continue };
        let after_gap = idx > 0;
        let before_gap = idx < last;
        match (after_gap, before_gap) {
            (false, false) => return output == lit.as_slice(),
            (false, true) => {
                if !output.starts_with(lit) {
                    return false;
                }
                pos = lit.len();
            }
            (true, false) => {
                return output.len() >= pos + lit.len() && output.ends_with(lit);
            }
            (true, true) => match find(output, lit, pos) {
                Some(at) => pos = at + lit.len(),
                None => return false,
            },
        }
    }
    // pattern ended in a gap (or was empty)
    !pattern.is_empty() || output.is_empty()
}

fn ascii_digits(s: &str) -> String {
    s.chars().filter(char::is_ascii_digit).collect()
}

/// Check a transliteration against the three output rules.
pub fn validate_translit(input: &str, output: &str) -> Validation {
    let input: String = input.nfc().collect();
    let output: String = output.nfc().collect();
    let mut violations = Vec::new();

    let out_native: Vec<char> = output.chars().filter(|&c| is_brahmic(c)).collect();
    if !native_preserved(&native_pattern(&input), &out_native) {
        violations.push(Violation {
            clause: Clause::PreservesNative,
            detail: "native-script text was changed, dropped or reordered".into(),
        });
    }

    let leftover: Vec<&str> = latin_runs(&output)
        .into_iter()
        .filter(|(_, n)| *n >= 2)
        .map(|(r, _)| &output[r])
        .collect();
    if !leftover.is_empty() {
        violations.push(Violation {
            clause: Clause::ReplacesLatin,
            detail: format!("Latin words left untransliterated: {}", leftover.join(", ")),
        });
    }

    let (din, dout) = (ascii_digits(&input), ascii_digits(&output));
    if din != dout {
        violations.push(Violation {
            clause: Clause::KeepsDigits,
            detail: format!("digits changed from \"{din}\" to \"{dout}\""),
        });
    }

    Validation { violations }
}

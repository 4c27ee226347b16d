//! Number, currency, percentage, date and single-letter expansion into
//! native-script words.
//!
//! Patterns are matched left to right; at each position the first matching
//! rule wins, in this order: date, currency, percent, number (integer or
//! decimal), standalone Latin letter. Latin words of two or more letters are
//! copied untouched so code-mix detection sees the same words before and after.
//!
//! Cardinals use Indian grouping (hundred, thousand, lakh, crore) and cover
//! `0..=999_999_999`. Numbers outside that range are left as written and
//! reported as warnings.

pub mod spellout;

use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::TargetLanguage;
use crate::script::{is_brahmic, is_latin_combining, is_latin_letter};
use spellout::{table, Scale, SpelloutTable};

pub const MAX_CARDINAL: u64 = 999_999_999;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormaliseError {
    #[error("{what} {value} is out of range")]
    OutOfRange { what: &'static str, value: i64 },
}

fn out_of_range(what: &'static str, value: i64) -> NormaliseError {
    NormaliseError::OutOfRange { what, value }
}

/// Spell `n` as a native-script cardinal.
pub fn spell_cardinal(n: i64, lang: TargetLanguage) -> Result<String, NormaliseError> {
    if !(0..=MAX_CARDINAL as i64).contains(&n) {
        return Err(out_of_range("cardinal", n));
    }
    Ok(cardinal(table(lang), n as u64))
}

fn cardinal(t: &SpelloutTable, n: u64) -> String {
    if n < 100 {
        return t.small(n).to_string();
    }
    let mut words: Vec<String> = Vec::new();
    let mut rest = n;
    for scale in [Scale::Crore, Scale::Lakh, Scale::Thousand, Scale::Hundred] {
        let count = rest / scale.value();
        rest %= scale.value();
        if count == 0 {
            continue;
        }
        let unit = t.scale(scale);
        if count == 1 {
            words.push(format!("{} {}", t.one, unit.singular));
        } else {
            words.push(format!("{} {}", t.small(count), unit.plural));
        }
    }
    if rest > 0 {
        words.push(t.small(rest).to_string());
    }
    words.join(" ")
}

/// Years 1100..=1999 are read as "<nineteen> hundred <fifty>"; others as cardinals.
fn year(t: &SpelloutTable, y: u64) -> String {
    if (1100..=1999).contains(&y) {
        let hundreds = format!("{} {}", t.small(y / 100), t.scale(Scale::Hundred).plural);
        match y % 100 {
            0 => hundreds,
            r => format!("{hundreds} {}", t.small(r)),
        }
    } else {
        cardinal(t, y)
    }
}

pub fn spell_date(day: u32, month: u32, year_value: i64, lang: TargetLanguage) -> Result<String, NormaliseError> {
    if !(1..=31).contains(&day) {
        return Err(out_of_range("day", day as i64));
    }
    if !(1..=12).contains(&month) {
        return Err(out_of_range("month", month as i64));
    }
    if !(0..=MAX_CARDINAL as i64).contains(&year_value) {
        return Err(out_of_range("year", year_value));
    }
    let t = table(lang);
    Ok(format!(
        "{} {} {}",
        t.small(day as u64),
        t.month(month),
        year(t, year_value as u64)
    ))
}

fn digit_value(c: char) -> Option<u64> {
    if c.is_ascii_digit() {
        return Some(c as u64 - '0' as u64);
    }
    let cp = c as u32;
    [0x0966, 0x09E6, 0x0AE6, 0x0BE6, 0x0C66, 0x0CE6, 0x0D66]
        .iter()
        .find(|&&zero| (zero..zero + 10).contains(&cp))
        .map(|zero| (cp - zero) as u64)
}

fn is_digit(c: char) -> bool {
    digit_value(c).is_some()
}

const D: &str = r"[0-9\x{0966}-\x{096F}\x{09E6}-\x{09EF}\x{0AE6}-\x{0AEF}\x{0BE6}-\x{0BEF}\x{0C66}-\x{0C6F}\x{0CE6}-\x{0CEF}\x{0D66}-\x{0D6F}]";

fn number_pattern() -> String {
    format!("(?:{D}{{1,3}}(?:,{D}{{3}})+|{D}{{1,3}}(?:,{D}{{2}})*,{D}{{3}}|{D}+)")
}

static DATE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(&format!(
        r"^(?:({D}{{1,2}})/({D}{{1,2}})/({D}{{4}})|({D}{{1,2}})-({D}{{1,2}})-({D}{{4}}))"
    ))
    .unwrap()
});
static CURRENCY: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(&format!(r"^(?:₹ ?|Rs\.? ?)({})(?:\.({D}+))?", number_pattern())).unwrap());
static PERCENT: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(&format!(r"^({})(?:\.({D}+))? ?%", number_pattern())).unwrap());
static NUMBER: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(&format!(r"^({})(?:\.({D}+))?", number_pattern())).unwrap());

fn parse_digits(s: &str) -> Option<u64> {
    let mut n: u64 = 0;
    for c in s.chars().filter(|&c| c != ',') {
        n = n.checked_mul(10)?.checked_add(digit_value(c)?)?;
    }
    Some(n)
}

fn digits_one_by_one(t: &SpelloutTable, s: &str) -> String {
    s.chars()
        .filter_map(digit_value)
        .map(|d| t.small(d).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Integer words, or `None` when out of range. A leading zero means the
/// digits are read one at a time (`007`).
fn integer_words(t: &SpelloutTable, s: &str) -> Option<String> {
    let digits: Vec<char> = s.chars().filter(|&c| c != ',').collect();
    if digits.len() > 1 && digit_value(digits[0]) == Some(0) && !s.contains(',') {
        return Some(digits_one_by_one(t, s));
    }
    parse_digits(s).filter(|&n| n <= MAX_CARDINAL).map(|n| cardinal(t, n))
}

fn decimal_words(t: &SpelloutTable, int: &str, frac: Option<&str>) -> Option<String> {
    let whole = integer_words(t, int)?;
    Some(match frac {
        Some(f) => format!("{whole} {} {}", t.point, digits_one_by_one(t, f)),
        None => whole,
    })
}

fn rupee_words(t: &SpelloutTable, int: &str, frac: Option<&str>) -> Option<String> {
    let unit = |n: u64, w: &spellout::ScaleWord| if n == 1 { w.singular.clone() } else { w.plural.clone() };
    match frac {
        Some(f) if f.chars().count() <= 2 => {
            let rupees = parse_digits(int).filter(|&n| n <= MAX_CARDINAL)?;
            let mut paise = parse_digits(f)?;
            if f.chars().count() == 1 {
                paise *= 10;
            }
            let mut parts = Vec::new();
            if rupees > 0 || paise == 0 {
                parts.push(format!("{} {}", cardinal(t, rupees), unit(rupees, &t.rupee)));
            }
            if paise > 0 {
                parts.push(format!("{} {}", cardinal(t, paise), unit(paise, &t.paisa)));
            }
            Some(parts.join(" "))
        }
        Some(_) => Some(format!("{} {}", decimal_words(t, int, frac)?, t.rupee.plural)),
        None => {
            let rupees = parse_digits(int).filter(|&n| n <= MAX_CARDINAL)?;
            Some(format!("{} {}", integer_words(t, int)?, unit(rupees, &t.rupee)))
        }
    }
}

/// A number left as written because it exceeds the supported range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutOfRangeNumber {
    pub text: String,
    /// Byte offset into the input.
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Normalised {
    pub text: String,
    pub out_of_range: Vec<OutOfRangeNumber>,
}

struct Output {
    text: String,
    pad_next: bool,
}

impl Output {
    fn needs_space(c: Option<char>) -> bool {
        c.is_some_and(|c| {
            c.is_alphanumeric() || is_latin_combining(c) || (is_brahmic(c) && !matches!(c, '\u{0964}' | '\u{0965}'))
        })
    }

    fn replacement(&mut self, words: &str) {
        if Self::needs_space(self.text.chars().next_back()) {
            self.text.push(' ');
        }
        self.text.push_str(words);
        self.pad_next = true;
    }

    fn raw(&mut self, s: &str) {
        if self.pad_next && Self::needs_space(s.chars().next()) {
            self.text.push(' ');
        }
        self.pad_next = false;
        self.text.push_str(s);
    }
}

/// Expand numbers, currency, percentages, dates and single letters.
pub fn normalise(text: &str, lang: TargetLanguage) -> String {
    normalise_report(text, lang).text
}

/// [`normalise`] with a report of numbers left untouched.
pub fn normalise_report(text: &str, lang: TargetLanguage) -> Normalised {
    let t = table(lang);
    let mut out = Output {
        text: String::with_capacity(text.len() * 2),
        pad_next: false,
    };
    let mut warnings = Vec::new();
    let mut pos = 0;

    while pos < text.len() {
        let rest = &text[pos..];
        let c = rest.chars().next().expect("non-empty");

        if is_digit(c) {
            if let Some((len, words)) = match_date(t, rest) {
                out.replacement(&words);
                pos += len;
                continue;
            }
            if let Some(caps) = PERCENT.captures(rest) {
                let len = caps[0].len();
                match decimal_words(t, &caps[1], caps.get(2).map(|m| m.as_str())) {
                    Some(words) => out.replacement(&format!("{words} {}", t.percent)),
                    None => {
                        warnings.push(OutOfRangeNumber {
                            text: caps[0].to_string(),
                            offset: pos,
                        });
                        out.raw(&caps[0]);
                    }
                }
                pos += len;
                continue;
            }
            let caps = NUMBER.captures(rest).expect("a digit always matches");
            let len = caps[0].len();
            match decimal_words(t, &caps[1], caps.get(2).map(|m| m.as_str())) {
                Some(words) => out.replacement(&words),
                None => {
                    warnings.push(OutOfRangeNumber {
                        text: caps[0].to_string(),
                        offset: pos,
                    });
                    out.raw(&caps[0]);
                }
            }
            pos += len;
            continue;
        }

        if c == '₹' || c == 'R' {
            if let Some(caps) = CURRENCY.captures(rest) {
                let len = caps[0].len();
                match rupee_words(t, &caps[1], caps.get(2).map(|m| m.as_str())) {
                    Some(words) => out.replacement(&words),
                    None => {
                        warnings.push(OutOfRangeNumber {
                            text: caps[0].to_string(),
                            offset: pos,
                        });
                        out.raw(&caps[0]);
                    }
                }
                pos += len;
                continue;
            }
        }

        if is_latin_letter(c) {
            let word_len = rest
                .char_indices()
                .find(|&(_, ch)| !(is_latin_letter(ch) || is_latin_combining(ch)))
                .map_or(rest.len(), |(i, _)| i);
            let word = &rest[..word_len];
            match t.letter(c) {
                Some(name) if word.len() == 1 => out.replacement(name),
                _ => out.raw(word),
            }
            pos += word_len;
            continue;
        }

        out.raw(&rest[..c.len_utf8()]);
        pos += c.len_utf8();
    }

    Normalised {
        text: out.text,
        out_of_range: warnings,
    }
}

fn match_date(t: &SpelloutTable, rest: &str) -> Option<(usize, String)> {
    let caps = DATE.captures(rest)?;
    let len = caps[0].len();
    if rest[len..].chars().next().is_some_and(is_digit) {
        return None;
    }
    let group = |a: usize, b: usize| caps.get(a).or_else(|| caps.get(b)).map(|m| m.as_str());
    let day = parse_digits(group(1, 4)?)? as u32;
    let month = parse_digits(group(2, 5)?)? as u32;
    let year_value = parse_digits(group(3, 6)?)?;
    if !(1..=31).contains(&day) || !(1..=12).contains(&month) {
        return None;
    }
    Some((
        len,
        format!("{} {} {}", t.small(day as u64), t.month(month), year(t, year_value)),
    ))
}

/// Normalisation seam used by the planner.
pub trait Normalise: Send + Sync {
    fn normalise(&self, text: &str, lang: TargetLanguage) -> Normalised;
}

#[derive(Debug, Default, Clone, Copy)]
pub struct IndicNormaliser;

impl Normalise for IndicNormaliser {
    fn normalise(&self, text: &str, lang: TargetLanguage) -> Normalised {
        normalise_report(text, lang)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TargetLanguage::*;

    #[test]
    fn cardinal_examples() {
        assert_eq!(spell_cardinal(0, Hi).unwrap(), "शून्य");
        assert_eq!(spell_cardinal(3, Te).unwrap(), "మూడు");
        assert_eq!(spell_cardinal(100_000, Hi).unwrap(), "एक लाख");
        assert_eq!(spell_cardinal(2_000, Hi).unwrap(), "दो हज़ार");
    }

    #[test]
    fn cardinal_range() {
        assert!(spell_cardinal(MAX_CARDINAL as i64, Ta).is_ok());
        assert_eq!(
            spell_cardinal(1_000_000_000, Ta),
            Err(NormaliseError::OutOfRange {
                what: "cardinal",
                value: 1_000_000_000
            })
        );
        assert!(spell_cardinal(-1, Ta).is_err());
    }

    #[test]
    fn date_examples() {
        assert_eq!(spell_date(26, 1, 1950, Hi).unwrap(), "छब्बीस जनवरी उन्नीस सौ पचास");
        assert_eq!(spell_date(1, 1, 2000, Hi).unwrap(), "एक जनवरी दो हज़ार");
        assert_eq!(
            spell_date(32, 1, 2000, Hi),
            Err(NormaliseError::OutOfRange { what: "day", value: 32 })
        );
        assert!(spell_date(1, 13, 2000, Hi).is_err());
    }

    #[test]
    fn normalise_examples() {
        assert_eq!(normalise("₹50 दो", Hi), "पचास रुपये दो");
        assert_eq!(normalise("hello", Hi), "hello");
        assert_eq!(normalise("విటమిన్ A", Te), "విటమిన్ ఏ");
    }

    #[test]
    fn rs_without_digits_is_not_currency() {
        assert_eq!(normalise("Rs", Hi), "Rs");
        assert_eq!(normalise("Rs. only", Hi), "Rs. only");
    }

    #[test]
    fn out_of_range_passes_through_with_warning() {
        let n = normalise_report("कुल 1234567890 लोग", Hi);
        assert_eq!(n.text, "कुल 1234567890 लोग");
        assert_eq!(
            n.out_of_range,
            vec![OutOfRangeNumber {
                text: "1234567890".into(),
                offset: "कुल ".len()
            }]
        );
    }

    #[test]
    fn replacement_is_separated_from_adjacent_letters() {
        assert_eq!(normalise("4G", Hi), "चार जी");
        assert_eq!(normalise("₹50दो", Hi), "पचास रुपये दो");
    }

    #[test]
    fn latin_words_with_diacritics_are_words() {
        assert_eq!(normalise("kiyā a", Hi), "kiyā ए");
    }

    #[test]
    fn native_digits() {
        assert_eq!(normalise("௧௨", Ta), "பன்னிரண்டு");
        assert_eq!(normalise("౩", Te), "మూడు");
    }

    #[test]
    fn long_paise_fraction_read_as_decimal() {
        assert_eq!(normalise("₹1.125", Hi), "एक दशमलव एक दो पाँच रुपये");
    }
}

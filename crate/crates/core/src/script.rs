//! Script classification by Unicode block and maximal single-script segmentation.

use std::fmt;

use serde::{Deserialize, Serialize};

const ZWNJ: char = '\u{200C}';
const ZWJ: char = '\u{200D}';

/// The seven Brahmic scripts handled by the romaniser, plus everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScriptClass {
    Devanagari,
    Bengali,
    Gujarati,
    Tamil,
    Telugu,
    Kannada,
    Malayalam,
    PassThrough,
}

impl ScriptClass {
    /// Brahmic classes in block order.
    pub const BRAHMIC: [ScriptClass; 7] = [
        ScriptClass::Devanagari,
        ScriptClass::Bengali,
        ScriptClass::Gujarati,
        ScriptClass::Tamil,
        ScriptClass::Telugu,
        ScriptClass::Kannada,
        ScriptClass::Malayalam,
    ];

    /// Class of the Unicode block containing `c`. Joiners are `PassThrough` here;
    /// use [`classify_char`] when the inherit sentinel matters.
    pub fn of_block(c: char) -> ScriptClass {
        match c as u32 {
            0x0900..=0x097F => ScriptClass::Devanagari,
            0x0980..=0x09FF => ScriptClass::Bengali,
            0x0A80..=0x0AFF => ScriptClass::Gujarati,
            0x0B80..=0x0BFF => ScriptClass::Tamil,
            0x0C00..=0x0C7F => ScriptClass::Telugu,
            0x0C80..=0x0CFF => ScriptClass::Kannada,
            0x0D00..=0x0D7F => ScriptClass::Malayalam,
            _ => ScriptClass::PassThrough,
        }
    }

    /// First codepoint of the script's block.
    pub fn block_start(self) -> Option<u32> {
        match self {
            ScriptClass::Devanagari => Some(0x0900),
            ScriptClass::Bengali => Some(0x0980),
            ScriptClass::Gujarati => Some(0x0A80),
            ScriptClass::Tamil => Some(0x0B80),
            ScriptClass::Telugu => Some(0x0C00),
            ScriptClass::Kannada => Some(0x0C80),
            ScriptClass::Malayalam => Some(0x0D00),
            ScriptClass::PassThrough => None,
        }
    }

    pub fn is_brahmic(self) -> bool {
        self != ScriptClass::PassThrough
    }

    pub fn name(self) -> &'static str {
        match self {
            ScriptClass::Devanagari => "devanagari",
            ScriptClass::Bengali => "bengali",
            ScriptClass::Gujarati => "gujarati",
            ScriptClass::Tamil => "tamil",
            ScriptClass::Telugu => "telugu",
            ScriptClass::Kannada => "kannada",
            ScriptClass::Malayalam => "malayalam",
            ScriptClass::PassThrough => "pass_through",
        }
    }
}

impl fmt::Display for ScriptClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of classifying a single codepoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharClass {
    Script(ScriptClass),
    /// ZWJ / ZWNJ: takes the class of the surrounding text.
    Inherit,
}

impl CharClass {
    pub fn script(self) -> Option<ScriptClass> {
        match self {
            CharClass::Script(s) => Some(s),
            CharClass::Inherit => None,
        }
    }
}

pub fn is_joiner(c: char) -> bool {
    c == ZWJ || c == ZWNJ
}

pub fn classify_char(c: char) -> CharClass {
    if is_joiner(c) {
        CharClass::Inherit
    } else {
        CharClass::Script(ScriptClass::of_block(c))
    }
}

/// `true` when `c` lies in one of the seven Brahmic blocks.
pub fn is_brahmic(c: char) -> bool {
    ScriptClass::of_block(c).is_brahmic()
}

/// A maximal single-class span of the source text. Offsets count Unicode scalar values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScriptRun {
    pub text: String,
    pub class: ScriptClass,
    pub start: usize,
    pub end: usize,
}

impl ScriptRun {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

/// Partition `text` into maximal runs of one [`ScriptClass`].
///
/// Joiners take the class of the nearest preceding non-joiner (which covers
/// both the "flanked by the same class" and "attach to the preceding run"
/// cases); leading joiners take the class of the following non-joiner.
pub fn segment(text: &str) -> Vec<ScriptRun> {
    let chars: Vec<char> = text.chars().collect();
    let raw: Vec<Option<ScriptClass>> = chars.iter().map(|&c| classify_char(c).script()).collect();

    let mut resolved = Vec::with_capacity(chars.len());
    let mut prev: Option<ScriptClass> = None;
    for (i, class) in raw.iter().enumerate() {
        let class = match class {
            Some(c) => {
                prev = Some(*c);
                *c
            }
            None => prev
                .or_else(|| raw[i + 1..].iter().find_map(|c| *c))
                .unwrap_or(ScriptClass::PassThrough),
        };
        resolved.push(class);
    }

    let mut runs: Vec<ScriptRun> = Vec::new();
    for (i, (&c, &class)) in chars.iter().zip(&resolved).enumerate() {
        match runs.last_mut() {
            Some(run) if run.class == class => {
                run.text.push(c);
                run.end = i + 1;
            }
            _ => runs.push(ScriptRun {
                text: c.to_string(),
                class,
                start: i,
                end: i + 1,
            }),
        }
    }
    runs
}

/// Latin letters for code-mix purposes: ASCII letters and the precomposed
/// Latin ranges (Latin-1 letters, Extended-A/B, Extended Additional).
pub fn is_latin_letter(c: char) -> bool {
    match c as u32 {
        0x41..=0x5A | 0x61..=0x7A => true,
        0xC0..=0x24F => c.is_alphabetic(),
        0x1E00..=0x1EFF => true,
        _ => false,
    }
}

/// Combining diacritics that continue a Latin word without ending it.
pub(crate) fn is_latin_combining(c: char) -> bool {
    matches!(c as u32, 0x0300..=0x036F)
}

/// Byte ranges and letter counts of maximal Latin-letter runs in `text`.
/// Combining diacritics extend a run but are not counted as letters.
pub fn latin_runs(text: &str) -> Vec<(std::ops::Range<usize>, usize)> {
    let mut out = Vec::new();
    let mut current: Option<(usize, usize, usize)> = None;
    for (i, c) in text.char_indices() {
        let end = i + c.len_utf8();
        if is_latin_letter(c) {
            current = Some(match current {
                Some((s, _, n)) => (s, end, n + 1),
                None => (i, end, 1),
            });
        } else if is_latin_combining(c) && current.is_some() {
            if let Some((s, _, n)) = current {
                current = Some((s, end, n));
            }
        } else if let Some((s, e, n)) = current.take() {
            out.push((s..e, n));
        }
    }
    if let Some((s, e, n)) = current {
        out.push((s..e, n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes(runs: &[ScriptRun]) -> Vec<ScriptClass> {
        runs.iter().map(|r| r.class).collect()
    }

    #[test]
    fn classify_block_edges() {
        assert_eq!(classify_char('\u{0C28}'), CharClass::Script(ScriptClass::Telugu));
        assert_eq!(classify_char('A'), CharClass::Script(ScriptClass::PassThrough));
        assert_eq!(classify_char('\u{0B95}'), CharClass::Script(ScriptClass::Tamil));
        assert_eq!(classify_char('\u{0900}'), CharClass::Script(ScriptClass::Devanagari));
        assert_eq!(classify_char('\u{0D7F}'), CharClass::Script(ScriptClass::Malayalam));
        // Gurmukhi and Odia sit between listed blocks.
        assert_eq!(classify_char('\u{0A15}'), CharClass::Script(ScriptClass::PassThrough));
        assert_eq!(classify_char('\u{0B15}'), CharClass::Script(ScriptClass::PassThrough));
        assert_eq!(classify_char('\u{1CD0}'), CharClass::Script(ScriptClass::PassThrough));
        assert_eq!(classify_char(ZWJ), CharClass::Inherit);
        assert_eq!(classify_char(ZWNJ), CharClass::Inherit);
    }

    #[test]
    fn segment_worked_example_prefix() {
        let runs = segment("మా CEO");
        assert_eq!(runs.len(), 2);
        assert_eq!(runs[0].text, "మా");
        assert_eq!(runs[0].class, ScriptClass::Telugu);
        assert_eq!((runs[0].start, runs[0].end), (0, 2));
        assert_eq!(runs[1].text, " CEO");
        assert_eq!(runs[1].class, ScriptClass::PassThrough);
        assert_eq!((runs[1].start, runs[1].end), (2, 6));
    }

    #[test]
    fn segment_empty() {
        assert!(segment("").is_empty());
    }

    #[test]
    fn segment_three_scripts() {
        let runs = segment("नमस्ते, hello ௧");
        assert_eq!(
            classes(&runs),
            vec![ScriptClass::Devanagari, ScriptClass::PassThrough, ScriptClass::Tamil]
        );
        assert_eq!(runs[0].text, "नमस्ते");
        assert_eq!(runs[1].text, ", hello ");
        assert_eq!(runs[2].text, "௧");
    }

    #[test]
    fn joiner_inside_cluster_stays_in_run() {
        // क्‍ष with ZWJ after the virama
        let runs = segment("क्\u{200D}ष");
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].class, ScriptClass::Devanagari);
    }

    #[test]
    fn joiner_between_classes_attaches_to_preceding_run() {
        let runs = segment("क\u{200C}a");
        assert_eq!(runs.len(), 2);
        assert_eq!(runs[0].text, "क\u{200C}");
        assert_eq!(runs[1].text, "a");
    }

    #[test]
    fn leading_joiner_takes_following_class() {
        let runs = segment("\u{200D}క");
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].class, ScriptClass::Telugu);
        let only = segment("\u{200D}");
        assert_eq!(only[0].class, ScriptClass::PassThrough);
    }

    #[test]
    fn latin_runs_count_letters() {
        let runs = latin_runs("मैंने WhatsApp पे A 20 kiyā");
        let counts: Vec<usize> = runs.iter().map(|(_, n)| *n).collect();
        assert_eq!(counts, vec![8, 1, 4]);
    }
}

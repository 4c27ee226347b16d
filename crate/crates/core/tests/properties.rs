use indic_frontend::codemix::detect_codemix;
use indic_frontend::language::TargetLanguage;
use indic_frontend::normalise::{normalise, MAX_CARDINAL};
use indic_frontend::romanise::{romanise, table_for};
use indic_frontend::script::{classify_char, is_brahmic, is_joiner, latin_runs, segment, ScriptClass};
use proptest::prelude::*;

const BLOCKS: [(ScriptClass, unicode_blocks::UnicodeBlock); 7] = [
    (ScriptClass::Devanagari, unicode_blocks::DEVANAGARI),
    (ScriptClass::Bengali, unicode_blocks::BENGALI),
    (ScriptClass::Gujarati, unicode_blocks::GUJARATI),
    (ScriptClass::Tamil, unicode_blocks::TAMIL),
    (ScriptClass::Telugu, unicode_blocks::TELUGU),
    (ScriptClass::Kannada, unicode_blocks::KANNADA),
    (ScriptClass::Malayalam, unicode_blocks::MALAYALAM),
];

#[test]
fn block_table_agrees_with_unicode_blocks() {
    for cp in 0..=0x10FFFFu32 {
        let Some(c) = char::from_u32(cp) else { continue };
        let expected = BLOCKS
            .iter()
            .find(|(_, b)| b.contains(c))
            .map(|(s, _)| *s)
            .unwrap_or(ScriptClass::PassThrough);
        assert_eq!(ScriptClass::of_block(c), expected, "U+{cp:04X}");
    }
}

fn any_block_char() -> impl Strategy<Value = char> {
    prop_oneof![
        4 => (0usize..7, 0u32..0x80).prop_filter_map("unassigned", |(i, off)| {
            char::from_u32(BLOCKS[i].1.start() + off)
        }),
        2 => proptest::char::range('a', 'z'),
        1 => proptest::char::range('0', '9'),
        1 => prop::sample::select(vec![' ', '.', ',', '!', '?', '-', '\u{200C}', '\u{200D}', '€', 'é']),
    ]
}

fn mapped_char() -> impl Strategy<Value = char> {
    let pool: Vec<char> = ScriptClass::BRAHMIC
        .iter()
        .flat_map(|&s| table_for(s).unwrap().singles().map(|(c, _)| c).collect::<Vec<_>>())
        .collect();
    prop_oneof![
        4 => prop::sample::select(pool),
        1 => prop::sample::select(vec![' ', 'a', 'Z', '7', '\u{200C}', '\u{200D}', '.']),
    ]
}

/// Pieces the normaliser must leave alone or fully expand. "Rs" is left
/// out: it is consumed as a currency prefix when a number follows.
fn normaliser_token() -> impl Strategy<Value = String> {
    prop_oneof![
        (0..=MAX_CARDINAL).prop_map(|n| n.to_string()),
        (0u64..100_000).prop_map(|n| n.to_string()),
        (0u64..1000, 0u32..100).prop_map(|(a, b)| format!("{a}.{b}")),
        (1u32..=28, 1u32..=12, 1100u32..2100).prop_map(|(d, m, y)| format!("{d}/{m}/{y}")),
        (0u64..100_000).prop_map(|n| format!("₹{n}")),
        (0u32..101).prop_map(|n| format!("{n}%")),
        "[a-zA-Z]{2,8}".prop_filter("currency prefix", |w| !w.eq_ignore_ascii_case("rs")),
        "[A-Z]",
        prop::sample::select(vec!["नमस्ते", "నేను", "நான்", ",", ".", "!"]).prop_map(str::to_string),
    ]
}

fn numeric_text() -> impl Strategy<Value = String> {
    prop::collection::vec(normaliser_token(), 1..8).prop_map(|v| v.join(" "))
}

fn latin_words(s: &str) -> Vec<&str> {
    latin_runs(s)
        .into_iter()
        .filter(|(_, n)| *n >= 2)
        .map(|(r, _)| &s[r])
        .collect()
}

proptest! {
    #[test]
    fn segment_is_lossless_maximal_and_pure(chars in prop::collection::vec(any_block_char(), 0..60)) {
        let text: String = chars.into_iter().collect();
        let runs = segment(&text);
        prop_assert_eq!(runs.iter().map(|r| r.text.as_str()).collect::<String>(), text.clone());
        for pair in runs.windows(2) {
            prop_assert_ne!(pair[0].class, pair[1].class);
            prop_assert_eq!(pair[0].end, pair[1].start);
        }
        for run in &runs {
            prop_assert!(!run.is_empty());
            for c in run.text.chars().filter(|&c| !is_joiner(c)) {
                prop_assert_eq!(classify_char(c).script(), Some(run.class));
            }
        }
    }

    #[test]
    fn romanise_is_brahmic_free_and_idempotent(chars in prop::collection::vec(mapped_char(), 0..40)) {
        let text: String = chars.into_iter().collect();
        let once = romanise(&text).unwrap();
        prop_assert!(!once.chars().any(is_brahmic), "{once}");
        prop_assert_eq!(romanise(&once).unwrap(), once);
    }

    #[test]
    fn normaliser_properties(text in numeric_text(), lang in prop::sample::select(TargetLanguage::ALL.to_vec())) {
        let once = normalise(&text, lang);
        prop_assert!(!once.chars().any(|c| c.is_ascii_digit()), "{text} -> {once}");
        prop_assert_eq!(normalise(&once, lang), once.clone());
        prop_assert_eq!(latin_words(&once), latin_words(&text));
        prop_assert_eq!(detect_codemix(&once), detect_codemix(&text));
    }
}

//! Frozen normaliser cases (100 per language) from `tests/oracle/normalise_cases.py`,
//! plus exhaustive injectivity of the cardinal spell-out.

use std::collections::HashSet;

use indic_frontend::language::TargetLanguage;
use indic_frontend::normalise::{normalise, spell_cardinal};

fn check(lang: TargetLanguage, data: &str) {
    let mut failures = Vec::new();
    let mut count = 0;
    for line in data.lines().filter(|l| !l.is_empty()) {
        let (input, expected) = line.split_once('\t').unwrap();
        let got = normalise(input, lang);
        if got != expected {
            failures.push(format!("{input:?}: expected {expected:?}, got {got:?}"));
        }
        count += 1;
    }
    assert_eq!(count, 100);
    assert!(
        failures.is_empty(),
        "{lang}: {} mismatches\n{}",
        failures.len(),
        failures.join("\n")
    );
}

#[test]
fn hindi_cases() {
    check(TargetLanguage::Hi, include_str!("data/normalise/hi.tsv"));
}

#[test]
fn telugu_cases() {
    check(TargetLanguage::Te, include_str!("data/normalise/te.tsv"));
}

#[test]
fn tamil_cases() {
    check(TargetLanguage::Ta, include_str!("data/normalise/ta.tsv"));
}

#[test]
fn cardinal_is_injective_below_ten_thousand() {
    for lang in TargetLanguage::ALL {
        let mut seen = HashSet::new();
        for n in 0..10_000 {
            assert!(
                seen.insert(spell_cardinal(n, lang).unwrap()),
                "{lang}: duplicate at {n}"
            );
        }
    }
}

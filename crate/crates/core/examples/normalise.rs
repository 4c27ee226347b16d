//! Expand numbers, currency, percentages, dates and single letters.
//!
//!     cargo run --example normalise -- te "నాకు 3 పుస్తకాలు"

use indic_frontend::language::TargetLanguage;
use indic_frontend::normalise::normalise_report;

fn main() {
    let mut args = std::env::args().skip(1);
    let samples: Vec<(TargetLanguage, String)> = match (args.next(), args.next()) {
        (Some(lang), Some(text)) => vec![(lang.parse().expect("te, ta or hi"), text)],
        _ => vec![
            (TargetLanguage::Hi, "मुझे ₹1,25,000 और 4G चाहिए, 15/08/1947 को".into()),
            (TargetLanguage::Te, "విటమిన్ A 20% తగ్గింపు".into()),
            (TargetLanguage::Ta, "1000000 பேர், 3.5 கிலோ".into()),
            (TargetLanguage::Hi, "1234567890 बहुत बड़ा है".into()),
        ],
    };
    for (lang, text) in samples {
        let report = normalise_report(&text, lang);
        println!("[{lang}] {text}\n     -> {}", report.text);
        for n in report.out_of_range {
            println!("     left as written (out of range): {} at byte {}", n.text, n.offset);
        }
    }
}

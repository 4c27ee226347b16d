//! ISO-15919 romanisation; Latin, digits and punctuation pass through.
//!
//!     cargo run --example romanise -- "నేను ఇవాళ బాగున్నాను"

use indic_frontend::romanise::romanise;

fn main() {
    let inputs: Vec<String> = match std::env::args().nth(1) {
        Some(arg) => vec![arg],
        None => [
            "మా CEO ఈ quarter కి మంచి presentation ఇచ్చారు",
            "தமிழ் மொழி",
            "कमल",
            "ಕನ್ನಡ",
            "അവൻ",
        ]
        .map(String::from)
        .to_vec(),
    };
    for text in inputs {
        match romanise(&text) {
            Ok(out) => println!("{text}\n  -> {out}"),
            Err(e) => eprintln!("{text}: {e}"),
        }
    }
}

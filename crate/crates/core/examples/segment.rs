//! Split mixed-script text into script runs.
//!
//!     cargo run --example segment -- "मैंने WhatsApp पे message किया"

use indic_frontend::script::segment;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "మా CEO ఈ quarter కి మంచి presentation ఇచ్చారు".into());
    for run in segment(&text) {
        println!("{:>3}..{:<3} {:<12} \"{}\"", run.start, run.end, run.class, run.text);
    }
}

//! Drive the command-line entry point in-process over a small JSON-lines batch.
//!
//!     cargo run --example batch

use indic_frontend::cli::run_cli;

const RECORDS: &str = r#"{"id":"1","text":"నేను బాగున్నాను","voice_prompt_path":"te.wav","voice_prompt_duration":9}
{"id":"2","text":"मैंने WhatsApp पे message किया"}
{"id":"3","text":"नमस्ते","voice_prompt_path":"hi.wav","voice_prompt_duration":6}
"#;

fn main() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(
        ["indic-frontend", "batch", "--stable"],
        &mut RECORDS.as_bytes(),
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    println!("exit code {code}");
}

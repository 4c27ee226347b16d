//! Route inputs to a branch and print the resulting synthesis plans.
//!
//!     cargo run --example plan

use std::sync::Arc;

use indic_frontend::codemix::{OfflineDictionaryProvider, TranslitCache, Transliterator};
use indic_frontend::normalise::IndicNormaliser;
use indic_frontend::romanise::IsoRomaniser;
use indic_frontend::router::{build_plan, PlanDeps, PlanRequest, PresetName, PromptLanguage, VoicePrompt};

fn main() {
    let t = Transliterator::new(
        Arc::new(OfflineDictionaryProvider::builtin()),
        Arc::new(TranslitCache::in_memory()),
    );
    let deps = PlanDeps {
        normaliser: &IndicNormaliser,
        romaniser: &IsoRomaniser,
        transliterator: Some(&t),
    };
    let te_clip = VoicePrompt::new("refs/te-female-9s.wav", 9.0, PromptLanguage::Te).unwrap();
    let hi_clip = VoicePrompt::new("refs/hi-female-10s.wav", 10.0, PromptLanguage::Hi).unwrap();

    let requests = [
        PlanRequest::new("నేను బాగున్నాను").voice_prompt(te_clip.clone()),
        PlanRequest::new("नमस्ते दुनिया")
            .voice_prompt(hi_clip.clone())
            .preset(PresetName::Default),
        PlanRequest::new("मैंने WhatsApp पे message किया"),
        // cross-language clip: accepted with a warning
        PlanRequest::new("நான் நலம்").voice_prompt(hi_clip),
        // strict mode: Chatterbox branches need a clip
        PlanRequest::new("నేను"),
    ];
    for req in &requests {
        match build_plan(req, deps) {
            Ok(plan) => println!("{}\n", serde_json::to_string_pretty(&plan).unwrap()),
            Err(e) => println!("{:?}: error {} ({e})\n", req.text, e.code()),
        }
    }
}

//! Detect code-mix, transliterate with the offline dictionary, and check the
//! result against the output rules. A second call is served from the cache.
//!
//!     cargo run --example codemix

use std::sync::Arc;

use indic_frontend::codemix::{
    cache_key, detect_codemix, validate_translit, OfflineDictionaryProvider, TranslitCache, TranslitRequest,
    Transliterator,
};
use indic_frontend::language::TargetLanguage;

fn main() {
    let text = "मैंने WhatsApp पे message किया but notification नहीं आया";
    println!("code-mix: {}", detect_codemix(text));
    println!("cache key: {}", cache_key(text));

    let provider = Arc::new(OfflineDictionaryProvider::builtin());
    let t = Transliterator::new(provider.clone(), Arc::new(TranslitCache::in_memory()));
    let req = TranslitRequest::new(text, TargetLanguage::Hi);
    for _ in 0..2 {
        let out = t.run(&req).expect("dictionary covers the sentence");
        println!("{:?}: {}", out.source, out.output);
    }
    println!("provider calls: {}", provider.calls());

    let broken = "मैंने व्हाट्सऐप पे message किया";
    for v in validate_translit("मैंने WhatsApp पे message किया", broken).violations {
        println!("rejected \"{broken}\": {v}");
    }
}

//! JSON-lines batch planning. One result line per input line, in input order;
//! a bad record yields an error object and never stops the batch.

use std::collections::HashSet;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{deps, make_voice_prompt, EXIT_OK, EXIT_PROVIDER, EXIT_RECORD_ERROR};
use crate::codemix::Transliterator;
use crate::language::TargetLanguage;
use crate::router::{build_plan, PlanRequest, PresetName, SynthesisPlan};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchRecord {
    pub id: String,
    pub text: String,
    #[serde(default)]
    pub lang: Option<TargetLanguage>,
    #[serde(default)]
    pub voice_prompt_path: Option<PathBuf>,
    #[serde(default)]
    pub voice_prompt_duration: Option<f64>,
    #[serde(default)]
    pub voice_prompt_lang: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordError {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchResult {
    /// `null` when the line could not be parsed far enough to find one.
    pub id: Option<String>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub plan: Option<SynthesisPlan>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<RecordError>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub processed_at: Option<String>,
}

pub(super) struct BatchOptions {
    pub preset: PresetName,
    pub strict: bool,
    pub force_lora: bool,
    pub stable: bool,
    pub jobs: usize,
}

pub(super) struct BatchReport {
    pub output: String,
    pub total: usize,
    pub failed: usize,
    pub provider_failures: usize,
}

impl BatchReport {
    pub fn exit_code(&self) -> i32 {
        if self.provider_failures > 0 {
            EXIT_PROVIDER
        } else if self.failed > 0 {
            EXIT_RECORD_ERROR
        } else {
            EXIT_OK
        }
    }
}

enum Parsed {
    Record(BatchRecord),
    Bad { id: Option<String>, error: RecordError },
}

fn error(code: &str, message: impl ToString) -> RecordError {
    RecordError {
        code: code.into(),
        message: message.to_string(),
    }
}

fn parse_lines(source: &str) -> Vec<Parsed> {
    let mut seen = HashSet::new();
    source
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(idx, line)| {
            let record: BatchRecord = match serde_json::from_str(line) {
                Ok(r) => r,
                Err(e) => {
                    // salvage the id for the error line if there is one
                    let id = serde_json::from_str::<serde_json::Value>(line)
                        .ok()
                        .and_then(|v| v.get("id").and_then(|i| i.as_str()).map(str::to_string));
                    return Parsed::Bad {
                        id,
                        error: error("invalid_record", format!("line {}: {e}", idx + 1)),
                    };
                }
            };
            if !seen.insert(record.id.clone()) {
                return Parsed::Bad {
                    id: Some(record.id.clone()),
                    error: error(
                        "duplicate_id",
                        format!("line {}: id `{}` already used", idx + 1, record.id),
                    ),
                };
            }
            if record.text.is_empty() {
                return Parsed::Bad {
                    id: Some(record.id),
                    error: error("empty_text", format!("line {}: text is empty", idx + 1)),
                };
            }
            Parsed::Record(record)
        })
        .collect()
}

/// Plan one record; the bool marks provider failures.
fn plan_record(
    record: &BatchRecord,
    options: &BatchOptions,
    t: &Transliterator,
) -> (Result<SynthesisPlan, RecordError>, bool) {
    let vp = match make_voice_prompt(
        record.voice_prompt_path.as_deref(),
        record.voice_prompt_duration,
        record.voice_prompt_lang.as_deref(),
        &record.text,
        record.lang,
    ) {
        Ok(vp) => vp,
        Err((code, message)) => return (Err(error(code, message)), false),
    };
    let mut req = PlanRequest::new(record.text.clone())
        .preset(options.preset)
        .strict(options.strict)
        .force_lora(options.force_lora);
    req.lang = record.lang;
    req.voice_prompt = vp;
    match build_plan(&req, deps(t)) {
        Ok(plan) => (Ok(plan), false),
        Err(e) => (Err(error(e.code(), &e)), e.is_provider_failure()),
    }
}

pub(super) fn run_batch(source: &str, options: &BatchOptions, t: &Transliterator) -> BatchReport {
    let parsed = parse_lines(source);
    let work = |p: &Parsed| -> (BatchResult, bool) {
        let (id, outcome, provider) = match p {
            Parsed::Bad { id, error } => (id.clone(), Err(error.clone()), false),
            Parsed::Record(r) => {
                let (outcome, provider) = plan_record(r, options, t);
                (Some(r.id.clone()), outcome, provider)
            }
        };
        let processed_at = (!options.stable).then(|| chrono::Utc::now().to_rfc3339());
        let result = match outcome {
            Ok(plan) => BatchResult {
                id,
                ok: true,
                plan: Some(plan),
                error: None,
                processed_at,
            },
            Err(error) => BatchResult {
                id,
                ok: false,
                plan: None,
                error: Some(error),
                processed_at,
            },
        };
        (result, provider)
    };

    let results: Vec<(BatchResult, bool)> = if options.jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(options.jobs).build() {
            Ok(pool) => pool.install(|| parsed.par_iter().map(work).collect()),
            Err(_) => parsed.iter().map(work).collect(),
        }
    } else {
        parsed.iter().map(work).collect()
    };

    let mut output = String::new();
    let mut failed = 0;
    let mut provider_failures = 0;
    for (result, provider) in &results {
        if !result.ok {
            failed += 1;
        }
        if *provider {
            provider_failures += 1;
        }
        output.push_str(&serde_json::to_string(result).expect("result serialises"));
        output.push('\n');
    }
    BatchReport {
        output,
        total: results.len(),
        failed,
        provider_failures,
    }
}

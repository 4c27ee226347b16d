//! Command-line surface. [`run_cli`] holds all the behaviour so it can be
//! driven in-process; the binary only wires up the real streams.
//!
//! Exit codes: 0 success, 1 data/record error, 2 usage error, 3 provider error.

mod batch;
mod config;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use unicode_normalization::UnicodeNormalization;

use crate::codemix::{
    detect_codemix, OfflineDictionaryProvider, ProviderConfig, ProviderKind, TranslitCache, TranslitError,
    Transliterator, WireFormat, DEFAULT_API_KEY_ENV,
};
use crate::language::TargetLanguage;
use crate::normalise::{normalise, IndicNormaliser};
use crate::romanise::{romanise, IsoRomaniser};
use crate::router::{
    build_plan, detect_language, wav_duration, LanguageError, PlanDeps, PlanError, PlanRequest, PresetName,
    PromptLanguage, VoicePrompt,
};
use crate::script::segment;

pub use batch::{BatchRecord, BatchResult};
pub use config::{ConfigError, FileConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RECORD_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PROVIDER: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "indic-frontend", version, about = "Text frontend and routing for Indic TTS")]
pub struct Cli {
    /// key=value defaults for provider and cache settings
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Split text into script runs (JSON array)
    Segment { text: Option<String> },
    /// ISO-15919 romanisation of every Brahmic run
    Romanise { text: Option<String> },
    /// Expand numbers, dates, currency and letters into words
    Normalise {
        #[arg(long)]
        lang: TargetLanguage,
        text: Option<String>,
    },
    /// Report the detected language and whether the text is code-mixed
    Detect { text: Option<String> },
    /// Rewrite Latin words into native script
    Translit {
        #[arg(long)]
        lang: Option<TargetLanguage>,
        #[command(flatten)]
        provider: ProviderArgs,
        text: Option<String>,
    },
    /// Emit a synthesis plan (JSON)
    Plan {
        #[arg(long)]
        lang: Option<TargetLanguage>,
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long, value_name = "PATH")]
        voice_prompt: Option<PathBuf>,
        /// seconds; read from the WAV header when omitted
        #[arg(long, requires = "voice_prompt")]
        voice_prompt_duration: Option<f64>,
        #[arg(long, requires = "voice_prompt")]
        voice_prompt_lang: Option<String>,
        #[command(flatten)]
        provider: ProviderArgs,
        text: Option<String>,
    },
    /// Plan every record of a JSON-lines file (stdin when no file is given)
    Batch {
        input: Option<PathBuf>,
        /// write results here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// omit timestamps so reruns are byte-identical
        #[arg(long)]
        stable: bool,
        /// records processed in parallel; output order is unchanged
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        plan: PlanArgs,
        #[command(flatten)]
        provider: ProviderArgs,
    },
}

#[derive(Debug, Clone, Args)]
struct PlanArgs {
    /// default | a | b | c
    #[arg(long, default_value = "b")]
    preset: PresetName,
    /// allow Chatterbox plans without a voice prompt
    #[arg(long)]
    no_strict: bool,
    /// send Bengali/Gujarati/Kannada/Malayalam text down the LoRA branch
    #[arg(long)]
    force_lora: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProviderChoice {
    Offline,
    Http,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WireChoice {
    Generic,
    Anthropic,
}

#[derive(Debug, Clone, Default, Args)]
struct ProviderArgs {
    #[arg(long, value_enum)]
    provider: Option<ProviderChoice>,
    /// JSON transliteration cache (in-memory when omitted)
    #[arg(long, value_name = "PATH")]
    cache_file: Option<PathBuf>,
    #[arg(long)]
    endpoint: Option<String>,
    #[arg(long)]
    model: Option<String>,
    /// offline dictionary TSV (lang, word, native); built-in list when omitted
    #[arg(long, value_name = "PATH")]
    dict: Option<PathBuf>,
    /// environment variable holding the API key [default: INDIC_FRONTEND_API_KEY]
    #[arg(long)]
    api_key_env: Option<String>,
    #[arg(long, value_enum)]
    wire: Option<WireChoice>,
    #[arg(long)]
    max_tokens: Option<u32>,
}

/// A failure that ends the command.
#[derive(Debug)]
struct Failure {
    exit: i32,
    code: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            exit: EXIT_USAGE,
            code: "usage",
            message: message.into(),
        }
    }

    fn data(code: &'static str, message: impl ToString) -> Self {
        Failure {
            exit: EXIT_RECORD_ERROR,
            code,
            message: message.to_string(),
        }
    }
}

impl From<PlanError> for Failure {
    fn from(e: PlanError) -> Self {
        Failure {
            exit: if e.is_provider_failure() {
                EXIT_PROVIDER
            } else {
                EXIT_RECORD_ERROR
            },
            code: e.code(),
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::data("io_error", e)
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: &'a str,
}

/// Run one command line. `argv[0]` is the program name.
pub fn run_cli<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let exit = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return exit;
        }
    };
    match execute(cli, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let body = serde_json::json!({ "error": ErrorBody { code: f.code, message: &f.message } });
            let _ = writeln!(stderr, "{body}");
            f.exit
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let file_config = match &cli.config {
        Some(path) => FileConfig::load(path).map_err(|e| Failure::usage(e.to_string()))?,
        None => FileConfig::default(),
    };

    match cli.command {
        Command::Segment { text } => {
            let text = input_text(text, stdin)?;
            emit(stdout, &serde_json::to_string(&segment(&text)).expect("runs serialise"))?;
        }
        Command::Romanise { text } => {
            let text = input_text(text, stdin)?;
            let out = romanise(&text).map_err(|e| Failure::data("unmapped_codepoint", e))?;
            emit(stdout, &out)?;
        }
        Command::Normalise { lang, text } => {
            let text = input_text(text, stdin)?;
            emit(stdout, &normalise(&text, lang))?;
        }
        Command::Detect { text } => {
            let text = input_text(text, stdin)?;
            let language = detect_language(&text)?;
            let body = serde_json::json!({ "language": language, "codemix": detect_codemix(&text) });
            emit(stdout, &body.to_string())?;
        }
        Command::Translit { lang, provider, text } => {
            let t = transliterator(&provider, &file_config)?;
            let text = input_text(text, stdin)?;
            let lang = match lang {
                Some(l) => l,
                None => detect_language(&text)?,
            };
            let out = t.run(&crate::codemix::TranslitRequest::new(text, lang))?;
            if let Some(reason) = out.evicted {
                writeln!(stderr, "evicted corrupt cache entry: {reason}")?;
            }
            emit(stdout, &out.output)?;
        }
        Command::Plan {
            lang,
            plan,
            voice_prompt,
            voice_prompt_duration,
            voice_prompt_lang,
            provider,
            text,
        } => {
            let t = transliterator(&provider, &file_config)?;
            let text = input_text(text, stdin)?;
            let vp = make_voice_prompt(
                voice_prompt.as_deref(),
                voice_prompt_duration,
                voice_prompt_lang.as_deref(),
                &text,
                lang,
            )
            .map_err(|(code, message)| Failure::data(code, message))?;
            let mut req = PlanRequest::new(text)
                .preset(plan.preset)
                .strict(!plan.no_strict)
                .force_lora(plan.force_lora);
            req.lang = lang;
            req.voice_prompt = vp;
            let plan = build_plan(&req, deps(&t))?;
            emit(stdout, &plan.to_json())?;
        }
        Command::Batch {
            input,
            output,
            stable,
            jobs,
            plan,
            provider,
        } => {
            let t = transliterator(&provider, &file_config)?;
            let source = match &input {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?,
                None => {
                    let mut s = String::new();
                    stdin.read_to_string(&mut s)?;
                    s
                }
            };
            let options = batch::BatchOptions {
                preset: plan.preset,
                strict: !plan.no_strict,
                force_lora: plan.force_lora,
                stable,
                jobs: jobs.max(1),
            };
            let report = batch::run_batch(&source, &options, &t);
            match &output {
                Some(path) => std::fs::write(path, nfc(&report.output))
                    .map_err(|e| Failure::data("io_error", format!("{}: {e}", path.display())))?,
                None => stdout.write_all(nfc(&report.output).as_bytes())?,
            }
            if report.failed > 0 {
                writeln!(stderr, "{} of {} record(s) failed", report.failed, report.total)?;
            }
            return Ok(report.exit_code());
        }
    }
    Ok(EXIT_OK)
}

fn nfc(s: &str) -> String {
    s.nfc().collect()
}

fn emit(out: &mut dyn Write, line: &str) -> io::Result<()> {
    writeln!(out, "{}", nfc(line))
}

fn input_text(arg: Option<String>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match arg {
        Some(t) => Ok(t),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s.trim_end_matches(['\n', '\r']).to_string())
        }
    }
}

fn deps(t: &Transliterator) -> PlanDeps<'_> {
    PlanDeps {
        normaliser: &IndicNormaliser,
        romaniser: &IsoRomaniser,
        transliterator: Some(t),
    }
}

/// Build a voice prompt from CLI/record fields. When the clip's language is
/// not given it is assumed to match the text.
pub(crate) fn make_voice_prompt(
    path: Option<&Path>,
    duration: Option<f64>,
    lang: Option<&str>,
    text: &str,
    target: Option<TargetLanguage>,
) -> Result<Option<VoicePrompt>, (&'static str, String)> {
    let Some(path) = path else {
        return Ok(None);
    };
    let duration = match duration {
        Some(d) => d,
        None => wav_duration(path).map_err(|e| ("voice_prompt_unreadable", format!("{}: {e}", path.display())))?,
    };
    let language = match lang {
        Some(l) => l.parse().expect("infallible"),
        None => match target.map(Ok).unwrap_or_else(|| detect_language(text)) {
            Ok(l) => PromptLanguage::from(l),
            Err(LanguageError::NoBrahmicContent | LanguageError::UnsupportedLanguage(_)) => PromptLanguage::Other,
        },
    };
    VoicePrompt::new(path, duration, language)
        .map(Some)
        .map_err(|e| ("invalid_voice_prompt", e.to_string()))
}

fn transliterator(args: &ProviderArgs, file: &FileConfig) -> Result<Transliterator, Failure> {
    let pick = |flag: &Option<String>, key: &str| flag.clone().or_else(|| file.get(key).map(str::to_string));
    let parse_num = |key: &str| -> Result<Option<u64>, Failure> {
        file.get(key)
            .map(|v| {
                v.parse::<u64>()
                    .map_err(|_| Failure::usage(format!("config `{key}` must be a number")))
            })
            .transpose()
    };

    let choice = match args.provider {
        Some(c) => c,
        None => match file.get("provider") {
            None | Some("offline") => ProviderChoice::Offline,
            Some("http") => ProviderChoice::Http,
            Some(other) => return Err(Failure::usage(format!("unknown provider `{other}`"))),
        },
    };

    let mut config = match choice {
        ProviderChoice::Offline => {
            let dict = args.dict.clone().or_else(|| file.get("dict").map(PathBuf::from));
            ProviderConfig::offline(dict)
        }
        ProviderChoice::Http => {
            let endpoint =
                pick(&args.endpoint, "endpoint").ok_or_else(|| Failure::usage("--provider http needs --endpoint"))?;
            let model = pick(&args.model, "model").ok_or_else(|| Failure::usage("--provider http needs --model"))?;
            let wire = match (args.wire, file.get("wire")) {
                (Some(WireChoice::Anthropic), _) | (None, Some("anthropic")) => WireFormat::Anthropic,
                (Some(WireChoice::Generic), _) | (None, None | Some("generic")) => WireFormat::Generic,
                (None, Some(other)) => return Err(Failure::usage(format!("unknown wire format `{other}`"))),
            };
            let mut c = ProviderConfig::remote(endpoint, model);
            if let ProviderKind::Remote {
                api_key_env, wire: w, ..
            } = &mut c.kind
            {
                *api_key_env = pick(&args.api_key_env, "api_key_env").unwrap_or_else(|| DEFAULT_API_KEY_ENV.into());
                *w = wire;
            }
            c
        }
    };
    if let Some(n) = args.max_tokens.map(u64::from).or(parse_num("max_tokens")?) {
        config.max_tokens = n as u32;
    }
    if let Some(n) = parse_num("timeout_secs")? {
        config.timeout_secs = n;
    }
    if let Some(n) = parse_num("max_retries")? {
        config.max_retries = n as u32;
    }

    let provider: Arc<dyn crate::codemix::CompletionProvider> = match &config.kind {
        ProviderKind::OfflineDictionary { path: Some(path) } => {
            Arc::new(OfflineDictionaryProvider::from_file(path).map_err(|e| Failure::usage(e.to_string()))?)
        }
        _ => Arc::from(config.build().map_err(|e| Failure::usage(e.to_string()))?),
    };
    let cache_path = args
        .cache_file
        .clone()
        .or_else(|| file.get("cache_file").map(PathBuf::from));
    let cache = match cache_path {
        Some(p) => TranslitCache::open(p).map_err(|e| Failure::usage(e.to_string()))?,
        None => TranslitCache::in_memory(),
    };
    Ok(Transliterator::new(provider, Arc::new(cache))
        .with_model(config.model())
        .with_max_tokens(config.max_tokens))
}

impl From<LanguageError> for Failure {
    fn from(e: LanguageError) -> Self {
        PlanError::from(e).into()
    }
}

impl From<TranslitError> for Failure {
    fn from(e: TranslitError) -> Self {
        PlanError::from(e).into()
    }
}

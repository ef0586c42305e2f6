//! The `namematch` command line.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::{Compared, MatchingBlocks, MatchingType, OneMatch};
use crate::error::Error;
use crate::facade::{AnyMethod, CompareParams, NameComparer};
use crate::scoring::DEFAULT_WORD_THRESHOLD;
use crate::semantic::SemanticKb;
use crate::tokenizer::{MatchConfig, NumbersBehavior};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "namematch",
    version,
    about = "Similarity of source-code identifier names"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare two names.
    Compare(CompareArgs),
    /// Score every pair of a delimited file.
    Batch(BatchArgs),
    /// Show how a name is split into words.
    Split(SplitArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NumbersArg {
    Separate,
    Ignore,
    Leave,
}

impl From<NumbersArg> for NumbersBehavior {
    fn from(n: NumbersArg) -> Self {
        match n {
            NumbersArg::Separate => NumbersBehavior::SeparateWord,
            NumbersArg::Ignore => NumbersBehavior::Ignore,
            NumbersArg::Leave => NumbersBehavior::Leave,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct TokenizerArgs {
    /// Keep letter case when normalizing.
    #[arg(long)]
    case_sensitive: bool,
    /// Word separator characters (default: underscore, space, tab, newline).
    #[arg(long)]
    separators: Option<String>,
    /// Do not split camelCase words.
    #[arg(long)]
    no_camel_case: bool,
    #[arg(long, value_enum, default_value_t = NumbersArg::Separate)]
    numbers: NumbersArg,
    /// File of stop words, whitespace separated.
    #[arg(long, value_name = "FILE")]
    stop_words: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MatchArgs {
    /// Shortest letter block a letter matcher reports.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    min_len: u32,
    /// Minimum degree for two words to match, in (0, 1].
    #[arg(long, default_value_t = DEFAULT_WORD_THRESHOLD, value_parser = parse_threshold)]
    min_word_match_degree: f64,
    /// Give glue the same weight as matched elements.
    #[arg(long)]
    continuity_heavy_weight: bool,
    /// Break ties between word matches by letters covered.
    #[arg(long)]
    prefer_num_of_letters: bool,
    /// Drop stop words before word matching.
    #[arg(long)]
    ignore_stop_words: bool,
    /// Thesaurus file (one JSON record per line).
    #[arg(long, value_name = "FILE")]
    thesaurus: Option<PathBuf>,
    /// Plural exceptions file.
    #[arg(long, value_name = "FILE")]
    plural_exceptions: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    name1: String,
    name2: String,
    #[arg(long, default_value = "ordered-words", value_parser = parse_method)]
    method: AnyMethod,
    #[command(flatten)]
    tokenizer: TokenizerArgs,
    #[command(flatten)]
    matching: MatchArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct BatchArgs {
    /// Delimited file with header `name1,name2`.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Comma-separated list of methods.
    #[arg(long, default_value = "ordered-words", value_parser = parse_methods)]
    methods: MethodList,
    /// Output file (default: standard output).
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Tab-delimited input and output.
    #[arg(long)]
    tab: bool,
    #[command(flatten)]
    tokenizer: TokenizerArgs,
    #[command(flatten)]
    matching: MatchArgs,
}

#[derive(Debug, Args)]
struct SplitArgs {
    name: String,
    #[command(flatten)]
    tokenizer: TokenizerArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Debug, Clone)]
struct MethodList(Vec<AnyMethod>);

fn parse_method(s: &str) -> Result<AnyMethod, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_methods(s: &str) -> Result<MethodList, String> {
    let methods = s
        .split(',')
        .map(str::trim)
        .filter(|m| !m.is_empty())
        .map(parse_method)
        .collect::<Result<Vec<_>, _>>()?;
    if methods.is_empty() {
        return Err("no methods given".into());
    }
    Ok(MethodList(methods))
}

fn parse_threshold(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err(format!("{v} is outside (0, 1]"))
    }
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn runtime(e: impl ToString) -> Self {
        Self {
            code: EXIT_RUNTIME,
            message: e.to_string(),
        }
    }

    fn usage(e: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

impl TokenizerArgs {
    fn config(&self) -> CliResult<MatchConfig> {
        let mut config = MatchConfig::default();
        config.case_sensitivity = self.case_sensitive;
        config.support_camel_case = !self.no_camel_case;
        config.numbers_behavior = self.numbers.into();
        if let Some(seps) = &self.separators {
            config.set_word_separators(seps.chars());
        }
        if let Some(path) = &self.stop_words {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::runtime(format!("cannot read {}: {e}", path.display())))?;
            config
                .set_stop_words(text.split_whitespace())
                .map_err(Failure::runtime)?;
        }
        Ok(config)
    }
}

impl MatchArgs {
    fn params(&self) -> CompareParams {
        CompareParams {
            min_len: self.min_len as usize,
            continuity_heavy_weight: self.continuity_heavy_weight,
            min_word_match_degree: self.min_word_match_degree,
            prefer_num_of_letters: self.prefer_num_of_letters,
            ignore_stop_words: self.ignore_stop_words,
        }
    }

    fn load_kb(&self) -> CliResult<Arc<SemanticKb>> {
        SemanticKb::from_sources(self.thesaurus.as_deref(), self.plural_exceptions.as_deref())
            .map(Arc::new)
            .map_err(Failure::runtime)
    }
}

fn needs_kb(methods: &[AnyMethod]) -> bool {
    methods
        .iter()
        .any(|m| matches!(m, AnyMethod::Matcher(m) if m.is_semantic()))
}

/// Parameters echoed in structured output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportParams {
    pub min_len: usize,
    pub min_word_match_degree: f64,
    pub continuity_heavy_weight: bool,
    pub prefer_num_of_letters: bool,
    pub ignore_stop_words: bool,
    pub case_sensitive: bool,
    pub numbers: String,
}

/// Structured output of `compare`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub name1: String,
    pub name2: String,
    pub method: String,
    pub params: ReportParams,
    pub normalized: [String; 2],
    pub words: [Vec<String>; 2],
    /// Elements the matcher actually compared (after stop-word removal).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compared: Option<[Compared; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching_type: Option<MatchingType>,
    pub matches: Vec<OneMatch>,
    pub ratio: f64,
}

impl CompareReport {
    /// Rebuilds the matching result described by the report.
    pub fn to_blocks(&self) -> Option<MatchingBlocks> {
        let [c1, c2] = self.compared.clone()?;
        Some(MatchingBlocks {
            name_1: c1,
            name_2: c2,
            matching_type: self.matching_type?,
            ratio: self.ratio,
            cont_type: self.matches.iter().all(OneMatch::is_contiguous),
            matches: self.matches.clone(),
            continuity_heavy_weight: self.params.continuity_heavy_weight,
        })
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Compare(a) => run_compare(&a, &mut out),
        Command::Batch(a) => run_batch(&a, &mut out),
        Command::Split(a) => run_split(&a, &mut out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn name_error(e: Error) -> Failure {
    match e {
        Error::InvalidArgument(_) => Failure::usage(e),
        other => Failure::runtime(other),
    }
}

fn run_compare(args: &CompareArgs, out: &mut impl Write) -> CliResult {
    let mut comparer = NameComparer::with_config(args.tokenizer.config()?);
    comparer
        .set_names(&args.name1, &args.name2)
        .map_err(name_error)?;
    if needs_kb(&[args.method]) {
        comparer.set_kb(args.matching.load_kb()?);
    }
    let (n1, n2) = comparer.get_norm_names();
    let (w1, w2) = comparer.get_words();
    let normalized = [n1.unwrap_or_default(), n2.unwrap_or_default()];
    let words = [w1.unwrap_or_default(), w2.unwrap_or_default()];
    let params = args.matching.params();
    let mut report = CompareReport {
        name1: args.name1.clone(),
        name2: args.name2.clone(),
        method: args.method.name().to_string(),
        params: ReportParams {
            min_len: params.min_len,
            min_word_match_degree: params.min_word_match_degree,
            continuity_heavy_weight: params.continuity_heavy_weight,
            prefer_num_of_letters: params.prefer_num_of_letters,
            ignore_stop_words: params.ignore_stop_words,
            case_sensitive: comparer.case_sensitivity(),
            numbers: comparer.numbers_behavior().to_string(),
        },
        normalized,
        words,
        compared: None,
        matching_type: None,
        matches: Vec::new(),
        ratio: 0.0,
    };
    match args.method {
        AnyMethod::Matcher(m) => {
            let blocks = comparer.compare(m, &params).map_err(Failure::runtime)?;
            report.compared = Some([blocks.name_1.clone(), blocks.name_2.clone()]);
            report.matching_type = Some(blocks.matching_type);
            report.matches = blocks.matches;
            report.ratio = blocks.ratio;
        }
        AnyMethod::Baseline(b) => {
            report.ratio = comparer.baseline(b).map_err(Failure::runtime)?;
        }
    }
    let written = match args.output {
        OutputFormat::Json => serde_json::to_writer_pretty(&mut *out, &report)
            .map_err(io::Error::other)
            .and_then(|()| writeln!(out)),
        OutputFormat::Text => write_text_report(out, &report, args.method),
    };
    written.map_err(Failure::runtime)
}

fn write_text_report(out: &mut impl Write, r: &CompareReport, method: AnyMethod) -> io::Result<()> {
    writeln!(out, "method: {}", r.method)?;
    writeln!(out, "name1: {} -> {}", r.name1, r.normalized[0])?;
    writeln!(out, "name2: {} -> {}", r.name2, r.normalized[1])?;
    let word_level = matches!(method, AnyMethod::Matcher(m) if m.is_word_level());
    if word_level {
        writeln!(out, "words1: {}", r.words[0].join(" "))?;
        writeln!(out, "words2: {}", r.words[1].join(" "))?;
    }
    for m in &r.matches {
        write!(
            out,
            "match: pos1={} pos2={} length={} letters={} degree={:.3}",
            m.pos1, m.pos2, m.length, m.letters, m.degree
        )?;
        if let Some(spans) = &m.spans {
            let parts: Vec<String> = spans
                .iter()
                .map(|s| format!("{}/{}+{}", s.pos1, s.pos2, s.length))
                .collect();
            write!(out, " spans={}", parts.join(","))?;
        }
        writeln!(out)?;
    }
    match method {
        AnyMethod::Matcher(_) => writeln!(out, "ratio: {:.3}", r.ratio),
        AnyMethod::Baseline(_) => writeln!(out, "score: {:.3}", r.ratio),
    }
}

fn run_split(args: &SplitArgs, out: &mut impl Write) -> CliResult {
    let mut comparer = NameComparer::with_config(args.tokenizer.config()?);
    comparer.set_name_1(&args.name).map_err(name_error)?;
    let words = comparer.get_words().0.unwrap_or_default();
    let written = match args.output {
        OutputFormat::Json => serde_json::to_writer(&mut *out, &words)
            .map_err(io::Error::other)
            .and_then(|()| writeln!(out)),
        OutputFormat::Text => words.iter().try_for_each(|w| writeln!(out, "{w}")),
    };
    written.map_err(Failure::runtime)
}

fn delimiter(tab: bool) -> u8 {
    if tab {
        b'\t'
    } else {
        b','
    }
}

fn read_pairs(path: &Path, tab: bool) -> CliResult<Vec<(String, String)>> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter(tab))
        .flexible(true)
        .from_path(path)
        .map_err(|e| Failure::runtime(format!("cannot read {}: {e}", path.display())))?;
    let header = reader.headers().map_err(Failure::runtime)?;
    if header.len() != 2 || &header[0] != "name1" || &header[1] != "name2" {
        return Err(Failure::runtime(format!(
            "{}: header must be name1{}name2",
            path.display(),
            if tab { "<TAB>" } else { "," }
        )));
    }
    let mut pairs = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(Failure::runtime)?;
        if record.len() != 2 {
            return Err(Failure::runtime(format!(
                "{}: row {} must have 2 fields",
                path.display(),
                line + 1
            )));
        }
        pairs.push((record[0].to_string(), record[1].to_string()));
    }
    Ok(pairs)
}

struct RowResult {
    scores: Vec<Option<f64>>,
    errors: Vec<String>,
}

fn score_row(
    name1: &str,
    name2: &str,
    methods: &[AnyMethod],
    config: &MatchConfig,
    params: &CompareParams,
    kb: Option<&Arc<SemanticKb>>,
) -> RowResult {
    let mut comparer = NameComparer::with_config(config.clone());
    if let Some(kb) = kb {
        comparer.set_kb(Arc::clone(kb));
    }
    if let Err(e) = comparer.set_names(name1, name2) {
        return RowResult {
            scores: vec![None; methods.len()],
            errors: vec![e.to_string()],
        };
    }
    let mut errors = Vec::new();
    let scores = methods
        .iter()
        .map(|&m| {
            let score = match m {
                AnyMethod::Matcher(m) => comparer.compare(m, params).map(|b| b.ratio),
                AnyMethod::Baseline(b) => comparer.baseline(b),
            };
            score.map_err(|e| errors.push(format!("{m}: {e}"))).ok()
        })
        .collect();
    RowResult { scores, errors }
}

fn run_batch(args: &BatchArgs, stdout: &mut impl Write) -> CliResult {
    let config = args.tokenizer.config()?;
    let params = args.matching.params();
    let methods = &args.methods.0;
    let kb = if needs_kb(methods) {
        Some(args.matching.load_kb()?)
    } else {
        None
    };
    let pairs = read_pairs(&args.input, args.tab)?;
    let results: Vec<RowResult> = pairs
        .par_iter()
        .map(|(a, b)| score_row(a, b, methods, &config, &params, kb.as_ref()))
        .collect();

    let sink: Box<dyn Write + '_> = match &args.output {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| Failure::runtime(format!("cannot write {}: {e}", path.display())))?,
        ),
        None => Box::new(&mut *stdout),
    };
    let mut writer = csv::WriterBuilder::new()
        .delimiter(delimiter(args.tab))
        .from_writer(sink);
    let mut header = vec!["name1".to_string(), "name2".to_string()];
    header.extend(methods.iter().map(|m| m.name().to_string()));
    header.push("error".into());
    writer.write_record(&header).map_err(Failure::runtime)?;
    for ((a, b), row) in pairs.iter().zip(&results) {
        let mut record = vec![a.clone(), b.clone()];
        record.extend(
            row.scores
                .iter()
                .map(|s| s.map(|v| format!("{v:.3}")).unwrap_or_default()),
        );
        record.push(row.errors.join("; "));
        writer.write_record(&record).map_err(Failure::runtime)?;
    }
    writer.flush().map_err(Failure::runtime)
}

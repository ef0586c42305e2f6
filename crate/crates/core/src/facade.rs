//! [`NameComparer`]: two names, a configuration, and every way to compare them.

use std::cell::OnceCell;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::baselines;
use crate::blocks::MatchingBlocks;
use crate::error::{Error, Result};
use crate::letters;
use crate::scoring::{GlueWeighting, DEFAULT_WORD_THRESHOLD};
use crate::semantic::SemanticKb;
use crate::tokenizer::{MatchConfig, NumbersBehavior, TokenizedName};
use crate::words::{self, Lexical, Semantic, WordMatchParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Ordered,
    Unordered,
    Unedit,
    OrderedWords,
    UnorderedWords,
    OrderedSemantic,
    UnorderedSemantic,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Ordered,
        Method::Unordered,
        Method::Unedit,
        Method::OrderedWords,
        Method::UnorderedWords,
        Method::OrderedSemantic,
        Method::UnorderedSemantic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Ordered => "ordered",
            Method::Unordered => "unordered",
            Method::Unedit => "unedit",
            Method::OrderedWords => "ordered-words",
            Method::UnorderedWords => "unordered-words",
            Method::OrderedSemantic => "ordered-semantic",
            Method::UnorderedSemantic => "unordered-semantic",
        }
    }

    pub fn is_word_level(self) -> bool {
        !matches!(self, Method::Ordered | Method::Unordered | Method::Unedit)
    }

    pub fn is_semantic(self) -> bool {
        matches!(self, Method::OrderedSemantic | Method::UnorderedSemantic)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaselineMethod {
    /// LCS length over the shorter name.
    Lcs,
    /// Raw edit distance.
    Levenshtein,
    /// Raw edit distance with adjacent transpositions.
    Damerau,
    /// Edit distance over the longer name.
    NormalizedLevenshtein,
    /// Classic gestalt ratio (argument-order dependent).
    Gestalt,
}

impl BaselineMethod {
    pub const ALL: [BaselineMethod; 5] = [
        BaselineMethod::Lcs,
        BaselineMethod::Levenshtein,
        BaselineMethod::Damerau,
        BaselineMethod::NormalizedLevenshtein,
        BaselineMethod::Gestalt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaselineMethod::Lcs => "lcs",
            BaselineMethod::Levenshtein => "levenshtein",
            BaselineMethod::Damerau => "damerau",
            BaselineMethod::NormalizedLevenshtein => "normalized-levenshtein",
            BaselineMethod::Gestalt => "gestalt",
        }
    }
}

/// Either a matcher or a baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnyMethod {
    Matcher(Method),
    Baseline(BaselineMethod),
}

impl AnyMethod {
    pub fn name(self) -> &'static str {
        match self {
            AnyMethod::Matcher(m) => m.name(),
            AnyMethod::Baseline(b) => b.name(),
        }
    }
}

fn canonical(s: &str) -> String {
    s.trim().to_ascii_lowercase().replace('_', "-")
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = canonical(s);
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown method '{s}'")))
    }
}

impl FromStr for BaselineMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = canonical(s);
        BaselineMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown baseline '{s}'")))
    }
}

impl FromStr for AnyMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Method>()
            .map(AnyMethod::Matcher)
            .or_else(|_| s.parse::<BaselineMethod>().map(AnyMethod::Baseline))
            .map_err(|_| Error::invalid(format!("unknown method '{}'", canonical(s))))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for BaselineMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for AnyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-call matching parameters. Letter methods use `min_len`, word methods
/// the word fields; `continuity_heavy_weight` applies to both.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompareParams {
    pub min_len: usize,
    pub continuity_heavy_weight: bool,
    pub min_word_match_degree: f64,
    pub prefer_num_of_letters: bool,
    pub ignore_stop_words: bool,
}

impl Default for CompareParams {
    fn default() -> Self {
        Self {
            min_len: letters::DEFAULT_MIN_LEN,
            continuity_heavy_weight: false,
            min_word_match_degree: DEFAULT_WORD_THRESHOLD,
            prefer_num_of_letters: false,
            ignore_stop_words: false,
        }
    }
}

impl CompareParams {
    pub fn weighting(&self) -> GlueWeighting {
        GlueWeighting {
            continuity_heavy_weight: self.continuity_heavy_weight,
        }
    }
}

/// Where the semantic knowledge base comes from.
#[derive(Debug, Clone)]
pub enum KbSource {
    /// Explicit files; `None` falls back to the data directory, then to the
    /// bundled data.
    Files {
        thesaurus: Option<PathBuf>,
        plural_exceptions: Option<PathBuf>,
    },
    Shared(Arc<SemanticKb>),
}

impl Default for KbSource {
    fn default() -> Self {
        KbSource::Files {
            thesaurus: None,
            plural_exceptions: None,
        }
    }
}

/// Compares two identifier names.
///
/// Setters re-tokenize eagerly, so getters and comparisons always see the
/// current configuration. The semantic knowledge base is loaded on the first
/// semantic comparison.
#[derive(Debug, Default)]
pub struct NameComparer {
    config: MatchConfig,
    names: [Option<TokenizedName>; 2],
    kb_source: KbSource,
    kb: OnceCell<Arc<SemanticKb>>,
}

impl NameComparer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_names(name_1: &str, name_2: &str) -> Result<Self> {
        let mut c = Self::new();
        c.set_names(name_1, name_2)?;
        Ok(c)
    }

    pub fn with_config(config: MatchConfig) -> Self {
        Self {
            config,
            ..Self::default()
        }
    }

    pub fn config(&self) -> &MatchConfig {
        &self.config
    }

    fn tokenize(&self, name: &str) -> Result<TokenizedName> {
        TokenizedName::new(name, &self.config)
    }

    fn retokenize(&mut self) -> Result<()> {
        for slot in 0..2 {
            if let Some(t) = &self.names[slot] {
                self.names[slot] = Some(TokenizedName::new(&t.original, &self.config)?);
            }
        }
        Ok(())
    }

    fn update_config(&mut self, change: impl FnOnce(&mut MatchConfig) -> Result<()>) -> Result<()> {
        let previous = self.config.clone();
        change(&mut self.config)?;
        if let Err(e) = self.retokenize() {
            self.config = previous;
            return Err(e);
        }
        Ok(())
    }

    pub fn set_name_1(&mut self, name: &str) -> Result<()> {
        self.names[0] = Some(self.tokenize(name)?);
        Ok(())
    }

    pub fn set_name_2(&mut self, name: &str) -> Result<()> {
        self.names[1] = Some(self.tokenize(name)?);
        Ok(())
    }

    pub fn set_names(&mut self, name_1: &str, name_2: &str) -> Result<()> {
        let (a, b) = (self.tokenize(name_1)?, self.tokenize(name_2)?);
        self.names = [Some(a), Some(b)];
        Ok(())
    }

    pub fn name_1(&self) -> Option<&str> {
        self.names[0].as_ref().map(|t| t.original.as_str())
    }

    pub fn name_2(&self) -> Option<&str> {
        self.names[1].as_ref().map(|t| t.original.as_str())
    }

    pub fn set_case_sensitivity(&mut self, case_sensitive: bool) -> Result<()> {
        self.update_config(|c| {
            c.case_sensitivity = case_sensitive;
            Ok(())
        })
    }

    pub fn case_sensitivity(&self) -> bool {
        self.config.case_sensitivity
    }

    pub fn set_word_separators(&mut self, separators: &str) -> Result<()> {
        self.update_config(|c| {
            c.set_word_separators(separators.chars());
            Ok(())
        })
    }

    pub fn word_separators(&self) -> String {
        self.config.word_separators().iter().collect()
    }

    pub fn set_support_camel_case(&mut self, enabled: bool) -> Result<()> {
        self.update_config(|c| {
            c.support_camel_case = enabled;
            Ok(())
        })
    }

    pub fn support_camel_case(&self) -> bool {
        self.config.support_camel_case
    }

    pub fn set_numbers_behavior(&mut self, behavior: NumbersBehavior) -> Result<()> {
        self.update_config(|c| {
            c.numbers_behavior = behavior;
            Ok(())
        })
    }

    pub fn numbers_behavior(&self) -> NumbersBehavior {
        self.config.numbers_behavior
    }

    pub fn set_stop_words<I, S>(&mut self, words: I) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.update_config(|c| c.set_stop_words(words))
    }

    pub fn stop_words(&self) -> &[String] {
        self.config.stop_words()
    }

    /// Replaces the knowledge-base source; an already loaded base is dropped.
    pub fn set_kb_source(&mut self, source: KbSource) {
        self.kb_source = source;
        self.kb = OnceCell::new();
    }

    pub fn set_kb(&mut self, kb: Arc<SemanticKb>) {
        self.set_kb_source(KbSource::Shared(kb));
    }

    /// The knowledge base, loading it on first use. A source that fails to
    /// load leaves only the built-in plural and abbreviation rules.
    pub fn kb(&self) -> Arc<SemanticKb> {
        Arc::clone(self.kb.get_or_init(|| match &self.kb_source {
            KbSource::Shared(kb) => Arc::clone(kb),
            KbSource::Files { thesaurus, plural_exceptions } => {
                match SemanticKb::from_sources(thesaurus.as_deref(), plural_exceptions.as_deref()) {
                    Ok(kb) => Arc::new(kb),
                    Err(e) => {
                        warn!("semantic data unavailable ({e}); using plural and abbreviation rules only");
                        Arc::new(SemanticKb::empty())
                    }
                }
            }
        }))
    }

    /// Both names normalized; `None` for a name that is not set.
    pub fn get_norm_names(&self) -> (Option<String>, Option<String>) {
        let norm = |slot: &Option<TokenizedName>| slot.as_ref().map(|t| t.normalized.clone());
        (norm(&self.names[0]), norm(&self.names[1]))
    }

    /// Word lists of both names; `None` for a name that is not set.
    pub fn get_words(&self) -> (Option<Vec<String>>, Option<Vec<String>>) {
        let words = |slot: &Option<TokenizedName>| slot.as_ref().map(|t| t.words.clone());
        (words(&self.names[0]), words(&self.names[1]))
    }

    pub fn tokenized(&self) -> Result<(&TokenizedName, &TokenizedName)> {
        match &self.names {
            [Some(a), Some(b)] => Ok((a, b)),
            _ => Err(Error::State(
                "both names must be set before comparing".into(),
            )),
        }
    }

    pub fn compare(&self, method: Method, params: &CompareParams) -> Result<MatchingBlocks> {
        let (a, b) = self.tokenized()?;
        let weighting = params.weighting();
        if !method.is_word_level() {
            let (n1, n2) = (&a.normalized, &b.normalized);
            return match method {
                Method::Ordered => letters::ordered_match(n1, n2, params.min_len, weighting),
                Method::Unordered => letters::unordered_match(n1, n2, params.min_len, weighting),
                _ => letters::unedit_match(n1, n2, params.min_len, weighting),
            };
        }
        self.config.validate_for_words()?;
        let word_params = WordMatchParams {
            min_word_match_degree: params.min_word_match_degree,
            prefer_num_of_letters: params.prefer_num_of_letters,
            ignore_stop_words: params.ignore_stop_words,
            stop_words: self.config.stop_words().to_vec(),
            weighting,
        };
        let (w1, w2) = (&a.words, &b.words);
        match method {
            Method::OrderedWords => words::ordered_words_match(w1, w2, &word_params, &Lexical),
            Method::UnorderedWords => words::unordered_words_match(w1, w2, &word_params, &Lexical),
            Method::OrderedSemantic => {
                let kb = self.kb();
                words::ordered_words_match(w1, w2, &word_params, &Semantic { kb: &kb })
            }
            _ => {
                let kb = self.kb();
                words::unordered_words_match(w1, w2, &word_params, &Semantic { kb: &kb })
            }
        }
    }

    /// A classic measure on the normalized names; only the scalar is returned.
    pub fn baseline(&self, method: BaselineMethod) -> Result<f64> {
        let (a, b) = self.tokenized()?;
        let (n1, n2) = (a.normalized.as_str(), b.normalized.as_str());
        match method {
            BaselineMethod::Lcs => Ok(baselines::lcs_similarity(n1, n2)?.by_shorter),
            BaselineMethod::Levenshtein => Ok(baselines::edit_distance(n1, n2, false) as f64),
            BaselineMethod::Damerau => Ok(baselines::edit_distance(n1, n2, true) as f64),
            BaselineMethod::NormalizedLevenshtein => {
                baselines::normalized_edit_distance(n1, n2, false)
            }
            BaselineMethod::Gestalt => Ok(baselines::gestalt_ratio(n1, n2)),
        }
    }

    pub fn ordered_match(
        &self,
        min_len: usize,
        continuity_heavy_weight: bool,
    ) -> Result<MatchingBlocks> {
        let params = CompareParams {
            min_len,
            continuity_heavy_weight,
            ..Default::default()
        };
        self.compare(Method::Ordered, &params)
    }

    pub fn unordered_match(
        &self,
        min_len: usize,
        continuity_heavy_weight: bool,
    ) -> Result<MatchingBlocks> {
        let params = CompareParams {
            min_len,
            continuity_heavy_weight,
            ..Default::default()
        };
        self.compare(Method::Unordered, &params)
    }

    pub fn unedit_match(
        &self,
        min_len: usize,
        continuity_heavy_weight: bool,
    ) -> Result<MatchingBlocks> {
        let params = CompareParams {
            min_len,
            continuity_heavy_weight,
            ..Default::default()
        };
        self.compare(Method::Unedit, &params)
    }

    fn word_call(
        &self,
        method: Method,
        degree: f64,
        prefer_letters: bool,
        ignore_stop: bool,
    ) -> Result<MatchingBlocks> {
        let params = CompareParams {
            min_word_match_degree: degree,
            prefer_num_of_letters: prefer_letters,
            ignore_stop_words: ignore_stop,
            ..Default::default()
        };
        self.compare(method, &params)
    }

    pub fn ordered_words_match(
        &self,
        min_word_match_degree: f64,
        prefer_num_of_letters: bool,
        ignore_stop_words: bool,
    ) -> Result<MatchingBlocks> {
        self.word_call(
            Method::OrderedWords,
            min_word_match_degree,
            prefer_num_of_letters,
            ignore_stop_words,
        )
    }

    pub fn unordered_words_match(
        &self,
        min_word_match_degree: f64,
        prefer_num_of_letters: bool,
        ignore_stop_words: bool,
    ) -> Result<MatchingBlocks> {
        self.word_call(
            Method::UnorderedWords,
            min_word_match_degree,
            prefer_num_of_letters,
            ignore_stop_words,
        )
    }

    pub fn ordered_semantic_match(
        &self,
        min_word_match_degree: f64,
        prefer_num_of_letters: bool,
        ignore_stop_words: bool,
    ) -> Result<MatchingBlocks> {
        self.word_call(
            Method::OrderedSemantic,
            min_word_match_degree,
            prefer_num_of_letters,
            ignore_stop_words,
        )
    }

    pub fn unordered_semantic_match(
        &self,
        min_word_match_degree: f64,
        prefer_num_of_letters: bool,
        ignore_stop_words: bool,
    ) -> Result<MatchingBlocks> {
        self.word_call(
            Method::UnorderedSemantic,
            min_word_match_degree,
            prefer_num_of_letters,
            ignore_stop_words,
        )
    }

    pub fn edit_distance(&self, enable_transposition: bool) -> Result<f64> {
        self.baseline(if enable_transposition {
            BaselineMethod::Damerau
        } else {
            BaselineMethod::Levenshtein
        })
    }

    pub fn normalized_edit_distance(&self, enable_transposition: bool) -> Result<f64> {
        let (a, b) = self.tokenized()?;
        baselines::normalized_edit_distance(&a.normalized, &b.normalized, enable_transposition)
    }

    pub fn gestalt_ratio(&self) -> Result<f64> {
        self.baseline(BaselineMethod::Gestalt)
    }
}

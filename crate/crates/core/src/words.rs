//! Word-level matchers.
//!
//! Each word counts as one element whatever its length. Two words match when
//! their degree reaches `min_word_match_degree`; the degree itself comes from
//! a [`WordSimilarity`], which is how the semantic variants plug in.

use crate::blocks::{Compared, MatchingBlocks, MatchingType, OneMatch};
use crate::engine::{self, Block, Grid, Leftovers, Plan, SearchParams};
use crate::error::{Error, Result};
use crate::scoring::{self, GlueWeighting, Weights, WordMatchDegree, DEFAULT_WORD_THRESHOLD};
use crate::semantic::SemanticKb;
use crate::tokenizer::DEFAULT_STOP_WORDS;

/// Scores a pair of words against a threshold.
pub trait WordSimilarity {
    fn degree(&self, a: &str, b: &str, threshold: f64) -> WordMatchDegree;
}

/// Continuity-weighted letter ratio, no semantics. The default.
#[derive(Debug, Clone, Copy, Default)]
pub struct Lexical;

impl WordSimilarity for Lexical {
    fn degree(&self, a: &str, b: &str, threshold: f64) -> WordMatchDegree {
        scoring::degree_with(scoring::word_ratio(a, b), a, b, threshold, None)
    }
}

/// Plain `2|m| / (|a| + |b|)` letter ratio, no continuity bonus.
#[derive(Debug, Clone, Copy, Default)]
pub struct Plain;

impl WordSimilarity for Plain {
    fn degree(&self, a: &str, b: &str, threshold: f64) -> WordMatchDegree {
        scoring::degree_with(scoring::plain_ratio(a, b), a, b, threshold, None)
    }
}

/// [`Lexical`] plus synonyms, plurals and abbreviations from a knowledge base.
#[derive(Debug, Clone, Copy)]
pub struct Semantic<'kb> {
    pub kb: &'kb SemanticKb,
}

impl WordSimilarity for Semantic<'_> {
    fn degree(&self, a: &str, b: &str, threshold: f64) -> WordMatchDegree {
        scoring::degree_with(scoring::word_ratio(a, b), a, b, threshold, Some(self.kb))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WordMatchParams {
    pub min_word_match_degree: f64,
    /// Among equally scored matches prefer the one covering more letters
    /// (rather than more words).
    pub prefer_num_of_letters: bool,
    /// Drop stop words from both names before matching.
    pub ignore_stop_words: bool,
    pub stop_words: Vec<String>,
    pub weighting: GlueWeighting,
}

impl Default for WordMatchParams {
    fn default() -> Self {
        Self {
            min_word_match_degree: DEFAULT_WORD_THRESHOLD,
            prefer_num_of_letters: false,
            ignore_stop_words: false,
            stop_words: DEFAULT_STOP_WORDS.iter().map(|w| w.to_string()).collect(),
            weighting: GlueWeighting::DEFAULT,
        }
    }
}

impl WordMatchParams {
    pub fn with_threshold(threshold: f64) -> Self {
        Self {
            min_word_match_degree: threshold,
            ..Self::default()
        }
    }

    fn prepare(&self, words: &[String], which: &str) -> Result<Vec<String>> {
        let kept: Vec<String> = words
            .iter()
            .filter(|w| !(self.ignore_stop_words && self.stop_words.iter().any(|s| s == *w)))
            .cloned()
            .collect();
        if kept.is_empty() {
            return Err(Error::EmptyResult(format!(
                "{which} name has no words to match"
            )));
        }
        Ok(kept)
    }
}

struct Setup {
    words1: Vec<String>,
    words2: Vec<String>,
    grid: Grid,
    search: SearchParams,
}

fn setup(
    words1: &[String],
    words2: &[String],
    params: &WordMatchParams,
    sim: &dyn WordSimilarity,
) -> Result<Setup> {
    scoring::validate_threshold(params.min_word_match_degree)?;
    let words1 = params.prepare(words1, "first")?;
    let words2 = params.prepare(words2, "second")?;
    let cells = words1
        .iter()
        .flat_map(|a| words2.iter().map(move |b| (a, b)))
        .map(|(a, b)| sim.degree(a, b, params.min_word_match_degree).value)
        .collect();
    let size = |w: &[String]| w.iter().map(|s| s.chars().count()).collect::<Vec<_>>();
    let grid = Grid::scored(
        words1.len(),
        words2.len(),
        cells,
        size(&words1),
        size(&words2),
    );
    let n_avg = (words1.len() + words2.len()) as f64 / 2.0;
    let search = SearchParams {
        min_len: 1,
        weights: Weights::new(n_avg, params.weighting),
        prefer_letters: params.prefer_num_of_letters,
    };
    Ok(Setup {
        words1,
        words2,
        grid,
        search,
    })
}

fn to_match(block: &Block, words1: &[String]) -> OneMatch {
    OneMatch {
        pos1: block.idx1[0],
        pos2: block.idx2[0],
        length: block.idx1.len(),
        letters: block.idx1.iter().map(|&i| words1[i].chars().count()).sum(),
        degree: block.scores.iter().sum(),
        degrees: block.scores.clone(),
        spans: None,
    }
}

fn finish(setup: Setup, plan: Plan, weighting: GlueWeighting) -> Result<MatchingBlocks> {
    let matches = plan
        .blocks
        .iter()
        .map(|b| to_match(b, &setup.words1))
        .collect();
    MatchingBlocks::build(
        Compared::Words(setup.words1),
        Compared::Words(setup.words2),
        MatchingType::Words,
        matches,
        weighting,
    )
}

/// Order-preserving word match: anchors on the aligned run of matching
/// words with the highest total degree and recurses on both sides.
pub fn ordered_words_match(
    words1: &[String],
    words2: &[String],
    params: &WordMatchParams,
    sim: &dyn WordSimilarity,
) -> Result<MatchingBlocks> {
    let s = setup(words1, words2, params, sim)?;
    let plan = engine::ordered(&s.grid, s.search);
    finish(s, plan, params.weighting)
}

/// Word match allowing cross matches: the best run is taken, its words are
/// blocked out, and the search repeats.
pub fn unordered_words_match(
    words1: &[String],
    words2: &[String],
    params: &WordMatchParams,
    sim: &dyn WordSimilarity,
) -> Result<MatchingBlocks> {
    let s = setup(words1, words2, params, sim)?;
    let plan = engine::unordered(&s.grid, s.search, Leftovers::BlockOut);
    finish(s, plan, params.weighting)
}

pub fn ordered_semantic_match(
    words1: &[String],
    words2: &[String],
    params: &WordMatchParams,
    kb: &SemanticKb,
) -> Result<MatchingBlocks> {
    ordered_words_match(words1, words2, params, &Semantic { kb })
}

pub fn unordered_semantic_match(
    words1: &[String],
    words2: &[String],
    params: &WordMatchParams,
    kb: &SemanticKb,
) -> Result<MatchingBlocks> {
    unordered_words_match(words1, words2, params, &Semantic { kb })
}

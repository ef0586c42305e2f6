//! Letter-level matchers over normalized names.

use crate::blocks::{Compared, MatchingBlocks, MatchingType, OneMatch, Span};
use crate::engine::{self, Block, Grid, Leftovers, Plan, SearchParams};
use crate::error::{Error, Result};
use crate::scoring::{aggregate_score, GlueWeighting, Weights};

pub const DEFAULT_MIN_LEN: usize = 2;

fn prepare(name1: &str, name2: &str, min_len: usize) -> Result<(Vec<char>, Vec<char>)> {
    if name1.is_empty() || name2.is_empty() {
        return Err(Error::invalid(
            "letter matching needs two non-empty normalized names",
        ));
    }
    if min_len == 0 {
        return Err(Error::invalid("min_len must be at least 1"));
    }
    Ok((name1.chars().collect(), name2.chars().collect()))
}

fn search_params(a: &[char], b: &[char], min_len: usize, weighting: GlueWeighting) -> SearchParams {
    let n_avg = (a.len() + b.len()) as f64 / 2.0;
    // identical names always match in full, even when shorter than min_len
    let min_len = if a == b {
        min_len.min(a.len())
    } else {
        min_len
    };
    SearchParams {
        min_len,
        weights: Weights::new(n_avg, weighting),
        prefer_letters: false,
    }
}

pub(crate) fn to_match(block: &Block) -> OneMatch {
    let length = block.idx1.len();
    let mut spans: Vec<Span> = Vec::new();
    for (&i, &j) in block.idx1.iter().zip(&block.idx2) {
        match spans.last_mut() {
            Some(s) if s.pos1 + s.length == i && s.pos2 + s.length == j => s.length += 1,
            _ => spans.push(Span {
                pos1: i,
                pos2: j,
                length: 1,
            }),
        }
    }
    OneMatch {
        pos1: block.idx1[0],
        pos2: block.idx2[0],
        length,
        letters: length,
        degree: length as f64,
        degrees: Vec::new(),
        spans: (spans.len() > 1).then_some(spans),
    }
}

fn finish(
    name1: &str,
    name2: &str,
    plan: Plan,
    weighting: GlueWeighting,
) -> Result<MatchingBlocks> {
    MatchingBlocks::build(
        Compared::Text(name1.to_string()),
        Compared::Text(name2.to_string()),
        MatchingType::Letters,
        plan.blocks.iter().map(to_match).collect(),
        weighting,
    )
}

/// Order-preserving letter match.
///
/// Anchors on a longest common substring of at least `min_len` letters and
/// recurses on both sides; among equally long anchors the one leading to the
/// best final score is kept.
pub fn ordered_match(
    name1: &str,
    name2: &str,
    min_len: usize,
    weighting: GlueWeighting,
) -> Result<MatchingBlocks> {
    let (a, b) = prepare(name1, name2, min_len)?;
    let plan = engine::ordered(
        &Grid::letters(&a, &b),
        search_params(&a, &b, min_len, weighting),
    );
    finish(name1, name2, plan, weighting)
}

/// Letter match allowing cross matches: the longest common substring is
/// taken, its letters are blocked out in both names, and the search repeats.
pub fn unordered_match(
    name1: &str,
    name2: &str,
    min_len: usize,
    weighting: GlueWeighting,
) -> Result<MatchingBlocks> {
    let (a, b) = prepare(name1, name2, min_len)?;
    let grid = Grid::letters(&a, &b);
    let plan = engine::unordered(
        &grid,
        search_params(&a, &b, min_len, weighting),
        Leftovers::BlockOut,
    );
    finish(name1, name2, plan, weighting)
}

/// Like [`unordered_match`], but matched letters are erased so that the
/// letters around them can later match as one block. Such blocks may be
/// discontinuous in the original names; see [`OneMatch::spans`].
pub fn unedit_match(
    name1: &str,
    name2: &str,
    min_len: usize,
    weighting: GlueWeighting,
) -> Result<MatchingBlocks> {
    let (a, b) = prepare(name1, name2, min_len)?;
    let grid = Grid::letters(&a, &b);
    let plan = engine::unordered(
        &grid,
        search_params(&a, &b, min_len, weighting),
        Leftovers::Erase,
    );
    finish(name1, name2, plan, weighting)
}

pub(crate) fn ordered_ratio_chars(
    a: &[char],
    b: &[char],
    min_len: usize,
    weighting: GlueWeighting,
) -> f64 {
    let plan = engine::ordered(
        &Grid::letters(a, b),
        search_params(a, b, min_len, weighting),
    );
    let matched: usize = plan.blocks.iter().map(|b| b.idx1.len()).sum();
    let glue = matched - plan.blocks.len();
    let n_avg = (a.len() + b.len()) as f64 / 2.0;
    aggregate_score(&vec![1.0; matched], glue as f64, n_avg, weighting)
        .expect("ordered blocks never exceed the glue slots")
}

pub(crate) fn plain_matched_letters(a: &[char], b: &[char]) -> usize {
    let n_avg = (a.len() + b.len()) as f64 / 2.0;
    let params = SearchParams {
        min_len: 1,
        weights: Weights::plain(n_avg),
        prefer_letters: false,
    };
    engine::ordered(&Grid::letters(a, b), params)
        .blocks
        .iter()
        .map(|b| b.idx1.len())
        .sum()
}

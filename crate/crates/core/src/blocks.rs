use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scoring::{aggregate_score, GlueWeighting};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchingType {
    Letters,
    Words,
}

impl fmt::Display for MatchingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchingType::Letters => "letters",
            MatchingType::Words => "words",
        })
    }
}

/// One side of a comparison: a normalized string or a list of words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Compared {
    Text(String),
    Words(Vec<String>),
}

impl Compared {
    pub fn element_count(&self) -> usize {
        match self {
            Compared::Text(s) => s.chars().count(),
            Compared::Words(w) => w.len(),
        }
    }
}

/// A contiguous piece of a match, in original element positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub pos1: usize,
    pub pos2: usize,
    pub length: usize,
}

/// One matched block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OneMatch {
    /// Position of the first element in the first name.
    pub pos1: usize,
    /// Position of the first element in the second name.
    pub pos2: usize,
    /// Number of matched elements.
    pub length: usize,
    /// Letters covered in the first name (equals `length` for letter matching).
    pub letters: usize,
    /// Sum of the element scores in this block.
    pub degree: f64,
    /// Per-word degrees, in block order. Empty for letter matches.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degrees: Vec<f64>,
    /// The original pieces of a block that is not contiguous in the original
    /// names (only produced by unedit matching).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spans: Option<Vec<Span>>,
}

impl OneMatch {
    pub fn is_contiguous(&self) -> bool {
        self.spans.is_none()
    }

    /// Every original `(pos1, pos2)` element pair in this block.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        match &self.spans {
            None => (0..self.length)
                .map(|k| (self.pos1 + k, self.pos2 + k))
                .collect(),
            Some(spans) => spans
                .iter()
                .flat_map(|s| (0..s.length).map(move |k| (s.pos1 + k, s.pos2 + k)))
                .collect(),
        }
    }

    fn element_scores(&self) -> Vec<f64> {
        if self.degrees.is_empty() {
            vec![1.0; self.length]
        } else {
            self.degrees.clone()
        }
    }
}

/// Full result of a comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchingBlocks {
    pub name_1: Compared,
    pub name_2: Compared,
    pub matching_type: MatchingType,
    pub ratio: f64,
    /// Matches sorted by `pos1`.
    pub matches: Vec<OneMatch>,
    /// Whether every block is contiguous in both names.
    pub cont_type: bool,
    pub continuity_heavy_weight: bool,
}

impl MatchingBlocks {
    pub(crate) fn build(
        name_1: Compared,
        name_2: Compared,
        matching_type: MatchingType,
        mut matches: Vec<OneMatch>,
        weighting: GlueWeighting,
    ) -> Result<Self> {
        matches.sort_by_key(|m| (m.pos1, m.pos2));
        let cont_type = matches.iter().all(OneMatch::is_contiguous);
        let mut blocks = Self {
            name_1,
            name_2,
            matching_type,
            ratio: 0.0,
            matches,
            cont_type,
            continuity_heavy_weight: weighting.continuity_heavy_weight,
        };
        blocks.ratio = blocks.rescore()?;
        Ok(blocks)
    }

    /// Number of matched glue elements.
    ///
    /// Inside a block every neighbouring pair is glued (for unedit blocks this
    /// is adjacency at the time of the match). Between contiguous blocks a
    /// glue counts when the last element of one and the first of the other are
    /// neighbours, in the same order, in both names.
    pub fn matched_glue(&self) -> usize {
        let inner: usize = self
            .matches
            .iter()
            .map(|m| m.length.saturating_sub(1))
            .sum();
        let mut across = 0;
        for a in self.matches.iter().filter(|m| m.is_contiguous()) {
            for b in self.matches.iter().filter(|m| m.is_contiguous()) {
                if a.pos1 + a.length == b.pos1 && a.pos2 + a.length == b.pos2 {
                    across += 1;
                }
            }
        }
        inner + across
    }

    /// Recomputes the ratio from the match list alone.
    pub fn rescore(&self) -> Result<f64> {
        let n1 = self.name_1.element_count();
        let n2 = self.name_2.element_count();
        if n1 == 0 || n2 == 0 {
            return Err(Error::invalid("cannot score an empty name"));
        }
        let n_avg = (n1 + n2) as f64 / 2.0;
        let scores: Vec<f64> = self
            .matches
            .iter()
            .flat_map(OneMatch::element_scores)
            .collect();
        let weighting = GlueWeighting {
            continuity_heavy_weight: self.continuity_heavy_weight,
        };
        aggregate_score(&scores, self.matched_glue() as f64, n_avg, weighting)
    }

    /// Swaps the roles of the two names.
    pub fn swapped(&self) -> Self {
        let mut out = self.clone();
        std::mem::swap(&mut out.name_1, &mut out.name_2);
        for m in &mut out.matches {
            std::mem::swap(&mut m.pos1, &mut m.pos2);
            if let Some(spans) = &mut m.spans {
                for s in spans {
                    std::mem::swap(&mut s.pos1, &mut s.pos2);
                }
            }
        }
        out.matches.sort_by_key(|m| (m.pos1, m.pos2));
        out
    }
}

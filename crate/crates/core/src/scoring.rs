//! Ratio formulas.
//!
//! A name of `n` elements (letters or words) is scored as if it had `2n - 1`
//! parts: the elements themselves and the `n - 1` glue elements joining
//! neighbours. With the default weighting all glue together is worth one
//! element, so `n` matched elements without continuity still beat `n - 1`
//! fully continuous ones. With heavy weighting every glue weighs as much as an
//! element. When the names differ in length `n` is the average element count.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letters;
use crate::semantic::SemanticKb;

/// Default minimum degree for two words to count as a match.
pub const DEFAULT_WORD_THRESHOLD: f64 = 2.0 / 3.0;

const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GlueWeighting {
    pub continuity_heavy_weight: bool,
}

impl GlueWeighting {
    pub const DEFAULT: Self = Self {
        continuity_heavy_weight: false,
    };
    pub const HEAVY: Self = Self {
        continuity_heavy_weight: true,
    };
}

/// Thresholded similarity of two words.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WordMatchDegree {
    pub value: f64,
    pub threshold: f64,
    /// The value was granted by a semantic relation rather than by spelling.
    pub semantic: bool,
}

impl WordMatchDegree {
    pub fn is_match(&self) -> bool {
        self.value > 0.0
    }
}

/// Per-element and per-glue weights for a given average element count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Weights {
    pub element: f64,
    pub glue: f64,
}

impl Weights {
    pub fn new(n_avg: f64, weighting: GlueWeighting) -> Self {
        if n_avg <= 1.0 {
            return Self {
                element: 1.0 / n_avg,
                glue: 0.0,
            };
        }
        if weighting.continuity_heavy_weight {
            let w = 1.0 / (2.0 * n_avg - 1.0);
            Self {
                element: w,
                glue: w,
            }
        } else {
            Self {
                element: 1.0 / (n_avg + 1.0),
                glue: 1.0 / ((n_avg - 1.0) * (n_avg + 1.0)),
            }
        }
    }

    /// Matched letters only, no continuity bonus.
    pub fn plain(n_avg: f64) -> Self {
        Self {
            element: 1.0 / n_avg,
            glue: 0.0,
        }
    }
}

pub(crate) fn validate_threshold(threshold: f64) -> Result<()> {
    if threshold > 0.0 && threshold <= 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "word match threshold {threshold} is outside (0, 1]"
        )))
    }
}

/// Matched letters over average length, `2|m| / (|a| + |b|)`, where the
/// matches come from longest-substring anchoring with single-letter blocks
/// allowed and no continuity bonus.
pub fn plain_ratio(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    let matched = letters::plain_matched_letters(&a, &b);
    2.0 * matched as f64 / (a.len() + b.len()) as f64
}

/// Continuity-weighted letter similarity of two words: an ordered letter
/// match with single-letter blocks and the default glue weighting.
pub fn word_ratio(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    letters::ordered_ratio_chars(&a, &b, 1, GlueWeighting::DEFAULT)
}

/// Degree of match between two words.
///
/// The lexical ratio counts when it reaches `threshold`. Otherwise, given a
/// knowledge base, a semantically related pair is granted exactly `threshold`,
/// but only when the words are also lexically dissimilar (ratio below the
/// default threshold); pairs that already look alike are scored by spelling.
pub fn word_match_degree(
    w1: &str,
    w2: &str,
    threshold: f64,
    kb: Option<&SemanticKb>,
) -> Result<WordMatchDegree> {
    validate_threshold(threshold)?;
    Ok(degree_with(word_ratio(w1, w2), w1, w2, threshold, kb))
}

pub(crate) fn degree_with(
    ratio: f64,
    w1: &str,
    w2: &str,
    threshold: f64,
    kb: Option<&SemanticKb>,
) -> WordMatchDegree {
    let mut degree = WordMatchDegree {
        value: 0.0,
        threshold,
        semantic: false,
    };
    if ratio >= threshold {
        degree.value = ratio;
    } else if let Some(kb) = kb {
        if ratio < DEFAULT_WORD_THRESHOLD && w1 != w2 && kb.semantically_related(w1, w2) {
            degree.value = threshold;
            degree.semantic = true;
        }
    }
    degree
}

/// Combines matched element scores and matched glue into a ratio in `[0, 1]`.
///
/// `n_avg` is the average element count of the two names. The element scores
/// are summed in sorted order so that the result does not depend on the order
/// in which matches were found.
pub fn aggregate_score(
    element_scores: &[f64],
    matched_glue: f64,
    n_avg: f64,
    weighting: GlueWeighting,
) -> Result<f64> {
    if n_avg.is_nan() || n_avg < 1.0 {
        return Err(Error::invalid(format!(
            "average element count {n_avg} is below 1"
        )));
    }
    let slots = n_avg - 1.0;
    if matched_glue < 0.0 || matched_glue > slots + EPS {
        return Err(Error::Internal(format!(
            "{matched_glue} matched glue elements but only {slots} glue slots"
        )));
    }
    if let Some(bad) = element_scores
        .iter()
        .find(|s| !(**s > 0.0 && **s <= 1.0 + EPS))
    {
        return Err(Error::Internal(format!(
            "element score {bad} outside (0, 1]"
        )));
    }
    let mut sorted = element_scores.to_vec();
    sorted.sort_by(f64::total_cmp);
    let total: f64 = sorted.iter().fold(0.0, |acc, s| acc + s);
    // single division so that a perfect match on integral n lands on exactly 1
    let score = if n_avg == 1.0 {
        total
    } else if weighting.continuity_heavy_weight {
        (total + matched_glue) / (2.0 * n_avg - 1.0)
    } else {
        (total * slots + matched_glue) / (slots * (n_avg + 1.0))
    };
    Ok(score.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn plain_ratio_examples() {
        assert_eq!(plain_ratio("digit", "digits"), 10.0 / 11.0);
        assert_eq!(plain_ratio("multiply", "multiplying"), 16.0 / 19.0);
        assert_eq!(plain_ratio("x", "x"), 1.0);
        assert_eq!(plain_ratio("multiword", "multiple"), 10.0 / 17.0);
        assert_eq!(plain_ratio("abc", "xyz"), 0.0);
    }

    #[test]
    fn aggregate_examples() {
        let s = aggregate_score(&[1.0; 14], 11.0, 16.0, GlueWeighting::DEFAULT).unwrap();
        assert!(close(s, 14.0 / 17.0 + 11.0 / 255.0, 1e-12));
        assert!(close(s, 0.867, 0.0005));
        let s = aggregate_score(&[1.0, 1.0], 0.0, 4.0, GlueWeighting::DEFAULT).unwrap();
        assert!(close(s, 0.4, 1e-12));
        let s =
            aggregate_score(&[10.0 / 11.0, 2.0 / 3.0], 1.0, 3.0, GlueWeighting::DEFAULT).unwrap();
        assert!(close(s, 0.519, 0.0005));
    }

    #[test]
    fn perfect_match_is_one() {
        for n in 1..40 {
            let scores = vec![1.0; n];
            let glue = (n - 1) as f64;
            for w in [GlueWeighting::DEFAULT, GlueWeighting::HEAVY] {
                let s = aggregate_score(&scores, glue, n as f64, w).unwrap();
                assert_eq!(s, 1.0, "n={n} {w:?}");
            }
        }
    }

    #[test]
    fn heavy_weighting_formula() {
        let s = aggregate_score(&[1.0, 1.0], 1.0, 4.0, GlueWeighting::HEAVY).unwrap();
        assert!(close(s, 3.0 / 7.0, 1e-12));
    }

    #[test]
    fn aggregate_rejects_inconsistent_input() {
        assert!(matches!(
            aggregate_score(&[1.0], 2.0, 2.0, GlueWeighting::DEFAULT),
            Err(Error::Internal(_))
        ));
        assert!(aggregate_score(&[1.0], 0.0, 0.5, GlueWeighting::DEFAULT).is_err());
        assert!(aggregate_score(&[0.0], 0.0, 2.0, GlueWeighting::DEFAULT).is_err());
        assert_eq!(
            aggregate_score(&[], 0.0, 3.0, GlueWeighting::DEFAULT).unwrap(),
            0.0
        );
    }

    #[test]
    fn single_element_names_score_directly() {
        assert_eq!(
            aggregate_score(&[0.8], 0.0, 1.0, GlueWeighting::DEFAULT).unwrap(),
            0.8
        );
        assert_eq!(
            aggregate_score(&[0.8], 0.0, 1.0, GlueWeighting::HEAVY).unwrap(),
            0.8
        );
    }

    #[test]
    fn word_degree_thresholding() {
        let d = word_match_degree("digit", "digits", DEFAULT_WORD_THRESHOLD, None).unwrap();
        assert!(close(d.value, 5.0 / 6.5 + 4.0 / (4.5 * 6.5), 1e-12));
        assert!(!d.semantic);
        let d = word_match_degree("multiword", "multiple", DEFAULT_WORD_THRESHOLD, None).unwrap();
        assert_eq!(d.value, 0.0);
        let d = word_match_degree("same", "same", 1.0, None).unwrap();
        assert_eq!(d.value, 1.0);
    }

    #[test]
    fn word_degree_semantic_floor() {
        let kb = SemanticKb::bundled();
        let d = word_match_degree("exponent", "power", DEFAULT_WORD_THRESHOLD, Some(&kb)).unwrap();
        assert_eq!(d.value, DEFAULT_WORD_THRESHOLD);
        assert!(d.semantic);
        let d = word_match_degree("exponent", "power", 1.0, Some(&kb)).unwrap();
        assert_eq!(d.value, 1.0);
        assert!(d.semantic);
        // lexically close pairs keep their spelling score even if related
        let d = word_match_degree("digit", "digits", 1.0, Some(&kb)).unwrap();
        assert_eq!(d.value, 0.0);
    }

    #[test]
    fn word_degree_rejects_bad_threshold() {
        for t in [0.0, -0.1, 1.5, f64::NAN] {
            assert!(matches!(
                word_match_degree("a", "a", t, None),
                Err(Error::InvalidArgument(_))
            ));
        }
    }
}

use proptest::prelude::*;

use namematch::letters::{ordered_match, unedit_match, unordered_match};
use namematch::scoring::{aggregate_score, word_match_degree};
use namematch::tokenizer::{normalize, split_words};
use namematch::words::{ordered_words_match, unordered_words_match, Lexical, WordMatchParams};
use namematch::{
    CompareParams, GlueWeighting, MatchConfig, Method, NameComparer, NumbersBehavior, SemanticKb,
};

const D: GlueWeighting = GlueWeighting::DEFAULT;
const H: GlueWeighting = GlueWeighting::HEAVY;

fn numbers() -> impl Strategy<Value = NumbersBehavior> {
    prop_oneof![
        Just(NumbersBehavior::SeparateWord),
        Just(NumbersBehavior::Ignore),
        Just(NumbersBehavior::Leave)
    ]
}

fn word_list() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec("[a-d]{1,5}", 1..6)
}

proptest! {
    #[test]
    fn tokenizer_invariants(name in "[a-zA-Z0-9_ ]{1,20}", nb in numbers(), cs: bool) {
        let mut config = MatchConfig::default();
        config.numbers_behavior = nb;
        config.case_sensitivity = cs;
        let normalized = normalize(&name, &config).unwrap();
        let words = split_words(&name, &config).unwrap();
        prop_assert!(!normalized.chars().any(|c| config.is_separator(c)));
        prop_assert!(words.iter().all(|w| !w.is_empty()));
        prop_assert_eq!(words.concat(), normalized.clone());
        if nb == NumbersBehavior::Ignore {
            prop_assert!(!normalized.chars().any(|c| c.is_ascii_digit()));
        }
        if !cs {
            prop_assert_eq!(normalized.to_lowercase(), normalized);
        }
    }

    #[test]
    fn splitting_is_idempotent(name in "[a-zA-Z0-9_]{1,20}") {
        let config = MatchConfig::default();
        for w in split_words(&name, &config).unwrap() {
            prop_assert_eq!(split_words(&w, &config).unwrap(), vec![w.clone()]);
        }
    }

    #[test]
    fn perfect_match_is_one(n in 1usize..40, heavy: bool) {
        let w = if heavy { H } else { D };
        prop_assert_eq!(aggregate_score(&vec![1.0; n], (n - 1) as f64, n as f64, w).unwrap(), 1.0);
    }

    #[test]
    fn adding_elements_or_glue_never_hurts(k in 1usize..10, extra in 1usize..10, heavy: bool) {
        let w = if heavy { H } else { D };
        let n = (k + extra) as f64 + 0.5;
        let base = aggregate_score(&vec![1.0; k], (k - 1) as f64, n, w).unwrap();
        let more = aggregate_score(&vec![1.0; k + 1], (k - 1) as f64, n, w).unwrap();
        let glued = aggregate_score(&vec![1.0; k + 1], k as f64, n, w).unwrap();
        prop_assert!(more >= base && glued >= more);
    }

    #[test]
    fn longer_names_lower_the_score(k in 1usize..8, n in 8usize..30) {
        let s = |n: f64| aggregate_score(&vec![1.0; k], 0.0, n, D).unwrap();
        prop_assert!(s(n as f64) > s(n as f64 + 0.5));
    }

    #[test]
    fn letter_matchers_are_symmetric_and_bounded(a in "[a-f]{1,12}", b in "[a-f]{1,12}", min_len in 1usize..4, heavy: bool) {
        let w = if heavy { H } else { D };
        for f in [ordered_match, unordered_match, unedit_match] {
            let r1 = f(&a, &b, min_len, w).unwrap();
            let r2 = f(&b, &a, min_len, w).unwrap();
            prop_assert_eq!(r1.ratio, r2.ratio);
            prop_assert!((0.0..=1.0).contains(&r1.ratio));
            prop_assert_eq!(r1.rescore().unwrap(), r1.ratio);
            if a != b {
                prop_assert!(r1.matches.iter().all(|m| m.length >= min_len));
            }
        }
    }

    #[test]
    fn ordered_blocks_keep_order(a in "[a-d]{1,12}", b in "[a-d]{1,12}") {
        let r = ordered_match(&a, &b, 1, D).unwrap();
        for w in r.matches.windows(2) {
            prop_assert!(w[0].pos1 + w[0].length <= w[1].pos1);
            prop_assert!(w[0].pos2 + w[0].length <= w[1].pos2);
        }
        let ua = unordered_match(&a, &b, 1, D).unwrap().ratio;
        let ue = unedit_match(&a, &b, 1, D).unwrap().ratio;
        prop_assert!(ue >= ua);
    }

    #[test]
    fn letter_blocks_really_match(a in "[a-c]{1,10}", b in "[a-c]{1,10}") {
        let (ca, cb): (Vec<char>, Vec<char>) = (a.chars().collect(), b.chars().collect());
        for f in [ordered_match, unordered_match, unedit_match] {
            for m in f(&a, &b, 2, D).unwrap().matches {
                prop_assert!(m.pairs().iter().all(|&(i, j)| ca[i] == cb[j]));
            }
        }
    }

    #[test]
    fn word_matchers_are_symmetric(w1 in word_list(), w2 in word_list(), t in 0.3f64..=1.0) {
        let params = WordMatchParams::with_threshold(t);
        for f in [ordered_words_match, unordered_words_match] {
            let r1 = f(&w1, &w2, &params, &Lexical).unwrap();
            let r2 = f(&w2, &w1, &params, &Lexical).unwrap();
            prop_assert_eq!(r1.ratio, r2.ratio);
            prop_assert!((0.0..=1.0).contains(&r1.ratio));
            prop_assert!(r1.matches.iter().flat_map(|m| &m.degrees).all(|&d| d >= t));
        }
    }

    #[test]
    fn word_degree_respects_threshold(a in "[a-e]{1,8}", b in "[a-e]{1,8}", t in 0.1f64..=1.0) {
        let kb = SemanticKb::bundled();
        for kb in [None, Some(&kb)] {
            let d = word_match_degree(&a, &b, t, kb).unwrap();
            prop_assert!(d.value == 0.0 || d.value >= t);
            prop_assert!(!d.semantic || d.value >= t);
            prop_assert_eq!(d.value, word_match_degree(&b, &a, t, kb).unwrap().value);
        }
    }

    #[test]
    fn semantic_relation_is_symmetric(a in "[a-e]{1,6}", b in "[a-e]{1,6}") {
        let kb = SemanticKb::bundled();
        prop_assert_eq!(kb.semantically_related(&a, &b), kb.semantically_related(&b, &a));
        prop_assert!(!kb.is_plural_pair(&a, &a));
        prop_assert!(!kb.is_abbreviation_pair(&a, &a));
    }

    #[test]
    fn style_does_not_matter(words in prop::collection::vec("[a-z]{2,6}", 1..5)) {
        let snake = words.join("_");
        let camel: String = words
            .iter()
            .enumerate()
            .map(|(i, w)| if i == 0 { w.clone() } else { w[..1].to_uppercase() + &w[1..] })
            .collect();
        let c = NameComparer::with_names(&snake, &camel).unwrap();
        for m in Method::ALL {
            prop_assert_eq!(c.compare(m, &CompareParams::default()).unwrap().ratio, 1.0);
        }
    }
}

#[test]
fn single_words_are_consistent() {
    let d = CompareParams::default();
    let same = NameComparer::with_names("count", "count").unwrap();
    let unrelated = NameComparer::with_names("count", "xyz").unwrap();
    for m in Method::ALL {
        assert_eq!(same.compare(m, &d).unwrap().ratio, 1.0, "{m}");
        if m.is_word_level() {
            assert_eq!(unrelated.compare(m, &d).unwrap().ratio, 0.0, "{m}");
        }
    }
}

#[test]
fn lowering_the_threshold_helps_on_examples() {
    let c = NameComparer::with_names("multiword_name", "multiple_words_name").unwrap();
    let mut last = 0.0;
    for t in [1.0, 2.0 / 3.0, 0.57, 0.5, 0.3] {
        let r = c
            .compare(
                Method::OrderedWords,
                &CompareParams {
                    min_word_match_degree: t,
                    ..Default::default()
                },
            )
            .unwrap()
            .ratio;
        assert!(r >= last, "threshold {t}: {r} < {last}");
        last = r;
    }
}

// The anchor is the run with the highest total degree, so a looser threshold
// can promote a long run of partial matches that crowds out better blocks.
#[test]
fn lowering_the_threshold_can_hurt() {
    let w = |s: &str| s.split('_').map(str::to_string).collect::<Vec<_>>();
    let (a, b) = (w("bbc_ba_bca"), w("ba_a_bca"));
    let strict =
        ordered_words_match(&a, &b, &WordMatchParams::with_threshold(0.68), &Lexical).unwrap();
    let loose =
        ordered_words_match(&a, &b, &WordMatchParams::with_threshold(0.32), &Lexical).unwrap();
    assert_eq!(strict.ratio, 0.5);
    assert!(loose.ratio < strict.ratio, "{}", loose.ratio);
}

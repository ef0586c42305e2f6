//! Name normalization and word splitting.
//!
//! A name is broken into words on separator characters, around digit runs
//! (depending on [`NumbersBehavior`]) and on camelCase boundaries. Letter-level
//! matchers work on the normalized string, word-level matchers on the word list.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_SEPARATORS: [char; 4] = ['_', ' ', '\t', '\n'];

pub const DEFAULT_STOP_WORDS: [&str; 17] = [
    "a", "are", "as", "at", "be", "but", "by", "for", "if", "of", "on", "so", "the", "there",
    "was", "where", "were",
];

/// How digits inside a name are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NumbersBehavior {
    /// A digit run is a word of its own.
    #[default]
    SeparateWord,
    /// Digits are erased (and still break words).
    Ignore,
    /// Digits behave like lowercase letters.
    Leave,
}

impl FromStr for NumbersBehavior {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "separate" | "separate_word" | "separate-word" => Ok(Self::SeparateWord),
            "ignore" => Ok(Self::Ignore),
            "leave" => Ok(Self::Leave),
            other => Err(Error::invalid(format!(
                "unknown numbers behavior '{other}'"
            ))),
        }
    }
}

impl fmt::Display for NumbersBehavior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SeparateWord => "separate",
            Self::Ignore => "ignore",
            Self::Leave => "leave",
        })
    }
}

/// Knobs that govern normalization and splitting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchConfig {
    pub case_sensitivity: bool,
    word_separators: BTreeSet<char>,
    pub support_camel_case: bool,
    pub numbers_behavior: NumbersBehavior,
    stop_words: Vec<String>,
}

impl Default for MatchConfig {
    fn default() -> Self {
        Self {
            case_sensitivity: false,
            word_separators: DEFAULT_SEPARATORS.into_iter().collect(),
            support_camel_case: true,
            numbers_behavior: NumbersBehavior::SeparateWord,
            stop_words: DEFAULT_STOP_WORDS.iter().map(|w| w.to_string()).collect(),
        }
    }
}

impl MatchConfig {
    pub fn word_separators(&self) -> &BTreeSet<char> {
        &self.word_separators
    }

    pub fn set_word_separators<I: IntoIterator<Item = char>>(&mut self, separators: I) {
        self.word_separators = separators.into_iter().collect();
    }

    pub fn stop_words(&self) -> &[String] {
        &self.stop_words
    }

    /// Replaces the stop-word list. Words are lowercased and deduplicated,
    /// keeping first-occurrence order.
    pub fn set_stop_words<I, S>(&mut self, words: I) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for w in words {
            let w = w.as_ref().trim();
            if w.is_empty() {
                return Err(Error::invalid("stop words must be non-empty"));
            }
            let w = lowercase(w);
            if seen.insert(w.clone()) {
                list.push(w);
            }
        }
        self.stop_words = list;
        Ok(())
    }

    pub fn is_stop_word(&self, word: &str) -> bool {
        self.stop_words.iter().any(|s| s == word)
    }

    pub fn is_separator(&self, c: char) -> bool {
        self.word_separators.contains(&c)
    }

    /// Word-level matching needs at least one way to break a name.
    pub fn validate_for_words(&self) -> Result<()> {
        if self.word_separators.is_empty() && !self.support_camel_case {
            return Err(Error::invalid(
                "word matching needs word separators or camelCase support",
            ));
        }
        Ok(())
    }
}

/// A name together with its normalized form and its words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenizedName {
    pub original: String,
    pub normalized: String,
    pub words: Vec<String>,
}

impl TokenizedName {
    pub fn new(name: &str, config: &MatchConfig) -> Result<Self> {
        Ok(Self {
            original: name.to_string(),
            normalized: normalize(name, config)?,
            words: split_words(name, config)?,
        })
    }
}

fn fold_char(c: char) -> char {
    let mut lower = c.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

fn lowercase(s: &str) -> String {
    s.chars().map(fold_char).collect()
}

fn is_digit(c: char) -> bool {
    c.is_ascii_digit()
}

pub fn normalize(name: &str, config: &MatchConfig) -> Result<String> {
    if name.is_empty() {
        return Err(Error::invalid("name must be non-empty"));
    }
    let ignore_digits = config.numbers_behavior == NumbersBehavior::Ignore;
    Ok(name
        .chars()
        .filter(|&c| !config.is_separator(c) && !(ignore_digits && is_digit(c)))
        .map(|c| {
            if config.case_sensitivity {
                c
            } else {
                fold_char(c)
            }
        })
        .collect())
}

pub fn split_words(name: &str, config: &MatchConfig) -> Result<Vec<String>> {
    if name.is_empty() {
        return Err(Error::invalid("name must be non-empty"));
    }
    let mut words = Vec::new();
    for chunk in name.split(|c| config.is_separator(c)) {
        for piece in split_numbers(chunk, config.numbers_behavior) {
            if config.support_camel_case {
                let leave = config.numbers_behavior == NumbersBehavior::Leave;
                words.extend(split_camel(&piece, leave));
            } else {
                words.push(piece);
            }
        }
    }
    Ok(words
        .into_iter()
        .filter(|w| !w.is_empty())
        .map(|w| {
            if config.case_sensitivity {
                w
            } else {
                lowercase(&w)
            }
        })
        .collect())
}

fn split_numbers(chunk: &str, behavior: NumbersBehavior) -> Vec<String> {
    if behavior == NumbersBehavior::Leave {
        return vec![chunk.to_string()];
    }
    let mut pieces: Vec<String> = Vec::new();
    let mut current = String::new();
    let mut in_digits = false;
    for c in chunk.chars() {
        let digit = is_digit(c);
        if digit != in_digits && !current.is_empty() {
            pieces.push(std::mem::take(&mut current));
        }
        in_digits = digit;
        if digit && behavior == NumbersBehavior::Ignore {
            continue;
        }
        current.push(c);
    }
    if !current.is_empty() {
        pieces.push(current);
    }
    pieces
}

fn split_camel(piece: &str, digits_are_lower: bool) -> Vec<String> {
    let chars: Vec<char> = piece.chars().collect();
    let is_lower = |c: char| c.is_lowercase() || (digits_are_lower && is_digit(c));
    let mut words = Vec::new();
    let mut start = 0;
    for k in 1..chars.len() {
        let upper_then_lower =
            chars[k].is_uppercase() && chars.get(k + 1).is_some_and(|&n| is_lower(n));
        let lower_then_upper = is_lower(chars[k - 1]) && chars[k].is_uppercase();
        if upper_then_lower || lower_then_upper {
            words.push(chars[start..k].iter().collect());
            start = k;
        }
    }
    words.push(chars[start..].iter().collect());
    words
}

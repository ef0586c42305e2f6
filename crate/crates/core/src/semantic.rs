//! Synonyms, singular/plural pairs and abbreviations.
//!
//! The knowledge base is built once and then only queried. A small thesaurus
//! and plural-exception list ship with the crate so that semantic matching
//! works offline; full data files can be loaded from disk instead.

use std::collections::{HashMap, HashSet};
use std::env;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use log::warn;
use serde_json::Value;

use crate::error::{Error, Result};

/// Environment variable naming a directory with `thesaurus.jsonl` and `noun.exc`.
pub const DATA_DIR_ENV: &str = "NAMEMATCH_DATA_DIR";
pub const THESAURUS_FILE: &str = "thesaurus.jsonl";
pub const PLURAL_EXCEPTIONS_FILE: &str = "noun.exc";
pub const DEFAULT_MIN_ABBREV_LEN: usize = 3;

const BUNDLED_THESAURUS: &str = include_str!("../data/thesaurus.jsonl");
const BUNDLED_PLURALS: &str = include_str!("../data/noun.exc");

/// Field names of a thesaurus record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThesaurusFields {
    pub word: String,
    pub synonyms: String,
}

impl Default for ThesaurusFields {
    fn default() -> Self {
        Self {
            word: "word".into(),
            synonyms: "synonyms".into(),
        }
    }
}

/// Outcome of loading a line-oriented source.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub records: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Relation(HashMap<String, HashSet<String>>);

impl Relation {
    fn insert(&mut self, a: &str, b: &str) {
        if a == b {
            return;
        }
        self.0
            .entry(a.to_string())
            .or_default()
            .insert(b.to_string());
        self.0
            .entry(b.to_string())
            .or_default()
            .insert(a.to_string());
    }

    fn contains(&self, a: &str, b: &str) -> bool {
        self.0.get(a).is_some_and(|s| s.contains(b))
    }

    fn pairs(&self) -> usize {
        self.0.values().map(HashSet::len).sum::<usize>() / 2
    }

    fn merge(&mut self, other: Relation) {
        for (a, set) in other.0 {
            self.0.entry(a).or_default().extend(set);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticKb {
    synonyms: Relation,
    plural_exceptions: Relation,
    pub min_abbrev_len: usize,
}

impl Default for SemanticKb {
    fn default() -> Self {
        Self {
            synonyms: Relation::default(),
            plural_exceptions: Relation::default(),
            min_abbrev_len: DEFAULT_MIN_ABBREV_LEN,
        }
    }
}

fn is_single_word(w: &str) -> bool {
    !w.is_empty() && !w.chars().any(char::is_whitespace)
}

impl SemanticKb {
    /// No synonyms and no exceptions; only the built-in plural and
    /// abbreviation rules apply.
    pub fn empty() -> Self {
        Self::default()
    }

    /// The excerpt data shipped with the crate.
    pub fn bundled() -> Self {
        let (mut kb, _) =
            Self::load_thesaurus(BUNDLED_THESAURUS.as_bytes(), &ThesaurusFields::default())
                .expect("bundled thesaurus is readable");
        kb.merge(
            Self::load_plural_exceptions(BUNDLED_PLURALS.as_bytes())
                .expect("bundled exceptions are readable"),
        );
        kb
    }

    /// Loads from explicit files, falling back to the data directory named by
    /// [`DATA_DIR_ENV`] and then to the bundled data for whichever is missing.
    pub fn from_sources(
        thesaurus: Option<&Path>,
        plural_exceptions: Option<&Path>,
    ) -> Result<Self> {
        let data_dir = env::var_os(DATA_DIR_ENV).map(PathBuf::from);
        let pick = |explicit: Option<&Path>, file: &str| {
            explicit.map(Path::to_path_buf).or_else(|| {
                data_dir
                    .as_ref()
                    .map(|d| d.join(file))
                    .filter(|p| p.exists())
            })
        };
        let mut kb = match pick(thesaurus, THESAURUS_FILE) {
            Some(path) => {
                Self::load_thesaurus(open(&path)?, &ThesaurusFields::default())
                    .map_err(|e| with_path(e, &path))?
                    .0
            }
            None => {
                Self::load_thesaurus(BUNDLED_THESAURUS.as_bytes(), &ThesaurusFields::default())?.0
            }
        };
        let plurals = match pick(plural_exceptions, PLURAL_EXCEPTIONS_FILE) {
            Some(path) => {
                Self::load_plural_exceptions(open(&path)?).map_err(|e| with_path(e, &path))?
            }
            None => Self::load_plural_exceptions(BUNDLED_PLURALS.as_bytes())?,
        };
        kb.merge(plurals);
        Ok(kb)
    }

    /// Reads thesaurus records, one JSON object per line, each holding a
    /// headword and an array of synonyms. Malformed lines are skipped and
    /// counted. Multi-word entries are dropped.
    pub fn load_thesaurus<R: BufRead>(
        reader: R,
        fields: &ThesaurusFields,
    ) -> Result<(Self, LoadReport)> {
        let mut kb = Self::empty();
        let mut report = LoadReport::default();
        for line in reader.lines() {
            let line = line.map_err(|source| Error::Io {
                path: PathBuf::from("<thesaurus>"),
                source,
            })?;
            if line.trim().is_empty() {
                continue;
            }
            let Some((word, synonyms)) = parse_record(&line, fields) else {
                report.skipped += 1;
                continue;
            };
            report.records += 1;
            let word = word.to_lowercase();
            if !is_single_word(&word) {
                continue;
            }
            for syn in synonyms
                .iter()
                .map(|s| s.to_lowercase())
                .filter(|s| is_single_word(s))
            {
                kb.synonyms.insert(&word, &syn);
            }
        }
        if report.skipped > 0 {
            warn!("skipped {} malformed thesaurus lines", report.skipped);
        }
        if report.records == 0 {
            warn!("thesaurus source contained no valid records");
        }
        Ok((kb, report))
    }

    /// Reads irregular plural forms: whitespace-separated tokens per line,
    /// the inflected form first, then one or more base forms.
    pub fn load_plural_exceptions<R: BufRead>(reader: R) -> Result<Self> {
        let mut kb = Self::empty();
        for line in reader.lines() {
            let line = line.map_err(|source| Error::Io {
                path: PathBuf::from("<plural exceptions>"),
                source,
            })?;
            let mut tokens = line.split_whitespace().map(str::to_lowercase);
            let Some(inflected) = tokens.next() else {
                continue;
            };
            for base in tokens {
                kb.plural_exceptions.insert(&inflected, &base);
            }
        }
        Ok(kb)
    }

    pub fn merge(&mut self, other: SemanticKb) {
        self.synonyms.merge(other.synonyms);
        self.plural_exceptions.merge(other.plural_exceptions);
    }

    pub fn add_synonyms(&mut self, a: &str, b: &str) {
        self.synonyms.insert(&a.to_lowercase(), &b.to_lowercase());
    }

    pub fn synonym_pairs(&self) -> usize {
        self.synonyms.pairs()
    }

    pub fn plural_exception_pairs(&self) -> usize {
        self.plural_exceptions.pairs()
    }

    pub fn are_synonyms(&self, a: &str, b: &str) -> bool {
        self.synonyms.contains(a, b)
    }

    /// Singular/plural: one word is the other plus "s" or "es", or the pair
    /// is a listed irregular form.
    pub fn is_plural_pair(&self, a: &str, b: &str) -> bool {
        let suffixed = |long: &str, short: &str| {
            long.strip_prefix(short)
                .is_some_and(|rest| rest == "s" || rest == "es")
        };
        suffixed(a, b) || suffixed(b, a) || self.plural_exceptions.contains(a, b)
    }

    /// Abbreviation: the shorter word is a proper prefix of the longer one
    /// and has at least `min_abbrev_len` letters.
    pub fn is_abbreviation_pair(&self, a: &str, b: &str) -> bool {
        let (short, long) = if a.chars().count() <= b.chars().count() {
            (a, b)
        } else {
            (b, a)
        };
        short.len() < long.len()
            && short.chars().count() >= self.min_abbrev_len
            && long.starts_with(short)
    }

    pub fn semantically_related(&self, a: &str, b: &str) -> bool {
        a != b
            && (self.are_synonyms(a, b)
                || self.is_plural_pair(a, b)
                || self.is_abbreviation_pair(a, b))
    }
}

fn parse_record(line: &str, fields: &ThesaurusFields) -> Option<(String, Vec<String>)> {
    let value: Value = serde_json::from_str(line).ok()?;
    let word = value.get(&fields.word)?.as_str()?.to_string();
    let synonyms = value
        .get(&fields.synonyms)?
        .as_array()?
        .iter()
        .filter_map(|s| s.as_str().map(str::to_string))
        .collect();
    Some((word, synonyms))
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn with_path(err: Error, path: &Path) -> Error {
    match err {
        Error::Io { source, .. } => Error::Io {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    }
}

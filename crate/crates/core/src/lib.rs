//! Similarity of identifier names.
//!
//! Names are split into words (separators, camelCase, digits) and compared
//! letter by letter or word by word. Matchers return [`MatchingBlocks`]: the
//! matched blocks plus a ratio in `[0, 1]` that rewards continuity, so
//! `aaa_bbb_ccc` vs `aaa_bbb_ddd` scores higher than `aaa_ddd_ccc` vs
//! `aaa_bbb_ccc` even though both share two words.
//!
//! ```
//! use namematch::{CompareParams, Method, NameComparer};
//!
//! let c = NameComparer::with_names("FirstLightAFire", "LightTheFireFirst").unwrap();
//! let r = c.compare(Method::Ordered, &CompareParams::default()).unwrap();
//! assert!((r.ratio - 0.557).abs() < 0.001);
//! ```

pub mod baselines;
pub mod blocks;
#[cfg(feature = "cli")]
pub mod cli;
mod engine;
pub mod error;
pub mod facade;
pub mod letters;
pub mod scoring;
pub mod semantic;
pub mod tokenizer;
pub mod words;

pub use blocks::{Compared, MatchingBlocks, MatchingType, OneMatch, Span};
pub use error::{Error, Result};
pub use facade::{AnyMethod, BaselineMethod, CompareParams, KbSource, Method, NameComparer};
pub use scoring::{GlueWeighting, WordMatchDegree, DEFAULT_WORD_THRESHOLD};
pub use semantic::SemanticKb;
pub use tokenizer::{MatchConfig, NumbersBehavior, TokenizedName};

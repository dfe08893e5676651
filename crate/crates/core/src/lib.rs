//! Cross-lingual news similarity between English and Urdu articles.
//!
//! Both sides of the comparison are projected onto a shared English/Urdu
//! transliteration lexicon: every article becomes a vector of lexicon-term
//! counts, and Urdu articles are ranked against an English query by cosine
//! similarity.
//!
//! The stages, in pipeline order:
//!
//! - [`corpus`]: CSV ingestion and persistence of news articles.
//! - [`normalize`]: lowercasing and punctuation stripping for English text.
//! - [`urdu_tokenizer`]: joiner/non-joiner aware Urdu tokenization.
//! - [`lexicon`]: the transliteration lexicon and its indexes.
//! - [`features`]: lexicon-indexed count vectors.
//! - [`similarity`]: cosine similarity and distance metrics.
//! - [`ranking`]: top-k selection and the percent table.
//! - [`pipeline`]: end-to-end query and evaluation runs.

pub mod corpus;
pub mod features;
pub mod lexicon;
pub mod normalize;
pub mod pipeline;
pub mod ranking;
pub mod similarity;
mod tokens;
pub mod urdu_tokenizer;

pub use corpus::{Article, Category, Corpus, CorpusError, Ingest, Language};
pub use features::{FeatureVector, Side};
pub use lexicon::{Lexicon, LexiconEntry, LexiconError, LexiconStats};
pub use normalize::{normalize_english, tokenize_english, NormalizedText};
pub use pipeline::{Direction, OutputFormat, PipelineConfig, PipelineError};
pub use ranking::{Ranked, RankedResult};
pub use similarity::{Metric, SimilarityError, SimilarityScore};
pub use tokens::TokenStream;
pub use urdu_tokenizer::{CharClass, WordList};

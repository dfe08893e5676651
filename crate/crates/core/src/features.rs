//! Lexicon-indexed bag-of-words count vectors.
//!
//! Component `i` of a vector counts how many tokens of an article matched
//! lexicon entry `i`. English tokens match an entry's English word; Urdu
//! tokens match any of its Urdu variants, and an Urdu spelling shared by
//! several entries increments all of them. Matching is whole-token.

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{Corpus, Language};
use crate::lexicon::Lexicon;
use crate::normalize::{normalize_english, tokenize_english};
use crate::tokens::TokenStream;
use crate::urdu_tokenizer::{tokenize_urdu, WordList};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    EnglishSide,
    UrduSide,
}

impl From<Language> for Side {
    fn from(lang: Language) -> Self {
        match lang {
            Language::English => Side::EnglishSide,
            Language::Urdu => Side::UrduSide,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeatureVector {
    counts: Vec<u32>,
    pub article_index: usize,
    pub side: Side,
}

impl FeatureVector {
    pub fn zeros(len: usize, side: Side) -> Self {
        FeatureVector {
            counts: vec![0; len],
            article_index: 0,
            side,
        }
    }

    pub fn from_counts(counts: Vec<u32>, article_index: usize, side: Side) -> Self {
        FeatureVector {
            counts,
            article_index,
            side,
        }
    }

    pub fn with_index(mut self, article_index: usize) -> Self {
        self.article_index = article_index;
        self
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }
}

impl AsRef<[u32]> for FeatureVector {
    fn as_ref(&self) -> &[u32] {
        &self.counts
    }
}

/// Counts normalized English tokens against the English side of `lex`.
pub fn vectorize_english(tokens: &TokenStream, lex: &Lexicon) -> FeatureVector {
    let mut v = FeatureVector::zeros(lex.len(), Side::EnglishSide);
    for t in tokens.iter() {
        if let Some(id) = lex.lookup_english(t) {
            v.counts[id] += 1;
        }
    }
    v
}

/// Counts ZWNJ-free Urdu tokens against every Urdu variant in `lex`.
pub fn vectorize_urdu(tokens: &TokenStream, lex: &Lexicon) -> FeatureVector {
    let mut v = FeatureVector::zeros(lex.len(), Side::UrduSide);
    for t in tokens.iter() {
        for &id in lex.lookup_urdu(t) {
            v.counts[id] += 1;
        }
    }
    v
}

/// Tokenizes an article body the way its language requires.
pub fn tokenize_body(body: &str, language: Language, words: &WordList) -> TokenStream {
    match language {
        Language::English => tokenize_english(&normalize_english(body)),
        Language::Urdu => tokenize_urdu(body, words),
    }
}

/// Tokenizes and vectorizes one body.
pub fn vectorize_text(
    body: &str,
    language: Language,
    lex: &Lexicon,
    words: &WordList,
) -> FeatureVector {
    let tokens = tokenize_body(body, language, words);
    match language {
        Language::English => vectorize_english(&tokens, lex),
        Language::Urdu => vectorize_urdu(&tokens, lex),
    }
}

/// One vector per article, in corpus order. `words` is ignored for English
/// corpora.
pub fn vectorize_corpus(corpus: &Corpus, lex: &Lexicon, words: &WordList) -> Vec<FeatureVector> {
    let language = corpus.language();
    corpus
        .articles()
        .par_iter()
        .map(|a| vectorize_text(&a.body, language, lex, words).with_index(a.index))
        .collect()
}

/// Renders vectors as CSV: `article_index` followed by one column per
/// lexicon entry, headed by its English word.
pub fn counts_csv(vectors: &[FeatureVector], lex: &Lexicon) -> Result<String, csv::Error> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut header = vec!["article_index".to_owned()];
    header.extend(lex.entries().iter().map(|e| e.english.clone()));
    w.write_record(&header)?;
    for v in vectors {
        let mut row = Vec::with_capacity(v.len() + 1);
        row.push(v.article_index.to_string());
        row.extend(v.counts().iter().map(u32::to_string));
        w.write_record(&row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv writer emits the UTF-8 it was given"))
}

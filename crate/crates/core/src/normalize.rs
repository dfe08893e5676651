//! English text normalization: case folding, punctuation and symbol
//! stripping, whitespace collapsing.
//!
//! Urdu text is never passed through here; it goes straight to
//! [`crate::urdu_tokenizer`].

use std::fmt;

use once_cell::sync::Lazy;
use regex::Regex;

use crate::tokens::TokenStream;

/// Unicode general categories P* and S*.
static PUNCT_OR_SYMBOL: Lazy<Regex> = Lazy::new(|| Regex::new(r"[\p{P}\p{S}]").unwrap());

/// Returns true if `ch` is in a Unicode punctuation or symbol category.
pub fn is_punct_or_symbol(ch: char) -> bool {
    let mut buf = [0u8; 4];
    PUNCT_OR_SYMBOL.is_match(ch.encode_utf8(&mut buf))
}

/// Lowercased, punctuation-free, single-spaced English text.
///
/// Only [`normalize_english`] constructs one, so holding a `NormalizedText`
/// means the invariants hold.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NormalizedText(String);

impl NormalizedText {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NormalizedText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for NormalizedText {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Lowercases `raw`, replaces every punctuation or symbol character with a
/// space and collapses whitespace runs to single spaces.
///
/// Punctuation turns into a boundary rather than vanishing, so `"U.S."`
/// becomes `"u s"`. Letters and digits keep their order.
pub fn normalize_english(raw: &str) -> NormalizedText {
    let lowered = raw.to_lowercase();
    let spaced = PUNCT_OR_SYMBOL.replace_all(&lowered, " ");
    let mut out = String::with_capacity(spaced.len());
    for word in spaced.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    NormalizedText(out)
}

/// Splits normalized text into its space-separated tokens.
pub fn tokenize_english(norm: &NormalizedText) -> TokenStream {
    norm.0
        .split(' ')
        .filter(|t| !t.is_empty())
        .map(str::to_owned)
        .collect()
}

//! Rule-based Urdu tokenization.
//!
//! Urdu letters either join the following letter cursively (joiners) or
//! never do (non-joiners). A word boundary that was typed without a space
//! can therefore only hide right after a non-joiner. Bodies are split on
//! whitespace and punctuation first; each resulting chunk is then
//! segmented against a [`WordList`] by longest-first dictionary matching,
//! with split points restricted to post-non-joiner positions.
//!
//! ZWNJ (U+200C) is treated as a boundary marker. It is stripped from
//! emitted tokens and, in the canonical chunk form produced by
//! [`normalize_zwnj`], appears exactly at validated boundaries.

use std::collections::HashSet;
use std::fs;
use std::io;
use std::path::Path;

use once_cell::sync::Lazy;
use regex::Regex;

use crate::tokens::TokenStream;

pub const ZWNJ: char = '\u{200C}';

/// ب پ ت ث ج چ ح خ س ش ص ض ط ظ ع غ ف ق ک گ ل م ن ہ ی
pub const JOINERS: [char; 25] = [
    '\u{0628}', '\u{067E}', '\u{062A}', '\u{062B}', '\u{062C}', '\u{0686}', '\u{062D}', '\u{062E}',
    '\u{0633}', '\u{0634}', '\u{0635}', '\u{0636}', '\u{0637}', '\u{0638}', '\u{0639}', '\u{063A}',
    '\u{0641}', '\u{0642}', '\u{06A9}', '\u{06AF}', '\u{0644}', '\u{0645}', '\u{0646}', '\u{06C1}',
    '\u{06CC}',
];

/// ا د ڈ ر ز ژ و ے
pub const NON_JOINERS: [char; 8] = [
    '\u{0627}', '\u{062F}', '\u{0688}', '\u{0631}', '\u{0632}', '\u{0698}', '\u{0648}', '\u{06D2}',
];

/// Whitespace, Urdu punctuation (، ۔ ؟ ؛) and every other P*/S* character.
static CHUNK_SEPARATORS: Lazy<Regex> =
    Lazy::new(|| Regex::new(r"[\s\p{P}\p{S}\x{060C}\x{06D4}\x{061F}\x{061B}]+").unwrap());

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharClass {
    Joiner,
    NonJoiner,
    Space,
    Other,
}

/// Classifies `ch` against the joiner and non-joiner tables. Letters that
/// appear in neither table (ٹ, آ, ں, ء, ...) are `Other` and never license
/// a split.
pub fn classify_char(ch: char) -> CharClass {
    if JOINERS.contains(&ch) {
        CharClass::Joiner
    } else if NON_JOINERS.contains(&ch) {
        CharClass::NonJoiner
    } else if ch.is_whitespace() {
        CharClass::Space
    } else {
        CharClass::Other
    }
}

/// Set of valid Urdu word forms used to validate hidden boundaries.
#[derive(Debug, Clone, Default)]
pub struct WordList {
    words: HashSet<String>,
    max_chars: usize,
}

impl WordList {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `word` with any ZWNJ removed. Empty forms and forms containing
    /// whitespace are ignored; returns whether the word was accepted.
    pub fn insert(&mut self, word: &str) -> bool {
        let word: String = word.trim().chars().filter(|&c| c != ZWNJ).collect();
        if word.is_empty() || word.chars().any(char::is_whitespace) {
            return false;
        }
        self.max_chars = self.max_chars.max(word.chars().count());
        self.words.insert(word);
        true
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Length in characters of the longest entry.
    pub fn max_chars(&self) -> usize {
        self.max_chars
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    /// Reads a one-word-per-line UTF-8 file. Blank lines are skipped.
    pub fn load(path: impl AsRef<Path>) -> io::Result<Self> {
        let text = fs::read_to_string(path)?;
        Ok(text.lines().collect())
    }
}

impl<S: AsRef<str>> FromIterator<S> for WordList {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut list = WordList::new();
        list.extend(iter);
        list
    }
}

impl<S: AsRef<str>> Extend<S> for WordList {
    fn extend<I: IntoIterator<Item = S>>(&mut self, iter: I) {
        for w in iter {
            self.insert(w.as_ref());
        }
    }
}

/// Splits a body into space-free, punctuation-free chunks. Chunks may still
/// carry ZWNJ.
pub fn split_chunks(body: &str) -> impl Iterator<Item = &str> {
    CHUNK_SEPARATORS.split(body).filter(|c| !c.is_empty())
}

/// Rewrites `chunk` so ZWNJ sits exactly at the boundaries found by
/// [`segment_chunk`]. Pre-existing ZWNJ characters are dropped first.
pub fn normalize_zwnj(chunk: &str, words: &WordList) -> String {
    let pieces = segment_chunk(chunk, words);
    let mut out = String::with_capacity(chunk.len() + pieces.len() * 3);
    for (i, piece) in pieces.iter().enumerate() {
        if i > 0 {
            out.push(ZWNJ);
        }
        out.push_str(piece);
    }
    out
}

/// Longest-first dictionary segmentation of an unspaced chunk.
///
/// A piece may only end at the end of the chunk or right after a
/// non-joiner. Among full covers, the one chosen takes the longest valid
/// piece at each position. If no cover exists the whole chunk comes back
/// as a single piece. ZWNJ is removed from the input before matching.
pub fn segment_chunk(chunk: &str, words: &WordList) -> Vec<String> {
    let text: String = chunk.chars().filter(|&c| c != ZWNJ).collect();
    if text.is_empty() {
        return Vec::new();
    }
    // The whole chunk is always the longest candidate at position 0.
    if words.contains(&text) {
        return vec![text];
    }

    let chars: Vec<char> = text.chars().collect();
    let n = chars.len();
    let mut offsets: Vec<usize> = text.char_indices().map(|(b, _)| b).collect();
    offsets.push(text.len());

    let may_end = |j: usize| j == n || classify_char(chars[j - 1]) == CharClass::NonJoiner;

    // next[i] = end of the longest piece starting at i whose remainder is
    // coverable; None if no cover of chars[i..] exists.
    let mut next: Vec<Option<usize>> = vec![None; n + 1];
    let max = words.max_chars();
    for i in (0..n).rev() {
        let hi = n.min(i + max);
        next[i] = (i + 1..=hi).rev().find(|&j| {
            may_end(j)
                && (j == n || next[j].is_some())
                && words.contains(&text[offsets[i]..offsets[j]])
        });
    }

    if next[0].is_none() {
        return vec![text];
    }

    let mut pieces = Vec::new();
    let mut i = 0;
    while let Some(j) = next[i] {
        pieces.push(text[offsets[i]..offsets[j]].to_owned());
        if j == n {
            break;
        }
        i = j;
    }
    pieces
}

/// Tokenizes an Urdu body: chunk on whitespace and punctuation, then
/// segment each chunk against `words`.
pub fn tokenize_urdu(body: &str, words: &WordList) -> TokenStream {
    // segment_chunk(normalize_zwnj(c)) == segment_chunk(c): both strip ZWNJ
    // before matching, so the canonical form is skipped here.
    split_chunks(body)
        .flat_map(|chunk| segment_chunk(chunk, words))
        .collect()
}

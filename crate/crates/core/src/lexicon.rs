//! English/Urdu transliteration lexicon.
//!
//! The file format is UTF-8 TSV, one `english<TAB>urdu` pair per line.
//! Lines starting with `#` and blank lines are ignored. Repeating an English
//! word adds another Urdu spelling to the same entry, so entries are
//! many-to-many: one English word can have several Urdu variants and one
//! Urdu spelling can belong to several English words.

use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::normalize::normalize_english;
use crate::urdu_tokenizer::ZWNJ;

#[derive(Error, Debug)]
pub enum LexiconError {
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("lexicon has no entries")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LexiconEntry {
    pub id: usize,
    pub english: String,
    pub urdu_variants: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LexiconStats {
    pub entries: usize,
    pub variants: usize,
    /// Urdu spellings shared by more than one entry.
    pub ambiguous_urdu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    english_index: HashMap<String, usize>,
    urdu_index: HashMap<String, BTreeSet<usize>>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one pair. `english` is normalized and must reduce to a single
    /// token; `urdu` has ZWNJ removed and must be a single space-free form.
    /// Returns the entry id the pair landed in.
    pub fn insert_pair(&mut self, english: &str, urdu: &str) -> Result<usize, String> {
        let english = normalize_english(english).into_string();
        if english.is_empty() {
            return Err("english side is empty after normalization".into());
        }
        if english.contains(' ') {
            return Err(format!("english side `{english}` is more than one token"));
        }
        let urdu: String = urdu.trim().chars().filter(|&c| c != ZWNJ).collect();
        if urdu.is_empty() {
            return Err("urdu side is empty".into());
        }
        if urdu.chars().any(char::is_whitespace) {
            return Err(format!("urdu side `{urdu}` contains whitespace"));
        }

        let id = match self.english_index.get(&english) {
            Some(&id) => id,
            None => {
                let id = self.entries.len();
                self.entries.push(LexiconEntry {
                    id,
                    english: english.clone(),
                    urdu_variants: Vec::new(),
                });
                self.english_index.insert(english, id);
                id
            }
        };
        let entry = &mut self.entries[id];
        if !entry.urdu_variants.contains(&urdu) {
            entry.urdu_variants.push(urdu.clone());
            self.urdu_index.entry(urdu).or_default().insert(id);
        }
        Ok(id)
    }

    /// Parses TSV text.
    pub fn from_tsv_str(text: &str) -> Result<Self, LexiconError> {
        let text = text.strip_prefix('\u{FEFF}').unwrap_or(text);
        let mut lex = Lexicon::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim_end_matches('\r');
            if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split('\t').collect();
            if fields.len() != 2 {
                return Err(LexiconError::Malformed {
                    line,
                    message: format!("expected 2 tab-separated fields, found {}", fields.len()),
                });
            }
            lex.insert_pair(fields[0], fields[1])
                .map_err(|message| LexiconError::Malformed { line, message })?;
        }
        if lex.is_empty() {
            return Err(LexiconError::Empty);
        }
        Ok(lex)
    }

    /// Renders the lexicon back to TSV, one line per (english, variant).
    pub fn to_tsv_string(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            for v in &e.urdu_variants {
                out.push_str(&e.english);
                out.push('\t');
                out.push_str(v);
                out.push('\n');
            }
        }
        out
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, id: usize) -> Option<&LexiconEntry> {
        self.entries.get(id)
    }

    /// Id of the entry for an already-normalized English token.
    pub fn lookup_english(&self, token: &str) -> Option<usize> {
        self.english_index.get(token).copied()
    }

    /// Ids of every entry listing `token` among its Urdu variants; empty on
    /// a miss.
    pub fn lookup_urdu(&self, token: &str) -> &BTreeSet<usize> {
        static NONE: BTreeSet<usize> = BTreeSet::new();
        self.urdu_index.get(token).unwrap_or(&NONE)
    }

    /// Iterates all Urdu spellings with their entry ids.
    pub fn urdu_forms(&self) -> impl Iterator<Item = (&str, &BTreeSet<usize>)> {
        self.urdu_index.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn stats(&self) -> LexiconStats {
        LexiconStats {
            entries: self.entries.len(),
            variants: self.entries.iter().map(|e| e.urdu_variants.len()).sum(),
            ambiguous_urdu: self.urdu_index.values().filter(|ids| ids.len() > 1).count(),
        }
    }

    /// Rebuilds both indexes from `entries` and compares them with the
    /// maintained ones.
    pub fn indexes_consistent(&self) -> bool {
        let mut english = HashMap::new();
        let mut urdu: HashMap<String, BTreeSet<usize>> = HashMap::new();
        for (pos, e) in self.entries.iter().enumerate() {
            if e.id != pos {
                return false;
            }
            english.insert(e.english.clone(), e.id);
            for v in &e.urdu_variants {
                urdu.entry(v.clone()).or_default().insert(e.id);
            }
        }
        english == self.english_index && urdu == self.urdu_index
    }
}

/// Loads a TSV lexicon file.
pub fn load_lexicon(path: impl AsRef<Path>) -> Result<Lexicon, LexiconError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| LexiconError::Read {
        path: path.to_owned(),
        source,
    })?;
    Lexicon::from_tsv_str(&text)
}

/// Bundled starter lexicon of 21 common transliterated pairs.
pub const STARTER_LEXICON: &str = include_str!("../data/starter_lexicon.tsv");

pub fn starter_lexicon() -> Lexicon {
    Lexicon::from_tsv_str(STARTER_LEXICON).expect("bundled lexicon parses")
}

//! News article corpora: CSV ingestion, persistence and index lookup.
//!
//! On disk a corpus is an RFC-4180 CSV file with the header
//! `index,date,headline,body,source,category,url,length`. `index` and
//! `length` are optional on input and always recomputed; rows whose body is
//! blank are skipped and counted.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const REQUIRED_COLUMNS: [&str; 6] = ["date", "headline", "body", "source", "category", "url"];
const OUTPUT_HEADER: [&str; 8] = [
    "index", "date", "headline", "body", "source", "category", "url", "length",
];

#[derive(Error, Debug)]
pub enum CorpusError {
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write `{path}`: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("`{path}` is not valid UTF-8 (first invalid byte at offset {offset})")]
    Encoding { path: PathBuf, offset: usize },
    #[error("header is missing required column(s): {}", missing.join(", "))]
    MissingColumns { missing: Vec<String> },
    #[error("row {row}: {message}")]
    InvalidRow { row: usize, message: String },
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("article index {index} out of range for corpus of {len}")]
    OutOfRange { index: usize, len: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Language {
    English,
    Urdu,
}

impl FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "en" | "eng" | "english" => Ok(Language::English),
            "ur" | "urd" | "urdu" => Ok(Language::Urdu),
            other => Err(format!("unknown language `{other}` (expected en or ur)")),
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Language::English => "en",
            Language::Urdu => "ur",
        })
    }
}

/// News category. Anything outside the six named categories is `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Education,
    Business,
    Technology,
    Politics,
    Entertainment,
    Sports,
    Other,
}

impl Category {
    pub const ALL: [Category; 7] = [
        Category::Education,
        Category::Business,
        Category::Technology,
        Category::Politics,
        Category::Entertainment,
        Category::Sports,
        Category::Other,
    ];

    pub fn parse(s: &str) -> Category {
        match s.trim().to_lowercase().as_str() {
            "education" => Category::Education,
            "business" => Category::Business,
            "technology" => Category::Technology,
            "politics" => Category::Politics,
            "entertainment" => Category::Entertainment,
            "sports" => Category::Sports,
            _ => Category::Other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Education => "education",
            Category::Business => "business",
            Category::Technology => "technology",
            Category::Politics => "politics",
            Category::Entertainment => "entertainment",
            Category::Sports => "sports",
            Category::Other => "other",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Article {
    pub index: usize,
    /// Publication date, kept verbatim.
    pub published_date: String,
    pub headline: String,
    pub body: String,
    pub source: String,
    pub category: Category,
    pub url: String,
    /// Whitespace-delimited token count of `body`.
    pub length: usize,
    pub language: Language,
}

/// Number of whitespace-delimited tokens in `body`.
pub fn body_length(body: &str) -> usize {
    body.split_whitespace().count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    articles: Vec<Article>,
    language: Language,
}

impl Corpus {
    pub fn new(language: Language) -> Self {
        Corpus {
            articles: Vec::new(),
            language,
        }
    }

    /// Appends an article, assigning the next index and recomputing length
    /// and language. Returns the assigned index.
    pub fn push(
        &mut self,
        published_date: impl Into<String>,
        headline: impl Into<String>,
        body: impl Into<String>,
        source: impl Into<String>,
        category: Category,
        url: impl Into<String>,
    ) -> usize {
        let body = body.into();
        let index = self.articles.len();
        self.articles.push(Article {
            index,
            published_date: published_date.into(),
            headline: headline.into(),
            length: body_length(&body),
            body,
            source: source.into(),
            category,
            url: url.into(),
            language: self.language,
        });
        index
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn articles(&self) -> &[Article] {
        &self.articles
    }

    pub fn len(&self) -> usize {
        self.articles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.articles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Article> {
        self.articles.iter()
    }

    pub fn get(&self, index: usize) -> Result<&Article, CorpusError> {
        self.articles.get(index).ok_or(CorpusError::OutOfRange {
            index,
            len: self.articles.len(),
        })
    }

    /// Parses CSV text. See [`ingest_csv`] for the rules.
    pub fn from_csv_str(text: &str, language: Language) -> Result<Ingest, CorpusError> {
        let text = text.strip_prefix('\u{FEFF}').unwrap_or(text);
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(text.as_bytes());

        let headers = reader.headers()?.clone();
        let column = |name: &str| {
            headers
                .iter()
                .position(|h| h.trim().eq_ignore_ascii_case(name))
        };
        let missing: Vec<String> = REQUIRED_COLUMNS
            .iter()
            .filter(|c| column(c).is_none())
            .map(|c| c.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(CorpusError::MissingColumns { missing });
        }
        let [date, headline, body, source, category, url] =
            REQUIRED_COLUMNS.map(|c| column(c).unwrap());

        let mut corpus = Corpus::new(language);
        let mut skipped = 0;
        for (row, record) in reader.records().enumerate() {
            let record = record?;
            // Row numbers are 1-based data rows; the header is row 0.
            let row = row + 1;
            let field = |i: usize| record.get(i).unwrap_or("");
            if field(body).trim().is_empty() {
                skipped += 1;
                continue;
            }
            if field(date).trim().is_empty() {
                return Err(CorpusError::InvalidRow {
                    row,
                    message: "empty date".into(),
                });
            }
            corpus.push(
                field(date),
                field(headline),
                field(body),
                field(source),
                Category::parse(field(category)),
                field(url),
            );
        }
        Ok(Ingest { corpus, skipped })
    }

    /// Serializes to CSV text with LF line endings.
    pub fn to_csv_string(&self) -> Result<String, CorpusError> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(OUTPUT_HEADER)?;
        for a in &self.articles {
            writer.write_record([
                a.index.to_string().as_str(),
                &a.published_date,
                &a.headline,
                &a.body,
                &a.source,
                a.category.as_str(),
                &a.url,
                a.length.to_string().as_str(),
            ])?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| CorpusError::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv writer emits the UTF-8 it was given"))
    }
}

impl<'a> IntoIterator for &'a Corpus {
    type Item = &'a Article;
    type IntoIter = std::slice::Iter<'a, Article>;

    fn into_iter(self) -> Self::IntoIter {
        self.articles.iter()
    }
}

/// Result of ingesting a CSV file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ingest {
    pub corpus: Corpus,
    /// Data rows dropped because their body was blank.
    pub skipped: usize,
}

/// Loads a corpus from a CSV file.
///
/// The header must name at least `date, headline, body, source, category,
/// url` (any order, case-insensitive). Indices are assigned densely in file
/// order and `length` is recomputed from the body. A leading BOM is
/// tolerated.
pub fn ingest_csv(path: impl AsRef<Path>, language: Language) -> Result<Ingest, CorpusError> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| CorpusError::Read {
        path: path.to_owned(),
        source,
    })?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CorpusError::Encoding {
        path: path.to_owned(),
        offset: e.valid_up_to(),
    })?;
    Corpus::from_csv_str(text, language)
}

/// Writes `corpus` as CSV; [`ingest_csv`] reads it back unchanged.
pub fn write_corpus(corpus: &Corpus, path: impl AsRef<Path>) -> Result<(), CorpusError> {
    let path = path.as_ref();
    let text = corpus.to_csv_string()?;
    fs::write(path, text).map_err(|source| CorpusError::Write {
        path: path.to_owned(),
        source,
    })
}

//! End-to-end runs: ingest, tokenize, vectorize, score, rank, enrich.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::corpus::{ingest_csv, Corpus, CorpusError, Language};
use crate::features::{vectorize_corpus, vectorize_text, FeatureVector};
use crate::lexicon::{load_lexicon, Lexicon, LexiconError};
use crate::ranking::{enrich, score_corpus_with, top_k_for, RankedResult, RankingError};
use crate::similarity::Metric;
use crate::urdu_tokenizer::{split_chunks, WordList};

#[derive(Error, Debug)]
pub enum PipelineError {
    #[error("config: {0}")]
    Config(String),
    #[error("ingest: {0}")]
    Ingest(#[from] CorpusError),
    #[error("lexicon: {0}")]
    Lexicon(#[from] LexiconError),
    #[error("wordlist: cannot read `{path}`: {source}")]
    WordList {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("query: cannot read `{path}`: {source}")]
    Query {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("rank: {0}")]
    Rank(#[from] RankingError),
    #[error("eval: {0}")]
    Eval(String),
}

impl PipelineError {
    /// Name of the stage that failed.
    pub fn stage(&self) -> &'static str {
        match self {
            PipelineError::Config(_) => "config",
            PipelineError::Ingest(_) => "ingest",
            PipelineError::Lexicon(_) => "lexicon",
            PipelineError::WordList { .. } => "wordlist",
            PipelineError::Query { .. } => "query",
            PipelineError::Rank(_) => "rank",
            PipelineError::Eval(_) => "eval",
        }
    }
}

/// Which language the query is written in. The corpus is the other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    #[default]
    EnglishQuery,
    UrduQuery,
}

impl Direction {
    pub fn query_language(self) -> Language {
        match self {
            Direction::EnglishQuery => Language::English,
            Direction::UrduQuery => Language::Urdu,
        }
    }

    pub fn corpus_language(self) -> Language {
        match self {
            Direction::EnglishQuery => Language::Urdu,
            Direction::UrduQuery => Language::English,
        }
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "en-query" => Ok(Direction::EnglishQuery),
            "ur-query" => Ok(Direction::UrduQuery),
            other => Err(format!(
                "unknown direction `{other}` (expected en-query or ur-query)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!(
                "unknown format `{other}` (expected table, json or csv)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub corpus_path: PathBuf,
    pub lexicon_path: PathBuf,
    pub query_path: PathBuf,
    pub k: usize,
    pub metric: Metric,
    pub output_format: OutputFormat,
    pub wordlist_path: Option<PathBuf>,
    pub direction: Direction,
}

impl PipelineConfig {
    pub fn new(
        corpus_path: impl Into<PathBuf>,
        lexicon_path: impl Into<PathBuf>,
        query_path: impl Into<PathBuf>,
    ) -> Self {
        PipelineConfig {
            corpus_path: corpus_path.into(),
            lexicon_path: lexicon_path.into(),
            query_path: query_path.into(),
            k: 10,
            metric: Metric::Cosine,
            output_format: OutputFormat::Table,
            wordlist_path: None,
            direction: Direction::EnglishQuery,
        }
    }

    /// Checks `k` and that every named path exists. `query_path` is not
    /// checked here since evaluation runs take queries from a directory.
    pub fn validate(&self) -> Result<(), PipelineError> {
        if self.k == 0 {
            return Err(PipelineError::Config("k must be at least 1".into()));
        }
        let mut paths = vec![&self.corpus_path, &self.lexicon_path];
        paths.extend(self.wordlist_path.as_ref());
        for p in paths {
            if !p.exists() {
                return Err(PipelineError::Config(format!(
                    "`{}` does not exist",
                    p.display()
                )));
            }
        }
        Ok(())
    }
}

/// Default word list: the lexicon's Urdu spellings, plus every chunk of an
/// Urdu corpus.
pub fn default_wordlist(lexicon: &Lexicon, corpus: Option<&Corpus>) -> WordList {
    let mut words: WordList = lexicon.urdu_forms().map(|(w, _)| w).collect();
    if let Some(c) = corpus.filter(|c| c.language() == Language::Urdu) {
        for a in c {
            words.extend(split_chunks(&a.body));
        }
    }
    words
}

/// A loaded corpus with its vectors, ready to answer queries.
#[derive(Debug, Clone)]
pub struct Engine {
    pub corpus: Corpus,
    pub lexicon: Lexicon,
    pub words: WordList,
    pub vectors: Vec<FeatureVector>,
    pub direction: Direction,
}

impl Engine {
    pub fn new(corpus: Corpus, lexicon: Lexicon, words: WordList, direction: Direction) -> Self {
        let vectors = vectorize_corpus(&corpus, &lexicon, &words);
        Engine {
            corpus,
            lexicon,
            words,
            vectors,
            direction,
        }
    }

    /// Loads corpus, lexicon and word list named by `config`.
    pub fn load(config: &PipelineConfig) -> Result<Self, PipelineError> {
        config.validate()?;
        let corpus = ingest_csv(&config.corpus_path, config.direction.corpus_language())?.corpus;
        let lexicon = load_lexicon(&config.lexicon_path)?;
        let words = match &config.wordlist_path {
            Some(path) => {
                let mut w = WordList::load(path).map_err(|source| PipelineError::WordList {
                    path: path.clone(),
                    source,
                })?;
                w.extend(lexicon.urdu_forms().map(|(form, _)| form));
                w
            }
            None => default_wordlist(&lexicon, Some(&corpus)),
        };
        Ok(Engine::new(corpus, lexicon, words, config.direction))
    }

    pub fn vectorize_query(&self, text: &str) -> FeatureVector {
        vectorize_text(
            text,
            self.direction.query_language(),
            &self.lexicon,
            &self.words,
        )
    }

    /// Whether the query shares at least one lexicon entry with some article.
    pub fn has_overlap(&self, query: &FeatureVector) -> bool {
        self.vectors.iter().any(|v| {
            v.counts()
                .iter()
                .zip(query.counts())
                .any(|(&a, &b)| a > 0 && b > 0)
        })
    }

    pub fn rank(
        &self,
        query: &FeatureVector,
        k: usize,
        metric: Metric,
    ) -> Result<Vec<RankedResult>, PipelineError> {
        let scores = score_corpus_with(metric, query, &self.vectors)?;
        let top = top_k_for(metric, &scores, k);
        Ok(enrich(&top, &self.corpus)?)
    }

    pub fn query(
        &self,
        text: &str,
        k: usize,
        metric: Metric,
    ) -> Result<Vec<RankedResult>, PipelineError> {
        self.rank(&self.vectorize_query(text), k, metric)
    }
}

fn read_query(path: &Path) -> Result<String, PipelineError> {
    fs::read_to_string(path).map_err(|source| PipelineError::Query {
        path: path.to_owned(),
        source,
    })
}

/// Runs one query file against the corpus.
pub fn run_query(config: &PipelineConfig) -> Result<Vec<RankedResult>, PipelineError> {
    let engine = Engine::load(config)?;
    let text = read_query(&config.query_path)?;
    engine.query(&text, config.k, config.metric)
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalTable {
    pub query: PathBuf,
    pub results: Vec<RankedResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalSummary {
    pub queries: usize,
    /// Mean of the rank-0 scores; a query with no results counts as 0.
    pub mean_top1_score: f64,
    /// Queries sharing no lexicon entry with any article.
    pub zero_overlap: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub tables: Vec<EvalTable>,
    pub summary: EvalSummary,
}

/// Runs every regular file in `queries_dir` (sorted by name) as a query.
/// `config.query_path` is ignored.
pub fn run_eval(config: &PipelineConfig, queries_dir: &Path) -> Result<EvalReport, PipelineError> {
    let entries = fs::read_dir(queries_dir).map_err(|e| {
        PipelineError::Eval(format!("cannot read `{}`: {e}", queries_dir.display()))
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(PipelineError::Eval(format!(
            "no query files in `{}`",
            queries_dir.display()
        )));
    }

    let engine = Engine::load(config)?;
    let mut tables = Vec::with_capacity(files.len());
    let mut top1_sum = 0.0;
    let mut zero_overlap = 0;
    for path in files {
        let text = read_query(&path)?;
        let q = engine.vectorize_query(&text);
        if !engine.has_overlap(&q) {
            zero_overlap += 1;
        }
        let results = engine.rank(&q, config.k, config.metric)?;
        top1_sum += results.first().map_or(0.0, |r| r.score);
        tables.push(EvalTable {
            query: path,
            results,
        });
    }
    let queries = tables.len();
    Ok(EvalReport {
        tables,
        summary: EvalSummary {
            queries,
            mean_top1_score: top1_sum / queries as f64,
            zero_overlap,
        },
    })
}

/// Renders ranked rows with columns `rank,index,score,percent,headline,url`.
/// Scores print with six decimals and percentages with two.
pub fn render(results: &[RankedResult], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(results).expect("rows serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(["rank", "index", "score", "percent", "headline", "url"])
                .and_then(|_| {
                    for r in results {
                        w.write_record([
                            r.rank.to_string(),
                            r.article_index.to_string(),
                            format!("{:.6}", r.score),
                            format!("{:.2}", r.percent),
                            r.headline.clone(),
                            r.url.clone(),
                        ])?;
                    }
                    Ok(())
                })
                .expect("writing to memory");
            String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 rows")
        }
        OutputFormat::Table => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:>4}  {:>7}  {:>8}  {:>8}  headline\turl",
                "rank", "index", "score", "percent"
            );
            for r in results {
                let _ = writeln!(
                    s,
                    "{:>4}  {:>7}  {:>8.6}  {:>6.2} %  {}\t{}",
                    r.rank,
                    r.article_index,
                    r.score,
                    r.percent,
                    r.headline.replace(['\n', '\t'], " "),
                    r.url
                );
            }
            s
        }
    }
}

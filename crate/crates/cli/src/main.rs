//! `xlnews`: find Urdu news articles similar to an English one through a
//! shared transliteration lexicon.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand};

use xlnews_core::corpus::{ingest_csv, write_corpus};
use xlnews_core::features::{counts_csv, tokenize_body, vectorize_corpus, vectorize_text};
use xlnews_core::lexicon::load_lexicon;
use xlnews_core::pipeline::{default_wordlist, render, run_eval, run_query};
use xlnews_core::{Direction, Language, Lexicon, Metric, OutputFormat, PipelineConfig, WordList};

#[derive(Parser)]
#[command(
    name = "xlnews",
    version,
    about = "Cross-lingual English/Urdu news similarity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Data set stage: load a crawled article CSV, recompute index and
    /// length, and write the canonical CSV.
    Ingest {
        input: PathBuf,
        #[arg(long, default_value = "ur")]
        lang: Language,
        /// Output file; stdout if omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Normalization stage: lowercase English text and strip punctuation.
    Normalize {
        /// Input file; stdin if omitted.
        input: Option<PathBuf>,
    },
    /// Tokenization stage: print one token per line.
    Tokenize {
        #[arg(long, default_value = "ur")]
        lang: Language,
        input: Option<PathBuf>,
        /// One-word-per-line list of valid Urdu words for boundary repair.
        #[arg(long)]
        wordlist: Option<PathBuf>,
        /// Adds the lexicon's Urdu spellings to the word list.
        #[arg(long)]
        lexicon: Option<PathBuf>,
    },
    /// Lexicon stage: check or summarize a transliteration lexicon.
    Lexicon {
        #[command(subcommand)]
        action: LexiconAction,
    },
    /// Word count stage: per-article lexicon counts as CSV.
    Vectorize {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long, default_value = "ur")]
        lang: Language,
        #[arg(long)]
        wordlist: Option<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Similarity stage: score two article text files.
    Compare {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        /// cosine, euclidean, manhattan or minkowski:<p>
        #[arg(long, default_value = "cosine")]
        metric: Metric,
        #[arg(long, default_value = "en")]
        lang_first: Language,
        #[arg(long, default_value = "ur")]
        lang_second: Language,
        #[arg(long)]
        wordlist: Option<PathBuf>,
    },
    /// Full pipeline and ranking stage: rank the corpus against a query
    /// article and print the top k.
    Query {
        /// Query article text (English unless --direction ur-query).
        #[arg(long = "english", visible_alias = "query")]
        query: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Re-run the pipeline for every query file in a directory and print
    /// the ranked tables for manual judging, plus a summary.
    Eval {
        #[arg(long)]
        queries: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long)]
    lexicon: PathBuf,
    #[arg(long, default_value_t = 10)]
    k: usize,
    #[arg(long, default_value = "cosine")]
    metric: Metric,
    /// table, json or csv
    #[arg(long, default_value = "table")]
    format: OutputFormat,
    #[arg(long)]
    wordlist: Option<PathBuf>,
    /// en-query ranks an Urdu corpus; ur-query ranks an English one.
    #[arg(long, default_value = "en-query")]
    direction: Direction,
}

impl RunArgs {
    fn config(&self, query: PathBuf) -> PipelineConfig {
        PipelineConfig {
            corpus_path: self.corpus.clone(),
            lexicon_path: self.lexicon.clone(),
            query_path: query,
            k: self.k,
            metric: self.metric,
            output_format: self.format,
            wordlist_path: self.wordlist.clone(),
            direction: self.direction,
        }
    }
}

#[derive(Subcommand)]
enum LexiconAction {
    /// Parse the file and report the first error, if any.
    Validate { file: PathBuf },
    /// Entry, variant and ambiguous-spelling counts.
    Stats { file: PathBuf },
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| anyhow!("cannot read `{}`: {e}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| anyhow!("cannot read stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| anyhow!("cannot write `{}`: {e}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load_words(wordlist: Option<&Path>, lexicon: Option<&Lexicon>) -> Result<WordList> {
    let mut words = match wordlist {
        Some(p) => WordList::load(p).map_err(|e| anyhow!("cannot read `{}`: {e}", p.display()))?,
        None => WordList::new(),
    };
    if let Some(lex) = lexicon {
        words.extend(lex.urdu_forms().map(|(w, _)| w));
    }
    Ok(words)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Ingest {
            input,
            lang,
            output,
        } => {
            let ingest = ingest_csv(&input, lang)?;
            eprintln!(
                "{} articles ingested, {} rows skipped",
                ingest.corpus.len(),
                ingest.skipped
            );
            match output {
                Some(p) => write_corpus(&ingest.corpus, p)?,
                None => emit(None, &ingest.corpus.to_csv_string()?)?,
            }
        }
        Command::Normalize { input } => {
            let text = read_input(input.as_deref())?;
            let mut out = xlnews_core::normalize_english(&text).into_string();
            out.push('\n');
            emit(None, &out)?;
        }
        Command::Tokenize {
            lang,
            input,
            wordlist,
            lexicon,
        } => {
            let text = read_input(input.as_deref())?;
            let lex = lexicon.map(load_lexicon).transpose()?;
            let words = load_words(wordlist.as_deref(), lex.as_ref())?;
            let mut out = String::new();
            for t in tokenize_body(&text, lang, &words).iter() {
                out.push_str(t);
                out.push('\n');
            }
            emit(None, &out)?;
        }
        Command::Lexicon { action } => match action {
            LexiconAction::Validate { file } => {
                let lex = load_lexicon(&file)?;
                if !lex.indexes_consistent() {
                    bail!("index rebuild mismatch in `{}`", file.display());
                }
                println!("ok: {} entries", lex.len());
            }
            LexiconAction::Stats { file } => {
                let s = load_lexicon(&file)?.stats();
                println!("entries\t{}", s.entries);
                println!("variants\t{}", s.variants);
                println!("ambiguous_urdu\t{}", s.ambiguous_urdu);
            }
        },
        Command::Vectorize {
            corpus,
            lexicon,
            lang,
            wordlist,
            output,
        } => {
            let corpus = ingest_csv(&corpus, lang)?.corpus;
            let lex = load_lexicon(&lexicon)?;
            let words = match wordlist {
                Some(p) => load_words(Some(&p), Some(&lex))?,
                None => default_wordlist(&lex, Some(&corpus)),
            };
            let vectors = vectorize_corpus(&corpus, &lex, &words);
            emit(output.as_deref(), &counts_csv(&vectors, &lex)?)?;
        }
        Command::Compare {
            first,
            second,
            lexicon,
            metric,
            lang_first,
            lang_second,
            wordlist,
        } => {
            let lex = load_lexicon(&lexicon)?;
            let words = load_words(wordlist.as_deref(), Some(&lex))?;
            let a = vectorize_text(&read_input(Some(&first))?, lang_first, &lex, &words);
            let b = vectorize_text(&read_input(Some(&second))?, lang_second, &lex, &words);
            let score = metric.score(&a, &b)?;
            if score.zero_vector {
                eprintln!("note: at least one article has no lexicon terms");
            }
            println!("{:.6}", score.value);
        }
        Command::Query { query, run } => {
            let config = run.config(query);
            let results = run_query(&config)?;
            emit(None, &render(&results, config.output_format))?;
        }
        Command::Eval { queries, run } => {
            let config = run.config(PathBuf::new());
            let report = run_eval(&config, &queries)?;
            let mut out = String::new();
            for table in &report.tables {
                out.push_str(&format!("# query: {}\n", table.query.display()));
                out.push_str(&render(&table.results, config.output_format));
                out.push('\n');
            }
            let s = report.summary;
            out.push_str(&format!(
                "queries\t{}\nmean_top1_score\t{:.6}\nzero_overlap\t{}\n",
                s.queries, s.mean_top1_score, s.zero_overlap
            ));
            emit(None, &out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            // Every error type here already embeds its cause in its message.
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

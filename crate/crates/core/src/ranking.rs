//! Scoring a corpus against a query vector and selecting the top k.
//!
//! Results are ordered by score, best first, with ties broken by ascending
//! article index. Percentages are `score * 100` rounded to two decimals,
//! half away from zero, computed on the decimal form of the score so that
//! a printed six-digit score like `0.444445` rounds the way it reads.

use std::cmp::Ordering;
use std::str::FromStr;

use rayon::prelude::*;
use rust_decimal::prelude::{FromPrimitive, ToPrimitive};
use rust_decimal::{Decimal, RoundingStrategy};
use serde::Serialize;
use thiserror::Error;

use crate::corpus::Corpus;
use crate::features::FeatureVector;
use crate::similarity::{Metric, SimilarityError};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum RankingError {
    #[error("article {article_index}: {source}")]
    Score {
        article_index: usize,
        #[source]
        source: SimilarityError,
    },
    #[error("score {0} is not finite")]
    NonFinite(f64),
    #[error("ranked article index {index} is not in the corpus ({len} articles)")]
    DanglingIndex { index: usize, len: usize },
}

/// One ranked row before headline and URL are attached.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ranked {
    pub rank: usize,
    #[serde(rename = "index")]
    pub article_index: usize,
    pub score: f64,
    pub percent: f64,
}

/// A row of the final table: rank, index, score, percent, headline, url.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedResult {
    pub rank: usize,
    #[serde(rename = "index")]
    pub article_index: usize,
    pub score: f64,
    pub percent: f64,
    pub headline: String,
    pub url: String,
}

/// Cosine score of every corpus vector against `query`, in corpus order.
pub fn score_corpus(
    query: &FeatureVector,
    corpus_vectors: &[FeatureVector],
) -> Result<Vec<(usize, f64)>, RankingError> {
    score_corpus_with(Metric::Cosine, query, corpus_vectors)
}

pub fn score_corpus_with(
    metric: Metric,
    query: &FeatureVector,
    corpus_vectors: &[FeatureVector],
) -> Result<Vec<(usize, f64)>, RankingError> {
    corpus_vectors
        .par_iter()
        .map(|v| {
            metric
                .score(query, v)
                .map(|s| (v.article_index, s.value))
                .map_err(|source| RankingError::Score {
                    article_index: v.article_index,
                    source,
                })
        })
        .collect()
}

/// `score * 100` rounded to two decimals, half away from zero.
pub fn to_percent(score: f64) -> Result<f64, RankingError> {
    if !score.is_finite() {
        return Err(RankingError::NonFinite(score));
    }
    let exact = Decimal::from_str(&score.to_string())
        .ok()
        .or_else(|| Decimal::from_f64(score))
        .and_then(|d| d.checked_mul(Decimal::ONE_HUNDRED));
    Ok(match exact {
        Some(d) => d
            .round_dp_with_strategy(2, RoundingStrategy::MidpointAwayFromZero)
            .to_f64()
            .expect("two-decimal value fits in f64"),
        // Outside Decimal's range; two decimals are below f64 resolution there.
        None => score * 100.0,
    })
}

fn by_score_desc(a: &(usize, f64), b: &(usize, f64)) -> Ordering {
    b.1.total_cmp(&a.1).then(a.0.cmp(&b.0))
}

fn by_score_asc(a: &(usize, f64), b: &(usize, f64)) -> Ordering {
    a.1.total_cmp(&b.1).then(a.0.cmp(&b.0))
}

/// The `k` highest scores, best first; ties go to the lower index.
pub fn top_k(scores: &[(usize, f64)], k: usize) -> Vec<Ranked> {
    select(scores, k, by_score_desc)
}

/// Like [`top_k`] but for scores where lower is better (distances).
pub fn bottom_k(scores: &[(usize, f64)], k: usize) -> Vec<Ranked> {
    select(scores, k, by_score_asc)
}

/// Ranks by whichever direction `metric` prefers.
pub fn top_k_for(metric: Metric, scores: &[(usize, f64)], k: usize) -> Vec<Ranked> {
    if metric.higher_is_better() {
        top_k(scores, k)
    } else {
        bottom_k(scores, k)
    }
}

fn select(
    scores: &[(usize, f64)],
    k: usize,
    order: fn(&(usize, f64), &(usize, f64)) -> Ordering,
) -> Vec<Ranked> {
    let mut sorted = scores.to_vec();
    if k < sorted.len() {
        if k > 0 {
            sorted.select_nth_unstable_by(k - 1, order);
        }
        sorted.truncate(k);
    }
    sorted.sort_by(order);
    sorted
        .into_iter()
        .enumerate()
        .map(|(rank, (article_index, score))| Ranked {
            rank,
            article_index,
            score,
            percent: to_percent(score).unwrap_or(f64::NAN),
        })
        .collect()
}

/// Attaches headline and URL from `corpus` to each ranked row.
pub fn enrich(results: &[Ranked], corpus: &Corpus) -> Result<Vec<RankedResult>, RankingError> {
    results
        .iter()
        .map(|r| {
            let article = corpus
                .get(r.article_index)
                .map_err(|_| RankingError::DanglingIndex {
                    index: r.article_index,
                    len: corpus.len(),
                })?;
            Ok(RankedResult {
                rank: r.rank,
                article_index: r.article_index,
                score: r.score,
                percent: r.percent,
                headline: article.headline.clone(),
                url: article.url.clone(),
            })
        })
        .collect()
}

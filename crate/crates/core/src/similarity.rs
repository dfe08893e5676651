//! Similarity and distance between count vectors.
//!
//! Cosine similarity is the ranking metric. Euclidean, Manhattan and
//! Minkowski distances are available for comparison runs; for those a
//! smaller value means more similar.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SimilarityError {
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("minkowski order must be a finite number >= 1, got {0}")]
    InvalidOrder(f64),
    #[error("unknown metric `{0}` (expected cosine, euclidean, manhattan or minkowski:<p>)")]
    UnknownMetric(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub enum Metric {
    #[default]
    Cosine,
    Euclidean,
    Manhattan,
    Minkowski(f64),
}

impl Metric {
    /// Cosine grows with similarity; the distances shrink.
    pub fn higher_is_better(self) -> bool {
        matches!(self, Metric::Cosine)
    }

    pub fn score<A, B>(self, a: &A, b: &B) -> Result<SimilarityScore, SimilarityError>
    where
        A: AsRef<[u32]> + ?Sized,
        B: AsRef<[u32]> + ?Sized,
    {
        match self {
            Metric::Cosine => cosine(a, b),
            Metric::Euclidean => euclidean(a, b),
            Metric::Manhattan => manhattan(a, b),
            Metric::Minkowski(p) => minkowski(a, b, p),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Cosine => f.write_str("cosine"),
            Metric::Euclidean => f.write_str("euclidean"),
            Metric::Manhattan => f.write_str("manhattan"),
            Metric::Minkowski(p) => write!(f, "minkowski:{p}"),
        }
    }
}

impl FromStr for Metric {
    type Err = SimilarityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "cosine" => Ok(Metric::Cosine),
            "euclidean" => Ok(Metric::Euclidean),
            "manhattan" => Ok(Metric::Manhattan),
            _ => {
                let p = lower
                    .strip_prefix("minkowski:")
                    .and_then(|p| p.parse::<f64>().ok())
                    .ok_or_else(|| SimilarityError::UnknownMetric(s.to_owned()))?;
                check_order(p)?;
                Ok(Metric::Minkowski(p))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimilarityScore {
    pub value: f64,
    pub metric: Metric,
    /// Set when cosine was asked of an all-zero vector; `value` is then 0.
    pub zero_vector: bool,
}

impl SimilarityScore {
    fn distance(value: f64, metric: Metric) -> Self {
        SimilarityScore {
            value,
            metric,
            zero_vector: false,
        }
    }
}

fn pair<'a, A, B>(a: &'a A, b: &'a B) -> Result<(&'a [u32], &'a [u32]), SimilarityError>
where
    A: AsRef<[u32]> + ?Sized,
    B: AsRef<[u32]> + ?Sized,
{
    let (a, b) = (a.as_ref(), b.as_ref());
    if a.len() != b.len() {
        return Err(SimilarityError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok((a, b))
}

fn check_order(p: f64) -> Result<(), SimilarityError> {
    if p.is_finite() && p >= 1.0 {
        Ok(())
    } else {
        Err(SimilarityError::InvalidOrder(p))
    }
}

/// `dot(a, b) / (|a| |b|)`, or 0 with `zero_vector` set if either norm is 0.
pub fn cosine<A, B>(a: &A, b: &B) -> Result<SimilarityScore, SimilarityError>
where
    A: AsRef<[u32]> + ?Sized,
    B: AsRef<[u32]> + ?Sized,
{
    let (a, b) = pair(a, b)?;
    let (mut dot, mut aa, mut bb) = (0.0f64, 0.0f64, 0.0f64);
    for (&x, &y) in a.iter().zip(b) {
        let (x, y) = (f64::from(x), f64::from(y));
        dot += x * y;
        aa += x * x;
        bb += y * y;
    }
    if aa == 0.0 || bb == 0.0 {
        return Ok(SimilarityScore {
            value: 0.0,
            metric: Metric::Cosine,
            zero_vector: true,
        });
    }
    // sqrt(aa * bb) rather than sqrt(aa) * sqrt(bb) keeps a == b at exactly 1.
    let value = (dot / (aa * bb).sqrt()).clamp(-1.0, 1.0);
    Ok(SimilarityScore {
        value,
        metric: Metric::Cosine,
        zero_vector: false,
    })
}

pub fn euclidean<A, B>(a: &A, b: &B) -> Result<SimilarityScore, SimilarityError>
where
    A: AsRef<[u32]> + ?Sized,
    B: AsRef<[u32]> + ?Sized,
{
    let (a, b) = pair(a, b)?;
    let sum: f64 = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| {
            let d = f64::from(x) - f64::from(y);
            d * d
        })
        .sum();
    Ok(SimilarityScore::distance(sum.sqrt(), Metric::Euclidean))
}

pub fn manhattan<A, B>(a: &A, b: &B) -> Result<SimilarityScore, SimilarityError>
where
    A: AsRef<[u32]> + ?Sized,
    B: AsRef<[u32]> + ?Sized,
{
    let (a, b) = pair(a, b)?;
    let sum: f64 = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| f64::from(x.abs_diff(y)))
        .sum();
    Ok(SimilarityScore::distance(sum, Metric::Manhattan))
}

/// `(sum |a_i - b_i|^p)^(1/p)` for `p >= 1`.
pub fn minkowski<A, B>(a: &A, b: &B, p: f64) -> Result<SimilarityScore, SimilarityError>
where
    A: AsRef<[u32]> + ?Sized,
    B: AsRef<[u32]> + ?Sized,
{
    check_order(p)?;
    let (a, b) = pair(a, b)?;
    let sum: f64 = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| f64::from(x.abs_diff(y)).powf(p))
        .sum();
    Ok(SimilarityScore::distance(
        sum.powf(p.recip()),
        Metric::Minkowski(p),
    ))
}

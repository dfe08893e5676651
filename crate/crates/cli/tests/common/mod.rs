#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use xlnews_core::urdu_tokenizer::{JOINERS, NON_JOINERS};

pub fn xlnews(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xlnews"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("run xlnews")
}

/// Random Urdu-looking word of 2..=max letters drawn from both tables plus
/// a few unlisted letters.
pub fn urdu_word(rng: &mut StdRng, max: usize) -> String {
    let extras = ['ٹ', 'آ', 'ں', 'ء'];
    let len = rng.gen_range(2..=max);
    (0..len)
        .map(|_| match rng.gen_range(0..10) {
            0..=5 => *JOINERS.choose(rng).unwrap(),
            6..=8 => *NON_JOINERS.choose(rng).unwrap(),
            _ => *extras.choose(rng).unwrap(),
        })
        .collect()
}

/// `n` distinct random Urdu words.
pub fn distinct_urdu_words(rng: &mut StdRng, n: usize, max: usize) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let w = urdu_word(rng, max);
        if seen.insert(w.clone()) {
            out.push(w);
        }
    }
    out
}

/// Random text for CSV stress: Arabic script, quotes, commas, newlines.
pub fn messy_text(rng: &mut StdRng, max_len: usize) -> String {
    let pool: Vec<char> = "abcXYZ019 ,\"'\n\r\t،۔؟اسلامآبادنیوزٹیپ\u{200C}ہیلو😀"
        .chars()
        .collect();
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *pool.choose(rng).unwrap()).collect()
}

use std::collections::BTreeSet;

use proptest::prelude::*;

use xlnews_core::corpus::{ingest_csv, write_corpus};
use xlnews_core::features::{vectorize_english, vectorize_urdu};
use xlnews_core::similarity::{cosine, euclidean, manhattan, minkowski};
use xlnews_core::{Category, Corpus, Language, Lexicon, TokenStream};

fn field() -> impl Strategy<Value = String> {
    prop_oneof![
        "[a-zA-Z0-9 ,.\"']{0,20}",
        "[\\x{0600}-\\x{06FF} ,\"\\n،۔]{0,20}",
        "\\PC{0,20}",
    ]
}

fn body() -> impl Strategy<Value = String> {
    (field(), "[\\x{0621}-\\x{064A}a-z]{1,6}", field()).prop_map(|(a, w, b)| format!("{a}{w}{b}"))
}

fn article() -> impl Strategy<Value = (String, String, String, String, Category, String)> {
    (
        "[0-9]{4}-[0-9]{2}-[0-9]{2}",
        field(),
        body(),
        field(),
        prop::sample::select(Category::ALL.to_vec()),
        field(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn corpus_round_trips(rows in prop::collection::vec(article(), 0..8)) {
        let mut c = Corpus::new(Language::Urdu);
        for (d, h, b, s, cat, u) in rows {
            c.push(d, h, b, s, cat, u);
        }
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        write_corpus(&c, &path).unwrap();
        let back = ingest_csv(&path, Language::Urdu).unwrap();
        prop_assert_eq!(back.skipped, 0);
        for (i, a) in back.corpus.iter().enumerate() {
            prop_assert_eq!(a.index, i);
        }
        prop_assert_eq!(back.corpus, c);
    }

    #[test]
    fn skipped_plus_accepted_is_total(bodies in prop::collection::vec(prop_oneof!["[ \\t]{0,3}", "[a-z]{1,5}"], 0..12)) {
        let mut text = String::from("date,headline,body,source,category,url\n");
        for b in &bodies {
            text.push_str(&format!("d,h,\"{b}\",s,c,u\n"));
        }
        let ing = Corpus::from_csv_str(&text, Language::English).unwrap();
        prop_assert_eq!(ing.corpus.len() + ing.skipped, bodies.len());
    }

    #[test]
    fn lexicon_closure(pairs in prop::collection::vec(("[a-d]{1,2}", "[\\x{0628}-\\x{062F}]{1,3}"), 1..30)) {
        let tsv: String = pairs.iter().map(|(e, u)| format!("{e}\t{u}\n")).collect();
        let lex = Lexicon::from_tsv_str(&tsv).unwrap();
        prop_assert!(lex.indexes_consistent());
        for e in lex.entries() {
            prop_assert_eq!(lex.lookup_english(&e.english), Some(e.id));
            for v in &e.urdu_variants {
                prop_assert!(lex.lookup_urdu(v).contains(&e.id));
            }
        }
        prop_assert_eq!(Lexicon::from_tsv_str(&tsv).unwrap(), lex.clone());
        let expected: BTreeSet<&str> = pairs.iter().map(|(e, _)| e.as_str()).collect();
        let got: BTreeSet<&str> = lex.entries().iter().map(|e| e.english.as_str()).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn metric_axioms(
        (a, b, c) in (1usize..32).prop_flat_map(|n| (
            prop::collection::vec(0u32..20, n),
            prop::collection::vec(0u32..20, n),
            prop::collection::vec(0u32..20, n),
        )),
        p in 1.0f64..6.0,
    ) {
        for d in [
            |x: &[u32], y: &[u32]| euclidean(x, y).unwrap().value,
            |x: &[u32], y: &[u32]| manhattan(x, y).unwrap().value,
        ] {
            prop_assert!(d(&a, &b) >= 0.0);
            prop_assert_eq!(d(&a, &b), d(&b, &a));
            prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-9);
        }
        let m = |x: &[u32], y: &[u32]| minkowski(x, y, p).unwrap().value;
        prop_assert_eq!(m(&a, &b), m(&b, &a));
        prop_assert!(m(&a, &c) <= m(&a, &b) + m(&b, &c) + 1e-9);
        prop_assert!((minkowski(&a, &b, 1.0).unwrap().value - manhattan(&a, &b).unwrap().value).abs() <= 1e-9);
        prop_assert!((minkowski(&a, &b, 2.0).unwrap().value - euclidean(&a, &b).unwrap().value).abs() <= 1e-9);
        let cos = cosine(&a, &b).unwrap().value;
        prop_assert!((0.0..=1.0).contains(&cos));
        prop_assert_eq!(cos, cosine(&b, &a).unwrap().value);
        let scaled: Vec<u32> = a.iter().map(|x| x * 3).collect();
        prop_assert!((cosine(&scaled, &b).unwrap().value - cos).abs() <= 1e-12);
    }

    #[test]
    fn vectors_are_bags(
        tokens in prop::collection::vec(prop::sample::select(vec!["bank", "news", "of", "the", "hello"]), 0..30),
        urdu in prop::collection::vec(prop::sample::select(vec!["بینک", "نیوز", "کا", "ہیلو", "بنک"]), 0..30),
        split in 0usize..30,
    ) {
        let lex = Lexicon::from_tsv_str("bank\tبینک\nbank\tبنک\nnews\tنیوز\nhello\tہیلو\n").unwrap();

        let full = vectorize_english(&TokenStream::from(tokens.clone()), &lex);
        let mut rev = tokens.clone();
        rev.reverse();
        let permuted = vectorize_english(&TokenStream::from(rev), &lex);
        prop_assert_eq!(permuted.counts(), full.counts());
        let k = split.min(tokens.len());
        let left = vectorize_english(&TokenStream::from(tokens[..k].to_vec()), &lex);
        let right = vectorize_english(&TokenStream::from(tokens[k..].to_vec()), &lex);
        let sum: Vec<u32> = left.counts().iter().zip(right.counts()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(full.counts(), sum.as_slice());
        prop_assert!(full.total() <= tokens.len() as u64);

        let u = vectorize_urdu(&TokenStream::from(urdu.clone()), &lex);
        let hits = urdu.iter().filter(|t| !lex.lookup_urdu(t).is_empty()).count();
        prop_assert_eq!(u.total(), hits as u64);
    }
}

mod common;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use common::xlnews;
use xlnews_core::corpus::write_corpus;
use xlnews_core::lexicon::STARTER_LEXICON;
use xlnews_core::{Category, Corpus, Language};

fn setup(dir: &Path) {
    let mut c = Corpus::new(Language::Urdu);
    c.push(
        "2022",
        "پہلی",
        "نیوز ٹیپ اور ہیلو، نیوز",
        "dawn",
        Category::Business,
        "https://x/0",
    );
    c.push(
        "2022",
        "دوسری",
        "اسلام آباد",
        "dawn",
        Category::Sports,
        "https://x/1",
    );
    c.push(
        "2022",
        "تیسری",
        "ایتھلیٹ کی ویڈیوز",
        "dawn",
        Category::Sports,
        "https://x/2",
    );
    write_corpus(&c, dir.join("corpus.csv")).unwrap();
    fs::write(dir.join("lexicon.tsv"), STARTER_LEXICON).unwrap();
    fs::write(dir.join("q.txt"), "Hello news, NEWS tape!").unwrap();
}

fn stdout(out: &std::process::Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn normalize_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_xlnews"))
        .arg("normalize")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"U.S.-based, 2021 Q1: profits")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "u s based 2021 q1 profits\n");
}

#[test]
fn tokenize_urdu_with_lexicon_words() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    fs::write(dir.path().join("t.txt"), "نیوزٹیپ، اسلام").unwrap();
    let out = xlnews(
        &[
            "tokenize",
            "--lang",
            "ur",
            "t.txt",
            "--lexicon",
            "lexicon.tsv",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&out), "نیوز\nٹیپ\nاسلام\n");
    let out = xlnews(&["tokenize", "--lang", "en", "q.txt"], dir.path());
    assert_eq!(stdout(&out), "hello\nnews\nnews\ntape\n");
}

#[test]
fn lexicon_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    assert_eq!(
        stdout(&xlnews(&["lexicon", "validate", "lexicon.tsv"], dir.path())),
        "ok: 21 entries\n"
    );
    assert_eq!(
        stdout(&xlnews(&["lexicon", "stats", "lexicon.tsv"], dir.path())),
        "entries\t21\nvariants\t21\nambiguous_urdu\t0\n"
    );
    fs::write(dir.path().join("bad.tsv"), "news\tنیوز\noops\n").unwrap();
    let out = xlnews(&["lexicon", "validate", "bad.tsv"], dir.path());
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn ingest_reports_skips_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("raw.csv"),
        "date,headline,body,source,category,url\nd,h,متن,s,Sports,u\nd,h, ,s,x,u\n",
    )
    .unwrap();
    let out = xlnews(&["ingest", "raw.csv", "--lang", "ur"], dir.path());
    assert_eq!(
        stdout(&out),
        "index,date,headline,body,source,category,url,length\n0,d,h,متن,s,sports,u,1\n"
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stderr),
        "1 articles ingested, 1 rows skipped\n"
    );
}

#[test]
fn vectorize_emits_count_table() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let text = stdout(&xlnews(
        &[
            "vectorize",
            "--corpus",
            "corpus.csv",
            "--lexicon",
            "lexicon.tsv",
        ],
        dir.path(),
    ));
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header[0], "article_index");
    assert_eq!(header.len(), 22);
    let news = header.iter().position(|h| *h == "news").unwrap();
    let row0: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row0[0], "0");
    assert_eq!(row0[news], "2");
    assert_eq!(lines.count(), 2);
}

#[test]
fn compare_prints_six_decimals() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    fs::write(dir.path().join("u.txt"), "نیوز ٹیپ اور ہیلو، نیوز").unwrap();
    let out = xlnews(
        &["compare", "q.txt", "u.txt", "--lexicon", "lexicon.tsv"],
        dir.path(),
    );
    assert_eq!(stdout(&out), "1.000000\n");
    let out = xlnews(
        &[
            "compare",
            "q.txt",
            "u.txt",
            "--lexicon",
            "lexicon.tsv",
            "--lang-second",
            "en",
            "--metric",
            "minkowski:3",
        ],
        dir.path(),
    );
    // English reading of Urdu text has no lexicon hits: q = (hello 1, news 2, tape 1).
    let expected = (1f64 + 8.0 + 1.0).powf(1.0 / 3.0);
    assert_eq!(stdout(&out), format!("{expected:.6}\n"));
    let out = xlnews(
        &[
            "compare",
            "q.txt",
            "u.txt",
            "--lexicon",
            "lexicon.tsv",
            "--metric",
            "minkowski:0.5",
        ],
        dir.path(),
    );
    assert!(!out.status.success());
}

#[test]
fn query_formats_and_saturation() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let args = [
        "query",
        "--english",
        "q.txt",
        "--corpus",
        "corpus.csv",
        "--lexicon",
        "lexicon.tsv",
        "--format",
        "csv",
    ];
    let first = stdout(&xlnews(&args, dir.path()));
    let second = stdout(&xlnews(&args, dir.path()));
    assert_eq!(first, second);
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines[0], "rank,index,score,percent,headline,url");
    assert_eq!(lines[1], "0,0,1.000000,100.00,پہلی,https://x/0");
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[2], "1,1,0.000000,0.00,دوسری,https://x/1");

    let mut k1 = args.to_vec();
    k1.extend(["--k", "1"]);
    assert_eq!(stdout(&xlnews(&k1, dir.path())).lines().count(), 2);

    let json = stdout(&xlnews(
        &[
            "query",
            "--query",
            "q.txt",
            "--corpus",
            "corpus.csv",
            "--lexicon",
            "lexicon.tsv",
            "--format",
            "json",
        ],
        dir.path(),
    ));
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert_eq!(rows[0]["url"], "https://x/0");
}

#[test]
fn query_errors_exit_nonzero_with_stage() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let out = xlnews(
        &[
            "query",
            "--english",
            "q.txt",
            "--corpus",
            "missing.csv",
            "--lexicon",
            "lexicon.tsv",
        ],
        dir.path(),
    );
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: config:"));

    let out = xlnews(
        &[
            "query",
            "--english",
            "q.txt",
            "--corpus",
            "corpus.csv",
            "--lexicon",
            "lexicon.tsv",
            "--k",
            "0",
        ],
        dir.path(),
    );
    assert!(!out.status.success());
}

#[test]
fn eval_prints_tables_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let q = dir.path().join("queries");
    fs::create_dir(&q).unwrap();
    fs::write(q.join("1.txt"), "news").unwrap();
    fs::write(q.join("2.txt"), "nothing shared").unwrap();
    let text = stdout(&xlnews(
        &[
            "eval",
            "--queries",
            "queries",
            "--corpus",
            "corpus.csv",
            "--lexicon",
            "lexicon.tsv",
            "--format",
            "csv",
        ],
        dir.path(),
    ));
    assert_eq!(text.matches("# query:").count(), 2);
    // Only 1.txt overlaps: news=2 of (news 2, tape 1, hello 1) gives 2/sqrt(6).
    assert!(
        text.ends_with("queries\t2\nmean_top1_score\t0.408248\nzero_overlap\t1\n"),
        "{text}"
    );
}

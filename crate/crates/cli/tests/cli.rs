use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn seedlm(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seedlm"))
        .args(args)
        .current_dir(cwd)
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn core_fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name)
}

const CORPUS: &str = "\
il dente fa male
il dente e la carie
la carie del dente
il bruxismo notturno
il cane corre
il gatto e il dente
";

fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("corpus.txt"), CORPUS).unwrap();
    fs::write(dir.path().join("glossary.txt"), "bruxismo\tbruxism\ndente\n").unwrap();
    dir
}

#[test]
fn score_reproduces_sample_pair() {
    let dir = tempfile::tempdir().unwrap();
    let r = core_fixture("sample_ref.txt");
    let h = core_fixture("sample_hyp.txt");
    let o = seedlm(
        &["score", "--ref", r.to_str().unwrap(), "--hyp", h.to_str().unwrap(), "--json", "s.json"],
        dir.path(),
    );
    assert!(o.status.success(), "{o:?}");
    let out = stdout(&o);
    assert!(out.contains("50.00%"), "{out}");
    assert!(out.contains("Precision 1.00 [ 2 / 2 ] / Recall 0.67 [ 2 / 3 ] / F-Measure 0.80"), "{out}");
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("s.json")).unwrap()).unwrap();
    assert_eq!(json["alignment"]["sub"], 6);
}

#[test]
fn pipeline_from_config_writes_manifest() {
    let dir = workspace();
    fs::write(
        dir.path().join("run.toml"),
        "corpus = [\"corpus.txt\"]\nglossary = \"glossary.txt\"\nbase_lexicon_size = 5\nout_dir = \"out\"\n",
    )
    .unwrap();
    let o = seedlm(&["pipeline", "--config", "run.toml", "--mode", "adapted"], dir.path());
    assert!(o.status.success(), "{o:?}");
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out/adapted/manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["mode"], "adapted");
    assert_eq!(manifest["seeds"], 1);
    assert_eq!(manifest["documents_selected"], 1);
    assert!(dir.path().join("out/adapted/adapted.arpa").exists());
}

#[test]
fn report_writes_one_csv_row_per_run() {
    let dir = workspace();
    fs::write(dir.path().join("ref.txt"), "il (bruxismo) notturno\n").unwrap();
    fs::write(dir.path().join("hyp.txt"), "il bruxismo diurno\n").unwrap();
    let o = seedlm(
        &["pipeline", "--mode", "all", "--corpus", "corpus.txt", "--glossary", "glossary.txt", "--lexicon-size", "5",
          "--out-dir", "out", "--embeddings", "missing.vec"],
        dir.path(),
    );
    // word2vec needs an existing embedding file: nothing runs
    assert_eq!(o.status.code(), Some(1), "{o:?}");
    assert!(!dir.path().join("out/baseline").exists());

    for mode in ["baseline", "adapted"] {
        let o = seedlm(
            &["pipeline", "--mode", mode, "--corpus", "corpus.txt", "--glossary", "glossary.txt", "--lexicon-size",
              "5", "--out-dir", "out"],
            dir.path(),
        );
        assert!(o.status.success(), "{o:?}");
    }
    let o = seedlm(
        &["report", "--run", "out/baseline", "out/adapted", "--ref", "ref.txt", "--hyp", "hyp.txt", "--out",
          "table.csv"],
        dir.path(),
    );
    assert!(o.status.success(), "{o:?}");
    let csv = fs::read_to_string(dir.path().join("table.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "mode,seeds,lex_size,oov_rate,wer,iw_p,iw_r,iw_f,isol_iw_p,isol_iw_r,isol_iw_f");
    // "bruxismo" and "notturno" are outside the 5-word base lexicon; adaptation adds both
    assert_eq!(lines[1], "baseline,0,5,66.67,33.33,1.00,1.00,1.00,1.00,1.00,1.00");
    assert_eq!(lines[2], "adapted,1,7,0.00,33.33,1.00,1.00,1.00,1.00,1.00,1.00");
}

#[test]
fn adapted_without_glossary_is_a_validation_error() {
    let dir = workspace();
    let o = seedlm(&["pipeline", "--mode", "adapted", "--corpus", "corpus.txt", "--out-dir", "out"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("glossary"));
    assert!(!dir.path().join("out/adapted").exists());
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = workspace();
    assert_eq!(seedlm(&["train", "--no-such-flag"], dir.path()).status.code(), Some(1));
    let o = seedlm(&["pipeline", "--mode", "baseline", "--corpus", "corpus.txt", "--lambda", "1.5"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(seedlm(&["--help"], dir.path()).status.code(), Some(0));
}

#[test]
fn malformed_model_is_a_runtime_error() {
    let dir = workspace();
    fs::write(dir.path().join("bad.arpa"), "\\data\\\nngram 1=2\n\n\\1-grams:\n-1\t</s>\n\n\\end\\\n").unwrap();
    let o = seedlm(&["ppl", "--model", "bad.arpa", "--text", "corpus.txt"], dir.path());
    assert_eq!(o.status.code(), Some(2), "{o:?}");
}

#[test]
fn stage_commands_chain() {
    let dir = workspace();
    let run = |args: &[&str]| {
        let o = seedlm(args, dir.path());
        assert!(o.status.success(), "{args:?}: {o:?}");
        o
    };
    run(&["lexicon", "--corpus", "corpus.txt", "--lexicon-size", "5", "--out", "lex.txt"]);
    assert_eq!(fs::read_to_string(dir.path().join("lex.txt")).unwrap().lines().count(), 5);
    run(&["seeds", "--glossary", "glossary.txt", "--lexicon", "lex.txt", "--out", "seeds.tsv"]);
    assert!(fs::read_to_string(dir.path().join("seeds.tsv")).unwrap().contains("bruxismo"));
    run(&["select", "--corpus", "corpus.txt", "--seeds", "seeds.tsv", "--lexicon", "lex.txt", "--out", "ad.txt",
          "--report", "sel.json"]);
    assert_eq!(
        fs::read_to_string(dir.path().join("ad.txt")).unwrap(),
        "il bruxismo notturno\n"
    );
    run(&["train", "--corpus", "corpus.txt", "--lexicon", "lex.txt", "--out", "bg.arpa"]);
    run(&["adapt", "--corpus", "corpus.txt", "--adaptation", "ad.txt", "--lexicon", "lex.txt", "--lambda", "0.5",
          "--out", "ad.arpa", "--prune"]);
    let o = run(&["ppl", "--model", "ad.arpa", "--text", "ad.txt"]);
    assert!(stdout(&o).starts_with("sentences=1 "), "{}", stdout(&o));
    let o = run(&["oov-curve", "--text", "ad.txt", "--corpus", "corpus.txt", "--sizes", "1,5,20"]);
    assert_eq!(stdout(&o).lines().next(), Some("size,oov_percent"));
}

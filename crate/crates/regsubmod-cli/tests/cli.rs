use regsubmod::bench::brute_force_opt;
use regsubmod::Instance;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_regsubmod"));
    c.env_remove("REGSUBMOD_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(dir: &Path, name: &str, params: &str) -> PathBuf {
    let path = dir.join(name);
    let o = run(&["gen", "--family", "random-dicut", "--params", params, "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{o:?}");
    path
}

/// Parses the single data row of a solve record into named fields.
fn record(o: &Output) -> Vec<(String, String)> {
    let text = stdout(o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    header.into_iter().zip(rows[0].iter().map(String::from)).collect()
}

fn field(rec: &[(String, String)], name: &str) -> String {
    rec.iter().find(|(k, _)| k == name).unwrap().1.clone()
}

#[test]
fn help_lists_every_algorithm_with_a_guarantee() {
    let o = run(&["--help"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["brute", "deterministic-dg", "randomized-dg", "oblivious-dicut", "cut-lp", "dicut-lp", "pipeline-nonpos", "pipeline-0280"] {
        let line = text.lines().find(|l| l.trim_start().starts_with(name)).unwrap_or_else(|| panic!("{name} missing"));
        assert!(line.contains('('), "{line}");
    }
}

#[test]
fn brute_matches_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "i.json", "n=9,seed=4,ell=mixed");
    let inst = Instance::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let o = run(&["solve", "--instance", path.to_str().unwrap(), "--algo", "brute", "--alpha", "1", "--beta", "1"]);
    assert!(o.status.success());
    let rec = record(&o);
    let (set, value) = brute_force_opt(&inst, 1.0, 1.0).unwrap();
    assert_eq!(field(&rec, "set"), set.to_string());
    assert!((field(&rec, "total").parse::<f64>().unwrap() - value).abs() < 1e-12);
    let elems: Vec<usize> = field(&rec, "elements").split_whitespace().map(|e| e.parse().unwrap()).collect();
    assert_eq!(elems, regsubmod::setfn::elements(set));
}

#[test]
fn randomized_and_pipeline_records() {
    let dir = tempfile::tempdir().unwrap();
    let pos = gen(dir.path(), "pos.json", "n=7,seed=2,ell=nonneg");
    let o = run(&["solve", "--instance", pos.to_str().unwrap(), "--algo", "randomized-dg", "--r", "2", "--seed", "7"]);
    assert!(o.status.success());
    let rec = record(&o);
    assert!(field(&rec, "total").parse::<f64>().unwrap() >= 0.0);
    assert_eq!(field(&rec, "seed"), "7");

    let neg = gen(dir.path(), "neg.json", "n=6,seed=2,ell=nonpos");
    let o = run(&["solve", "--instance", neg.to_str().unwrap(), "--algo", "pipeline-nonpos", "--beta", "1", "--steps", "200"]);
    assert!(o.status.success(), "{o:?}");
    assert!(field(&record(&o), "total").parse::<f64>().unwrap() >= 0.0);
}

#[test]
fn outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "i.json", "n=8,seed=5,ell=mixed");
    for args in [
        vec!["table", "--name", "nonneg-comb"],
        vec!["sgap", "--limit", "2ln2"],
        vec!["verify", "--suite", "cutlp", "--seed", "3", "--cases", "20"],
        vec!["gen", "--family", "random-cut", "--params", "n=6,seed=9"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
    // Everything but the wall-clock column is stable for solve.
    let solve = ["solve", "--instance", path.to_str().unwrap(), "--algo", "oblivious-dicut", "--beta", "0.5", "--seed", "11"];
    let strip = |o: Output| record(&o).into_iter().filter(|(k, _)| k != "runtime_ms").collect::<Vec<_>>();
    assert_eq!(strip(run(&solve)), strip(run(&solve)));
}

#[test]
fn table_rows() {
    let o = run(&["table", "--name", "nonpos", "--beta", "0.7,1.0,1.3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("table,beta,alpha"));
    let got: Vec<f64> = lines.map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect();
    for (g, want) in got.iter().zip([0.3478, 0.3856, 0.3982]) {
        assert!((g - want).abs() <= 1e-3, "{g} vs {want}");
    }
}

#[test]
fn sgap_row() {
    let o = run(&["sgap", "--table", "inapprox-nonpos", "--beta", "1.0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    let alpha: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
    assert!((alpha - 0.4773).abs() <= 2e-3, "{row}");
}

#[test]
fn dg_invariants_suite_passes() {
    let o = run(&["verify", "--suite", "dg-invariants", "--seed", "1", "--cases", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "i.json", "n=6,seed=1");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["solve", "--instance", p, "--algo", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["table", "--name", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));

    let constrained = dir.path().join("m.json");
    std::fs::write(&constrained, r#"{"n": 2, "f": {"type": "dicut", "edges": [[0, 1, 1.0]]}, "constraint": {"type": "cardinality", "k": 1}}"#).unwrap();
    let o = run(&["solve", "--instance", constrained.to_str().unwrap(), "--algo", "dicut-lp"]);
    assert_eq!(o.status.code(), Some(1));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2,\n \"f\": [}\n").unwrap();
    let o = run(&["solve", "--instance", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let big = gen(dir.path(), "big.json", "n=24,seed=1");
    assert_eq!(run(&["solve", "--instance", big.to_str().unwrap(), "--algo", "brute"]).status.code(), Some(3));
}

#[test]
fn threads_flag_and_env() {
    let o = bin().env("REGSUBMOD_THREADS", "1").args(["table", "--name", "nonpos", "--beta", "1"]).output().unwrap();
    assert!(o.status.success());
    let o = bin().env("REGSUBMOD_THREADS", "many").args(["table", "--name", "nonpos"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(run(&["--threads", "2", "sgap", "--limit", "0408"]).status.success());
}

#[test]
fn gen_writes_one_file_per_instance() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pair.json");
    assert!(run(&["gen", "--family", "online-bad", "--params", "alpha=0.5", "--out", out.to_str().unwrap()]).status.success());
    for i in 0..2 {
        let text = std::fs::read_to_string(dir.path().join(format!("pair-{i}.json"))).unwrap();
        assert_eq!(Instance::from_json(&text).unwrap().n(), 2);
    }
    assert_eq!(run(&["gen", "--family", "random-dicut", "--params", "n"]).status.code(), Some(2));
}

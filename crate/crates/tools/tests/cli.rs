use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_homwarm"))
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_and_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k.dimacs");
    let o = run(&["gen", "kneser:5,2", "--format", "dimacs", "-o", file.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["warmth", file.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "3");
    assert_eq!(v["mode"], "exact");
}

#[test]
fn warmth_modes() {
    let o = run(&["warmth", "complete:5", "--mode", "exact"]);
    assert!(stdout(&o).starts_with("zeta = 5 (exact mode)"), "{}", stdout(&o));
    let o = run(&["warmth", "toroidal:2,5"]);
    assert!(stdout(&o).starts_with("zeta = 3 (heuristic mode)"));
    let o = run(&["warmth", "toroidal:2,5", "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["warmth", "path:3", "--no-fold", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "2");
}

#[test]
fn homology_text_and_json() {
    let o = run(&["homology", "complete:4", "--f-vector"]);
    let s = stdout(&o);
    assert!(s.contains("H_0: Z^1") && s.contains("H_2: Z^1") && s.contains("f-vector"), "{s}");
    let o = run(&["homology", "grotzsch", "--max-dim", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["homology"]["betti"], serde_json::json!([1, 0, 1, 0]));
    assert_eq!(v["connectivity"]["value"], "1");
    assert_eq!(v["connectivity"]["caveat"], true);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn chromatic_and_fold() {
    assert!(stdout(&run(&["chromatic", "grotzsch"])).starts_with("chi = 4 (exact)"));
    let o = run(&["fold", "path:3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["residue"]["edges"].as_array().unwrap().len(), 1);
}

#[test]
fn conjecture_report() {
    let o = run(&["conjecture", "kneser:6,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["warmth"]["value"], "3");
    assert_eq!(v["connectivity"]["value"], "1");
    assert_eq!(v["checks"]["conjecture_consistent"]["status"], "consistent_with_caveat");
    assert_eq!(v["provenance"]["generator"], "kneser");
    let o = run(&["conjecture", "toroidal:1,5"]);
    assert!(stdout(&o).contains("zeta  = 3"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["warmth", "nosuchfamily:3"]).status.code(), Some(2));
    assert_eq!(run(&["warmth", "cycle:x"]).status.code(), Some(2));
    assert_eq!(run(&["conjecture", "bipartite:0,3"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.txt");
    std::fs::write(&f, "0 1\n1 two\n").unwrap();
    let o = run(&["homology", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = run(&["chromatic", "gnp:60,0.5", "--budget-ms", "0"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
}

#[test]
fn sweep_csv_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let agg = dir.path().join("agg.csv");
    let args = |p: &PathBuf, threads: &str| {
        vec!["sweep".to_string(), "--n".into(), "6,9".into(), "--trials".into(), "4".into(), "--seed".into(), "5".into(),
             "--threads".into(), threads.into(), "--csv".into(), p.to_str().unwrap().into(),
             "--aggregates".into(), agg.to_str().unwrap().into()]
    };
    assert!(Command::new(bin()).args(args(&a, "1")).output().unwrap().status.success());
    assert!(Command::new(bin()).args(args(&b, "2")).output().unwrap().status.success());
    let (ta, tb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ta, tb);
    assert_eq!(ta.lines().count(), 9);
    assert!(ta.starts_with("schema_version,n,trial,seed,graph_id"));
    assert!(std::fs::read_to_string(&agg).unwrap().starts_with("n,trials,edgeless,zeta_mean"));
    let o = run(&["sweep", "--model", "chung-lu", "--n", "10", "--trials", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["model"]["model"], "chung_lu");
}

#[test]
fn paper_suite_subset() {
    let o = run(&["paper-suite", "--only", "1,5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.contains("PASS")).count(), 2, "{s}");
}

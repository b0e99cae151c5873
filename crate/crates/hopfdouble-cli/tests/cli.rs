use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfdouble")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "hopfdouble", "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn golden_axiom_reports() {
    let o = run(&["check", "--suite", "axioms", "--target", "c2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/axioms-c2.txt"));
    let o = run(&["check", "--suite", "axioms", "--target", "c2", "--json"]);
    assert_eq!(stdout(&o), include_str!("golden/axioms-c2.json"));
}

#[test]
fn verify_documents_and_names() {
    assert_eq!(run(&["verify", &data("kc3-f7.json")]).status.code(), Some(0));
    let o = run(&["verify", &data("kc3-bad-antipode.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL antipode-left at (1, 0)"));
    let o = run(&["verify", &data("kc3-bad-scalar.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 13, column 3"));
    assert_eq!(run(&["verify", "sweedler4"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "eval-s3"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "no-such-thing"]).status.code(), Some(2));
}

#[test]
fn mutants_fail_their_condition() {
    for (name, cond) in [("mutant-zeta-bar", "c6"), ("mutant-gamma-antipode", "l1"), ("mutant-trivial-pi", "c2")] {
        let o = run(&["check", "--suite", "pams", "--target", name, "--json"]);
        assert_eq!(o.status.code(), Some(1), "{}", name);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["overall"], false);
        let failing: Vec<&str> = v["entries"].as_array().unwrap().iter().filter(|e| e["pass"] == false).map(|e| e["id"].as_str().unwrap()).collect();
        assert!(failing.iter().any(|id| id.contains(cond)), "{} {:?}", name, failing);
    }
}

#[test]
fn double_emits_a_verifiable_document() {
    let out = std::env::temp_dir().join(format!("hopfdouble-double-{}.json", std::process::id()));
    let path = out.to_string_lossy().into_owned();
    let o = run(&["double", "--pairing", "eval-c3", "--emit", &path]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dim 9"));
    assert!(s.contains("commutative: true"));
    let o = run(&["verify", &path]);
    std::fs::remove_file(&out).ok();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn partial_dual_of_noncommutative_pairing() {
    let o = run(&["partial-dual", "--pairing", "eval-sweedler4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dim 16"));
    assert!(s.contains("associator trivial: true"));
}

#[test]
fn suites_and_listing() {
    let o = run(&["examples", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for word in ["sweedler4", "eval-taft-3-7-2", "mutant-trivial-pi", "schauenburg"] {
        assert!(s.contains(word), "{}", word);
    }
    assert_eq!(run(&["check", "--suite", "yd-rep", "--target", "eval-c2"]).status.code(), Some(0));
    assert_eq!(run(&["check", "--suite", "theorem-1-2", "--target", "trivial-c2-c3"]).status.code(), Some(0));
    assert_eq!(run(&["check", "--suite", "nope", "--target", "c2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["check", "--suite", "phi-psi", "--target", "eval-c2", "--json"]);
    let b = run(&["check", "--suite", "phi-psi", "--target", "eval-c2", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

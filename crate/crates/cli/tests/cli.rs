use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus").join(name)
}

fn treeacc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treeacc")).args(args).output().unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = treeacc(args);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn member_examples() {
    let ar = corpus("AR.aut");
    let (code, out) = run(&["member", "--semantics", "acc-inf", "--aut", path(&ar), "--tree", path(&corpus("TL.tree"))]);
    assert_eq!((code, out.trim()), (0, "true"));
    let (code, out) = run(&["member", "--semantics", "large", "--aut", path(&ar), "--tree", path(&corpus("T00.tree"))]);
    assert_eq!((code, out.trim()), (1, "false"));
}

#[test]
fn member_methods_agree_on_the_corpus() {
    for (a, t, row) in treeacc::corpus::TABLE {
        for (k, s) in treeacc::Semantics::ALL.iter().enumerate() {
            for via in ["direct", "transform", "oracle"] {
                let (code, _) = run(&[
                    "member",
                    "--semantics",
                    s.as_str(),
                    "--aut",
                    path(&corpus(&format!("{a}.aut"))),
                    "--tree",
                    path(&corpus(&format!("{t}.tree"))),
                    "--via",
                    via,
                ]);
                assert_eq!(code, if row[k] { 0 } else { 1 }, "{a} {t} {s} {via}");
            }
        }
    }
}

#[test]
fn transform_writes_automaton_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.aut");
    let (code, text) = run(&[
        "--format", "json", "transform", "--semantics", "rej-fin", "-i", path(&corpus("AR.aut")), "-o", path(&out),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert!(v["report"]["output_colours"].as_u64().unwrap() <= 2);
    assert_eq!(v["report"]["bound_ok"], true);
    let (code, _) = run(&["validate", path(&out)]);
    assert_eq!(code, 0);
}

#[test]
fn witness_reverifies_under_member() {
    let dir = tempfile::tempdir().unwrap();
    for a in ["A1", "AR", "ABinf", "Aseen"] {
        for s in treeacc::Semantics::ALL {
            let aut = corpus(&format!("{a}.aut"));
            let tree = dir.path().join(format!("{a}-{s}.tree"));
            let (code, _) = run(&["witness", "--semantics", s.as_str(), "--aut", path(&aut), "-o", path(&tree)]);
            let (empty, _) = run(&["empty", "--semantics", s.as_str(), "--aut", path(&aut)]);
            if code == 0 {
                assert_eq!(empty, 0, "{a} {s}");
                let (m, _) = run(&["member", "--semantics", s.as_str(), "--aut", path(&aut), "--tree", path(&tree)]);
                assert_eq!(m, 0, "{a} {s}");
            } else {
                assert_eq!((code, empty), (1, 1), "{a} {s}");
            }
        }
    }
}

#[test]
fn empty_language() {
    let (code, out) = run(&["empty", "--semantics", "classical", "--aut", path(&corpus("A0.aut"))]);
    assert_eq!((code, out.trim()), (1, "empty"));
    let (code, out) = run(&["empty", "--semantics", "classical", "--aut", path(&corpus("A1.aut"))]);
    assert_eq!((code, out.trim()), (0, "nonempty"));
}

#[test]
fn classify_reports_cardinalities() {
    let (code, text) = run(&[
        "--format", "json", "classify", "--aut", path(&corpus("AR.aut")), "--tree", path(&corpus("TL.tree")), "--witnesses",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rejecting"], "uncountable");
    assert_eq!(v["accepting"], "countably-infinite");
    assert_eq!(v["accepting_large"], false);
    assert!(v["offending_bscc"].is_array());
}

#[test]
fn fuzz_is_reproducible() {
    let a = run(&["--format", "json", "fuzz", "--seed", "17", "--count", "60"]);
    let b = run(&["--format", "json", "fuzz", "--seed", "17", "--count", "60"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    let (code, _) = run(&["fuzz", "--seed", "4", "--count", "60", "--det"]);
    assert_eq!(code, 0);
}

#[test]
fn dot_export() {
    let (code, text) = run(&["dot", "--aut", path(&corpus("AR.aut")), "--tree", path(&corpus("TL.tree")), "--semantics", "large"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("digraph arena {"));
    assert!(text.contains("peripheries=2"));
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    // usage errors
    assert_eq!(run(&["member", "--aut", path(&corpus("AR.aut"))]).0, 2);
    assert_eq!(run(&["member", "--semantics", "sometimes", "--aut", "x", "--tree", "y"]).0, 2);
    // validation errors
    let bad = dir.path().join("bad.aut");
    std::fs::write(&bad, "alphabet: a\nstates: q:0\ninitial: q\n").unwrap();
    let out = treeacc(&["validate", path(&bad)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("incomplete"));
    let (code, _) = run(&[
        "classify", "--aut", path(&corpus("A1.aut")), "--tree", path(&corpus("TL.tree")),
    ]);
    assert_eq!(code, 3);
}

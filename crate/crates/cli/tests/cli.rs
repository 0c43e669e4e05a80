use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hcolor(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcolor")).current_dir(dir).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_then_verify_and_invariants() {
    let dir = TempDir::new().unwrap();
    let o = hcolor(dir.path(), &["solve", "--graph", "P12", "--target", "P10", "--out", "c.json"]);
    assert_eq!(code(&o), 0, "{o:?}");
    let first = fs::read(dir.path().join("c.json")).unwrap();
    assert_eq!(code(&hcolor(dir.path(), &["verify", "--cert", "c.json"])), 0);
    let o = hcolor(dir.path(), &["invariants", "--cert", "c.json"]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).contains("FAIL"));
    // identical inputs give identical bytes
    hcolor(dir.path(), &["solve", "--graph", "P12", "--target", "P10", "--out", "c.json"]);
    assert_eq!(fs::read(dir.path().join("c.json")).unwrap(), first);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert_eq!(code(&hcolor(d, &["solve", "--graph", "P10", "--target", "THETA", "--out", "x.json"])), 1);
    assert!(!d.join("x.json").exists());
    let budget = ["solve", "--graph", "P10", "--target", "P12", "--budget", "5", "--out", "x.json"];
    assert_eq!(code(&hcolor(d, &budget)), 2);
    assert_eq!(code(&hcolor(d, &["solve", "--graph", "missing.mg", "--target", "P10", "--out", "x.json"])), 3);
    assert_eq!(code(&hcolor(d, &["construct", "--name", "K4", "--ring", "3"])), 3);
    assert_eq!(code(&hcolor(d, &["verify", "--cert", "missing.json"])), 3);
    fs::write(d.join("bad.mg"), "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    assert_eq!(code(&hcolor(d, &["chi", "--graph", "bad.mg"])), 3);
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    hcolor(d, &["solve", "--graph", "P12", "--target", "P10", "--out", "c.json"]);
    let text = fs::read_to_string(d.join("c.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let first = v["payload"]["map"][0].as_u64().unwrap();
    v["payload"]["map"][0] = ((first + 1) % 15).into();
    fs::write(d.join("c.json"), v.to_string()).unwrap();
    let o = hcolor(d, &["verify", "--cert", "c.json"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertex"));
    v["schema_version"] = 9.into();
    fs::write(d.join("c.json"), v.to_string()).unwrap();
    assert_eq!(code(&hcolor(d, &["verify", "--cert", "c.json"])), 3);
}

#[test]
fn graph_facts() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let o = hcolor(d, &["chi", "--graph", "K4", "--out", "k4.json"]);
    assert!(stdout(&o).contains("chromatic index: 3"));
    assert_eq!(code(&hcolor(d, &["verify", "--cert", "k4.json"])), 0);
    assert!(stdout(&hcolor(d, &["chi", "--graph", "P10"])).contains("chromatic index: 4"));

    let o = hcolor(d, &["kcover", "--graph", "P12", "--max", "4", "--out", "k.json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("4 parts"));
    assert_eq!(code(&hcolor(d, &["verify", "--cert", "k.json"])), 0);
    assert_eq!(code(&hcolor(d, &["kcover", "--graph", "P10", "--max", "4"])), 1);

    let o = hcolor(d, &["normal", "--graph", "P10", "--out", "n.json"]);
    assert!(stdout(&o).contains("normal chromatic index: 5"));
    assert_eq!(code(&hcolor(d, &["verify", "--cert", "n.json"])), 0);
    assert_eq!(code(&hcolor(d, &["normal", "--graph", "S10"])), 1);

    for kind in ["bf", "even52", "parity4"] {
        let o = hcolor(d, &["covers", "--graph", "P10", "--kind", kind, "--out", "cv.json"]);
        assert_eq!(code(&o), 0, "{kind}");
        assert_eq!(code(&hcolor(d, &["verify", "--cert", "cv.json"])), 0, "{kind}");
    }
    assert_eq!(code(&hcolor(d, &["covers", "--graph", "S10", "--kind", "bf"])), 1);
}

#[test]
fn construct_outputs_parse_back() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let o = hcolor(d, &["construct", "--name", "THETA"]);
    assert_eq!(stdout(&o), "2 3\n0 1\n0 1\n0 1\n");
    let o = hcolor(d, &["construct", "--ring", "3", "--out", "ring.mg"]);
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(d.join("ring.mg")).unwrap().starts_with("12 18\n"));
    assert!(stdout(&hcolor(d, &["construct", "--expand", "ring.mg", "--vertices", "0,1"])).starts_with("16 24\n"));
    assert!(stdout(&hcolor(d, &["construct", "--expand", "K4"])).starts_with("12 18\n"));
    let o = hcolor(d, &["construct", "--prop10b", "K4", "--cert", "p.json", "--out", "g.mg"]);
    assert_eq!(code(&o), 0);
    let o = hcolor(d, &["verify", "--cert", "p.json"]);
    assert!(stdout(&o).contains("[15, 16, 17]"), "{}", stdout(&o));
    assert_eq!(code(&hcolor(d, &["chi", "--graph", "g.mg"])), 0);
    assert_eq!(code(&hcolor(d, &["construct", "--prop10b", "P10"])), 3);
}

#[test]
fn scans_write_reports_and_certificates() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert_eq!(code(&hcolor(d, &["corpus", "--max", "8", "--out", "corpus.mg"])), 0);
    let o = hcolor(d, &[
        "scan", "--mode", "conjecture", "--target", "S12conj", "--corpus", "corpus.mg", "--report", "r.json",
        "--cert-dir", "certs",
    ]);
    assert_eq!(code(&o), 0, "{o:?}");
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(d.join("r.json")).unwrap()).unwrap();
    let positives = report["positives"].as_array().unwrap();
    assert!(!positives.is_empty());
    for p in positives {
        let cert = format!("certs/entry-{p}.json");
        assert_eq!(code(&hcolor(d, &["verify", "--cert", &cert])), 0);
    }

    let o = hcolor(d, &[
        "scan", "--mode", "rigidity", "--target", "P10", "--corpus", "corpus.mg", "--report", "r2.json",
        "--resume", "3",
    ]);
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(d.join("r2.json")).unwrap()).unwrap();
    assert_eq!(report["entries"][0]["index"], 3);
    assert!(report["positives"].as_array().unwrap().is_empty());

    fs::write(d.join("g6.txt"), "IheA@GUAo\nC~\n").unwrap();
    let o = hcolor(d, &[
        "scan", "--mode", "rigidity", "--target", "P10", "--corpus", "g6.txt", "--report", "r3.json", "--budget", "3",
    ]);
    assert_eq!(code(&o), 2);
    let o = hcolor(d, &["scan", "--mode", "rigidity", "--target", "Q9", "--corpus", "g6.txt", "--report", "r4.json"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn corpus_formats() {
    let dir = TempDir::new().unwrap();
    let o = hcolor(dir.path(), &["corpus", "--min", "10", "--max", "10", "--family", "simple", "--format", "graph6"]);
    assert_eq!(stdout(&o).lines().count(), 19);
    let o = hcolor(dir.path(), &["corpus", "--max", "4", "--family", "multi", "--format", "graph6"]);
    assert_eq!(code(&o), 3);
}

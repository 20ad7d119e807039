use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn lcdgraph(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcdgraph")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let o = lcdgraph(dir, args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn paley41_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["paley", "41", "--out", "p41.graph"]);
    let line = ok(d, &["code-from-graph", "p41.graph", "--field", "2", "--minweight", "--out", "p41.code"]);
    assert_eq!(line, "[41,20,10] even=true lcd=true\n");
    assert_eq!(ok(d, &["minweight", "p41.code"]), "10\n");
    assert_eq!(ok(d, &["lcd", "p41.code"]), "lcd=true hull=0\n");
    ok(d, &["graph-from-code", "p41.code", "--out", "back.graph"]);
    assert_eq!(fs::read_to_string(d.join("back.graph")).unwrap(), fs::read_to_string(d.join("p41.graph")).unwrap());
    assert_eq!(ok(d, &["prank", "p41.graph"]), "20\n");
}

#[test]
fn projector_of_paley_code_is_its_adjacency_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["paley", "17", "--out", "p.graph"]);
    ok(d, &["code-from-graph", "p.graph", "--out", "p.code"]);
    ok(d, &["projector", "p.code", "--out", "pi.exmat"]);
    ok(d, &["convert", "p.graph", "--to", "exmat", "--out", "a.exmat"]);
    assert_eq!(fs::read_to_string(d.join("pi.exmat")).unwrap(), fs::read_to_string(d.join("a.exmat")).unwrap());
}

#[test]
fn weightdist_csv() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("rep.code"), "3 1 2\n111\n").unwrap();
    assert_eq!(ok(d, &["weightdist", "rep.code"]), "weight,count\n0,1\n1,0\n2,0\n3,1\n");
    ok(d, &["dual", "rep.code", "--out", "dual.code"]);
    assert_eq!(fs::read_to_string(d.join("dual.code")).unwrap(), "3 2 2\n101\n011\n");
}

#[test]
fn equiv_on_permuted_copy() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("a.code"), "5 2 2\n11001\n01110\n").unwrap();
    // same codewords with coordinates shuffled
    fs::write(d.join("b.code"), "5 2 2\n10011\n01101\n").unwrap();
    assert_eq!(ok(d, &["equiv", "a.code", "b.code"]), "equivalent=true\n");
    fs::write(d.join("c.code"), "5 2 2\n11000\n00110\n").unwrap();
    assert_eq!(ok(d, &["equiv", "a.code", "c.code", "--method", "bruteforce"]), "equivalent=false\n");
}

#[test]
fn puncture_and_shorten_are_one_indexed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("c.code"), "4 2 2\n1100\n0011\n").unwrap();
    assert_eq!(ok(d, &["puncture", "c.code", "1"]), "3 2 2\n100\n011\n");
    assert_eq!(ok(d, &["shorten", "c.code", "1"]), "3 1 2\n011\n");
    let o = lcdgraph(d, &["puncture", "c.code", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn iso_groups_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("c5.graph"), "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    ok(d, &["paley", "5", "--out", "p5.graph"]);
    fs::write(d.join("path.graph"), "5 4\n0 1\n1 2\n2 3\n3 4\n").unwrap();
    let out = ok(d, &["iso", "c5.graph", "p5.graph", "path.graph"]);
    assert_eq!(out, "classes=2\nc5.graph class=0\np5.graph class=0\npath.graph class=1\n");
    assert!(ok(d, &["iso", "c5.graph", "p5.graph"]).contains("isomorphic=true"));
}

#[test]
fn ternary_two_graph_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("k4.graph"), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    assert_eq!(ok(d, &["code-from-graph", "k4.graph", "--field", "3", "--out", "k4.code"]), "[4,3] lcd=true two-graph=true\n");
    ok(d, &["switch", "k4.graph", "0", "2", "--out", "s.graph"]);
    assert!(ok(d, &["switch", "k4.graph", "--iso", "s.graph"]).starts_with("switching-isomorphic=true"));
    ok(d, &["code-from-graph", "s.graph", "--field", "3", "--out", "s.code"]);
    assert_eq!(ok(d, &["equiv", "k4.code", "s.code", "--method", "twograph"]), "equivalent=true\n");
    let tg = ok(d, &["twograph", "s.graph"]);
    assert!(tg.starts_with("4 4\n"));
    assert_eq!(lcdgraph(d, &["code-from-graph", "k4.graph", "--field", "2"]).status.code(), Some(2));
}

#[test]
fn bounds_from_parameters_and_graph() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = ok(d, &["bounds", "10", "3", "0", "1"]);
    assert!(out.contains("A:   max 4 (ceil 4)"), "{out}");
    assert!(out.contains("A+I: max 3 (ceil 3)"), "{out}");
    assert_eq!(lcdgraph(d, &["bounds", "10", "3", "0", "2"]).status.code(), Some(2));
    ok(d, &["paley", "9", "--out", "p9.graph"]);
    assert!(ok(d, &["bounds", "p9.graph"]).contains("dual_d=3"));
}

#[test]
fn verify_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = ok(d, &["verify", "projector", "paley", "--samples", "30"]);
    let b = ok(d, &["verify", "projector", "paley", "--samples", "30", "--jobs", "2"]);
    assert_eq!(a, b);
    assert!(a.lines().all(|l| l.starts_with("CLAIM ") || l.starts_with("SUMMARY ")));
    assert!(a.contains("CLAIM paley.41-parameters PASS [41,20,10]"));
    assert!(!d.join("verify-failures").exists());
}

#[test]
fn input_errors_exit_2_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("bad.graph"), "3 2\n0 1\n2 1\n").unwrap();
    let o = lcdgraph(d, &["convert", "bad.graph", "--to", "exmat"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(lcdgraph(d, &["verify", "nope"]).status.code(), Some(2));
    assert_eq!(lcdgraph(d, &["frobnicate"]).status.code(), Some(2));
    assert_eq!(lcdgraph(d, &["lcd", "missing.code"]).status.code(), Some(2));
}

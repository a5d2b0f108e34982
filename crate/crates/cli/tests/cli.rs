use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linkcohesion"))
}

fn karate(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn score_writes_one_row_per_edge() {
    let o = run(&["score", path_str(&karate("karate.txt"))]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "u,v,a1,a2,a3,c1,c2,c3,cohesion");
    assert_eq!(rows.len(), 79);
    assert!(stderr(&o).contains("config: Score"));
}

#[test]
fn prune_reuses_score_table() {
    let dir = TempDir::new().unwrap();
    let edges = karate("karate.txt");
    let scores = dir.path().join("scores.csv");
    let curve = dir.path().join("curve.csv");
    let pruned = dir.path().join("pruned.txt");
    assert!(run(&["score", path_str(&edges), "-o", path_str(&scores)])
        .status
        .success());
    let o = run(&[
        "prune",
        path_str(&edges),
        "--scores",
        path_str(&scores),
        "--curve",
        path_str(&curve),
        "-o",
        path_str(&pruned),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stderr(&o).contains("removed 28 of 78 edges"));
    let curve = std::fs::read_to_string(curve).unwrap();
    assert_eq!(curve.lines().count(), 80);
    let text = std::fs::read_to_string(pruned).unwrap();
    assert!(text.starts_with("# vertices: 34 edges: 50"));
}

#[test]
fn scores_for_another_graph_are_rejected() {
    let dir = TempDir::new().unwrap();
    let other = dir.path().join("other.txt");
    std::fs::write(&other, "1 2\n2 3\n1 3\n").unwrap();
    let scores = dir.path().join("scores.csv");
    assert!(run(&["score", path_str(&other), "-o", path_str(&scores)])
        .status
        .success());
    let o = run(&[
        "sweep",
        path_str(&karate("karate.txt")),
        "--scores",
        path_str(&scores),
    ]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn truss_levels_and_labels() {
    let dir = TempDir::new().unwrap();
    let levels = dir.path().join("levels.csv");
    let o = run(&[
        "truss",
        path_str(&karate("karate.txt")),
        "--levels",
        path_str(&levels),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        std::fs::read_to_string(levels).unwrap(),
        "k,cluster_count\n2,1\n3,1\n4,2\n5,1\n"
    );
    let out = stdout(&o);
    assert!(out.starts_with("vertex,community\n"));
    // Only the 12 vertices in a detected community are listed.
    assert_eq!(out.lines().count(), 13);
}

#[test]
fn eval_single_and_ablation() {
    let edges = karate("karate.txt");
    let truth = karate("karate_club.txt");
    let o = run(&[
        "eval",
        path_str(&edges),
        path_str(&truth),
        "--method",
        "original",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let row = out.lines().nth(1).unwrap();
    assert!(row.starts_with("original,\"\",,78,4,2,2,0.478"), "{row}");

    let o = run(&[
        "eval",
        path_str(&edges),
        path_str(&truth),
        "--weights",
        "1,1,1",
        "--weights",
        "0,1,0",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("mdcore,\"1,1,1\",,50,,0,2,,"));
    assert!(stderr(&o).contains("f-score: --"));
}

#[test]
fn eval_writes_detected_communities() {
    let dir = TempDir::new().unwrap();
    let detected = dir.path().join("detected.csv");
    let o = run(&[
        "eval",
        path_str(&karate("karate.txt")),
        path_str(&karate("karate_club.txt")),
        "--method",
        "original",
        "--detected",
        path_str(&detected),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(detected).unwrap();
    assert_eq!(text.lines().skip(1).count(), 12);
}

#[test]
fn gen_round_trips_through_eval() {
    let dir = TempDir::new().unwrap();
    let edges = dir.path().join("g.txt");
    let truth = dir.path().join("t.csv");
    let o = run(&[
        "gen",
        "--n",
        "120",
        "--communities",
        "3",
        "--p-in",
        "0.4",
        "--p-out",
        "0.01",
        "--seed",
        "3",
        "-o",
        path_str(&edges),
        "--truth-output",
        path_str(&truth),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let again = dir.path().join("g2.txt");
    run(&[
        "gen",
        "--n",
        "120",
        "--communities",
        "3",
        "--p-in",
        "0.4",
        "--p-out",
        "0.01",
        "--seed",
        "3",
        "-o",
        path_str(&again),
    ]);
    assert_eq!(
        std::fs::read(&edges).unwrap(),
        std::fs::read(&again).unwrap()
    );

    let o = run(&[
        "eval",
        path_str(&edges),
        path_str(&truth),
        "--method",
        "sparsify",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o)
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("sparsify,\"\",0.5,"));
}

#[test]
fn betweenness_with_correlation() {
    let o = run(&[
        "betweenness",
        path_str(&karate("karate.txt")),
        "--correlate",
        "1,1,1",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("pearson(cohesion, betweenness) = "));
    assert_eq!(out.lines().skip(1).count(), 79);
}

#[test]
fn sparsify_shrinks_graph() {
    let o = run(&[
        "sparsify",
        path_str(&karate("karate.txt")),
        "--exponent",
        "0.5",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let header = stdout(&o).lines().next().unwrap().to_owned();
    let kept: usize = header.rsplit(' ').next().unwrap().parse().unwrap();
    assert!(kept < 78);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.txt");
    assert_eq!(run(&["score", path_str(&missing)]).status.code(), Some(3));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1 2\n3\n").unwrap();
    let o = run(&["score", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("line 2"));

    let loops = dir.path().join("loops.txt");
    std::fs::write(&loops, "1 1\n1 2\n").unwrap();
    assert_eq!(
        run(&["score", path_str(&loops), "--strict"]).status.code(),
        Some(4)
    );
    assert!(run(&["score", path_str(&loops)]).status.success());

    let karate = karate("karate.txt");
    assert_eq!(
        run(&["sparsify", path_str(&karate), "--exponent", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["score", path_str(&karate), "--weights", "0,0,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["truss", path_str(&karate), "--min-level", "1"])
            .status
            .code(),
        Some(2)
    );

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing\n").unwrap();
    assert_eq!(run(&["score", path_str(&empty)]).status.code(), Some(4));

    let labels = dir.path().join("labels.txt");
    std::fs::write(&labels, "99 a\n").unwrap();
    assert_eq!(
        run(&["eval", path_str(&karate), path_str(&labels)])
            .status
            .code(),
        Some(4)
    );
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const C4: &str = "# 4-cycle, tree is the path 0-1-2-3\n4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 0\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swapcrit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_rejects_tiny_n() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("x.gts");
    assert_eq!(
        run(&["gen", "--n", "2", "--out", s(&out)]).status.code(),
        Some(2)
    );
    assert!(!out.exists());
}

#[test]
fn gen_is_seeded_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.gts");
    let b = dir.path().join("b.gts");
    let dot = dir.path().join("a.dot");
    for p in [&a, &b] {
        let out = run(&[
            "gen",
            "--n",
            "15",
            "--chords",
            "6",
            "--seed",
            "42",
            "--out",
            s(p),
            "--dot",
            s(&dot),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("style=solid").count(), 14);
    assert_eq!(text.matches("style=dashed").count(), 7);
}

#[test]
fn best_swaps_on_four_cycle() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c4.gts", C4);
    let out = run(&["best-swaps", "--in", s(&f), "--engine", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    for (row, e) in rows.iter().zip(["0-1", "1-2", "2-3"]) {
        let cols: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(cols, [e, "1/1", "0-3", "AGREE"]);
    }
}

#[test]
fn critical_set_on_four_cycle() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c4.gts", C4);
    let dot = dir.path().join("c.dot");
    let out = run(&[
        "critical-set",
        "--in",
        s(&f),
        "--edge",
        "1,2",
        "--dot",
        s(&dot),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("set 0-3\n"), "{text}");
    assert!(text.contains("case SIZE2\n"));
    assert!(text.contains("verified true\n"));
    assert!(text.contains("min-size 1\n"));
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.contains("0 -- 3 [style=dashed, color=\"red\""));
    assert!(dot.contains("1 -- 2 [style=solid, color=\"blue\""));
}

#[test]
fn critical_set_rejects_non_tree_edge() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c4.gts", C4);
    assert_eq!(
        run(&["critical-set", "--in", s(&f), "--edge", "0,3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["critical-set", "--in", s(&f), "--edge", "0,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["critical-set", "--in", s(&f), "--edge", "zero"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn corrupted_inputs_exit_2() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("truncated", "4 4\n0 1 1\n1 2 1\n2 3 1\n"),
        ("bad-flag", "4 4\n0 1 1\n1 2 1\n2 3 2\n0 3 0\n"),
        ("cycle-in-tree", "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n"),
        ("bridge", "4 4\n0 1 1\n1 2 1\n0 2 0\n2 3 1\n"),
        ("garbage", "hello\n"),
    ];
    for (name, body) in cases {
        let f = write(&dir, name, body);
        let out = run(&["stretch", "--in", s(&f)]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(!out.stderr.is_empty(), "{name}");
    }
    assert_eq!(
        run(&["stretch", "--in", "/nonexistent/file.gts"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn stretch_of_four_cycle_path() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c4.gts", C4);
    let out = run(&["stretch", "--in", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "3/1");
}

#[test]
fn verify_exhaustive_n4_passes() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("r.json");
    let out = run(&[
        "verify",
        "--exhaustive",
        "n=4",
        "--checks",
        "theorem,lemma,claim15,bestswap,proof-trace,phi",
        "--report",
        s(&report),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(doc["instances"], 76);
    assert!(doc["wall_clock_ms"].is_u64());
    assert_eq!(doc["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_writes_counterexamples_and_exits_1() {
    // Edges away from the cut can dominate the full stretch after a swap,
    // so the oracle check reports disagreements on random inputs.
    let dir = TempDir::new().unwrap();
    let cx = dir.path().join("cx");
    let out = run(&[
        "verify",
        "--random",
        "n=10..14,chords=3..6,count=30,seed=5",
        "--checks",
        "oracle",
        "--out-dir",
        s(&cx),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let list = doc["counterexamples"].as_array().unwrap();
    assert!(!list.is_empty());
    for item in list {
        let file = item["file"].as_str().unwrap();
        let text = std::fs::read_to_string(file).unwrap();
        assert!(text.starts_with("# oracle failed on tree edge"));
    }
}

#[test]
fn verify_input_validation() {
    assert_eq!(
        run(&["verify", "--exhaustive", "n=7"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--random", "n=8,bogus=1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--exhaustive", "n=4", "--checks", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify"]).status.code(), Some(2));
}

const K4_STAR: &str = "4 6\n0 1 1\n0 2 1\n0 3 1\n1 2 0\n1 3 0\n2 3 0\n";

#[test]
fn best_swaps_on_k4_star() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k4.gts", K4_STAR);
    let out = run(&["best-swaps", "--in", s(&f), "--engine", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let expected = [
        ["0-1", "3/1", "1-2", "1-3", "AGREE"],
        ["0-2", "3/1", "1-2", "2-3", "AGREE"],
        ["0-3", "3/1", "1-3", "2-3", "AGREE"],
    ];
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows, expected);
}

#[test]
fn critical_set_on_k4_star() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k4.gts", K4_STAR);
    let out = run(&[
        "critical-set",
        "--in",
        s(&f),
        "--edge",
        "0,1",
        "--json",
        "--trace",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["verified"], true);
    assert!(doc["set"].as_array().unwrap().len() <= 4);
    assert_eq!(doc["min_size"], 2);
    assert!(doc["trace"].is_object());
}

#[test]
fn gen_models_produce_loadable_files() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.gts");
    let b = dir.path().join("b.gts");
    let gen_a = [
        "gen",
        "--model",
        "cycle-chords",
        "--n",
        "6",
        "--chords",
        "1",
        "--tree",
        "bfs",
        "--seed",
        "7",
        "--out",
        s(&a),
    ];
    let gen_b = [
        "gen",
        "--model",
        "augment",
        "--n",
        "30",
        "--density",
        "0.12",
        "--seed",
        "1",
        "--out",
        s(&b),
    ];
    for args in [&gen_a[..], &gen_b[..]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).trim().ends_with(".gts"));
    }
    for p in [&a, &b] {
        assert_eq!(run(&["stretch", "--in", s(p)]).status.code(), Some(0));
        assert_eq!(
            run(&["verify", "--in", s(p), "--checks", "theorem"])
                .status
                .code(),
            Some(0)
        );
    }
}

#[test]
fn verify_all_checks_exit_code_tracks_failures() {
    let dir = TempDir::new().unwrap();
    let cx = dir.path().join("cx");
    let out = run(&[
        "verify",
        "--exhaustive",
        "n=4",
        "--checks",
        "all",
        "--json",
        "--out-dir",
        s(&cx),
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let tally = doc["tally"].as_object().unwrap();
    for (name, t) in tally {
        if name != "oracle" {
            assert_eq!(t["failed"], 0, "{name}");
        }
    }
    let hist = &doc["theorem"]["case_histogram"];
    assert!(hist["SIZE2"].as_u64().unwrap() > hist["SIZE4"].as_u64().unwrap_or(0));
    let failed: u64 = tally.values().map(|t| t["failed"].as_u64().unwrap()).sum();
    let files = doc["counterexamples"].as_array().unwrap();
    assert_eq!(out.status.code(), Some(if failed == 0 { 0 } else { 1 }));
    assert_eq!(failed == 0, files.is_empty());
    for item in files {
        assert!(Path::new(item["file"].as_str().unwrap()).exists());
    }
}

use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_primzono"));
    // Keep tests hermetic: no shared cache unless a test opts in.
    cmd.env_remove("PRIMZONO_CACHE");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn primzono")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generators_csv_octagon_family() {
    let out = run(&["generators", "-d", "2", "-p", "2", "-q", "1", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "g0,g1\n0,1\n1,-1\n1,0\n1,1\n");
}

#[test]
fn generators_positive_linf() {
    let out = run(&["generators", "-d", "2", "-p", "2", "-q", "inf", "--positive", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 6); // header + 5 generators
}

#[test]
fn summary_json_published_values() {
    let out = run(&["summary", "-d", "3", "-p", "2", "-q", "1", "--no-cache"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["summary"]["count"], 48);
    assert_eq!(doc["summary"]["diameter"], 9);
    assert_eq!(doc["summary"]["grid"], 5);
    assert_eq!(doc["meta"]["q"], "1");
}

#[test]
fn vertices_json_octagon() {
    let out = run(&["vertices", "-d", "2", "-p", "2", "-q", "1", "--no-cache"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let vertices = doc["vertices"].as_array().unwrap();
    assert_eq!(vertices.len(), 8);
    assert_eq!(vertices[0]["z"], serde_json::json!([-3, -1]));
    assert_eq!(vertices[0]["signs"].as_array().unwrap().len(), 4);
}

#[test]
fn delta_table_matches_published_values() {
    let out = run(&["delta-table", "--kmax", "17", "--format", "csv"]);
    assert!(out.status.success());
    let diameters: Vec<u64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert_eq!(diameters, vec![2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 9, 10, 10, 10, 11, 12]);
}

#[test]
fn delta_construct_record() {
    let out = run(&["delta", "-d", "3", "-k", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["diameter"], 6);
    assert_eq!(doc["grid"], 3);
    assert_eq!(doc["inferred_schedule"], true);
}

#[test]
fn bad_flags_exit_1() {
    let out = run(&["generators", "-d", "2"]); // missing -p
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["generators", "-d", "2", "-p", "2", "-q", "zero"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn cap_exceeded_exit_2() {
    let out = run(&["summary", "-d", "3", "-p", "2", "-q", "1", "--no-cache", "--vertex-cap", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["generators", "-d", "3", "-p", "2", "-q", "1", "--generator-cap", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["vertices", "-d", "2", "-p", "2", "-q", "inf", "--cache-dir", cache];
    let first = run(&args);
    assert!(first.status.success());
    let entries: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1, "one cache entry written");

    // Cached answer is byte-identical.
    let second = run(&args);
    assert_eq!(stdout(&first), stdout(&second));

    // A corrupted entry is recomputed, not trusted.
    let path = entries[0].as_ref().unwrap().path();
    fs::write(&path, b"not a cache entry").unwrap();
    let third = run(&args);
    assert!(third.status.success());
    assert_eq!(stdout(&first), stdout(&third));
}

#[test]
fn cache_env_variable_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env("PRIMZONO_CACHE", dir.path())
        .args(["summary", "-d", "2", "-p", "1", "-q", "inf"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn matroid_solve_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.txt");
    let w = dir.path().join("w.csv");
    fs::write(&m, "uniform 12 6\n").unwrap();
    fs::write(&w, "0,0,1,1,0,0,1,1,0,0,1,1\n0,1,0,1,0,1,0,1,0,1,0,1\n").unwrap();
    let out = run(&[
        "matroid-solve",
        "--matroid",
        m.to_str().unwrap(),
        "--weights",
        w.to_str().unwrap(),
        "-p",
        "1",
        "--verify-bruteforce",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["projection"], serde_json::json!([3, 6]));
    assert_eq!(doc["value"], "45");
    assert_eq!(doc["counterparts"], 8);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["indicator"], serde_json::json!([0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]));
}

#[test]
fn matroid_solve_graphic_and_linear() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("triangle.txt");
    let w = dir.path().join("w.csv");
    fs::write(&m, "graphic\n0 1\n1 2\n0 2\n").unwrap();
    fs::write(&w, "1,0,1\n0,1,1\n").unwrap();
    let out = run(&[
        "matroid-solve",
        "--matroid",
        m.to_str().unwrap(),
        "--weights",
        w.to_str().unwrap(),
        "-p",
        "1",
        "--objective",
        "linear",
        "--linear",
        "2,1",
        "--verify-bruteforce",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // Best spanning tree under 2y1+y2: edges 0 and 2 give (2,1) -> 5.
    assert_eq!(doc["value"], "5");
}

#[test]
fn matroid_file_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("bad.txt");
    let w = dir.path().join("w.csv");
    fs::write(&m, "graphic\n0 1\n0 x\n").unwrap();
    fs::write(&w, "1,0\n").unwrap();
    let out = run(&[
        "matroid-solve",
        "--matroid",
        m.to_str().unwrap(),
        "--weights",
        w.to_str().unwrap(),
        "-p",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":3:"));
}

#[test]
fn verify_quick_suite_passes() {
    let out = run(&["verify"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("0 failed"));
    assert!(!text.contains("FAIL "));
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fitgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fitgroup"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

/// Compares against a stored report; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, args: &[&str]) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let mut full = args.to_vec();
    full.extend(["--json", out.to_str().unwrap()]);
    let o = fitgroup(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    let got = std::fs::read_to_string(&out).unwrap();
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden, &got).unwrap();
    }
    let want = std::fs::read_to_string(&golden).unwrap();
    assert!(got == want, "report differs from {}", golden.display());
}

#[test]
fn groups_list_and_show() {
    let o = fitgroup(&["groups", "list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 28);
    assert!(text.lines().any(|l| l.starts_with("S4 ") && l.contains("24")));

    let o = fitgroup(&["groups", "show", "Q8"]);
    assert!(stdout(&o).starts_with("Q8 (order 8,"));
    let o = fitgroup(&["groups", "show", "M11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("M11"));
}

#[test]
fn ingest_reports_order_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write(dir.path(), "s3.txt", "degree 3\ngen (1 2)\ngen (1 2 3)\n");
    let o = fitgroup(&["ingest", s3.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("order 6"));

    let bad = write(dir.path(), "bad.txt", "degree 3\ngen (1 2)(2 3)\n");
    let o = fitgroup(&["ingest", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 2") && err.contains("repeated"), "{err}");

    let o = fitgroup(&["ingest", "tests/data/a5xc7.txt"]);
    assert!(stdout(&o).contains("order 420"), "{}", stderr(&o));
}

#[test]
fn radical_and_injectors() {
    let o = fitgroup(&["radical", "--group", "S4", "--class", "nil"]);
    assert!(stdout(&o).contains("of order 4"));

    let o = fitgroup(&[
        "injectors",
        "--group",
        "S4",
        "--class",
        "PiNil({3})",
        "--method",
        "construct",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(
        text.contains("1 injector(s) in 1 conjugacy class(es); agrees with oracle"),
        "{text}"
    );
    assert!(text.contains("of order 12 = ["));

    let o = fitgroup(&["injectors", "--group", "A5", "--class", "nil"]);
    assert!(stdout(&o).contains("21 injector(s) in 3 conjugacy class(es)"));

    let o = fitgroup(&["injectors", "--group", "A5", "--class", "nil", "--method", "construct"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not in"));

    let o = fitgroup(&["injectors", "--group", "S4", "--class", "sol", "--method", "construct"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no constructive method"));
}

#[test]
fn verify_exit_codes() {
    let o = fitgroup(&["verify", "--suite", "lem-2.4", "--max-order", "60"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("total failures: 0"));

    let o = fitgroup(&["verify", "--suite", "thm-7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown suite"));
}

#[test]
fn config_file_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.cfg", "pi = {3}\nmax_order = 12\n");
    let o = fitgroup(&[
        "verify",
        "--suite",
        "lem-3.1",
        "--config",
        cfg.to_str().unwrap(),
        "--max-order",
        "6",
        "--json",
        "-",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("\"max_order\": 6"));
    assert!(text.contains("\"pi={3}\""));
    assert!(!text.contains("\"label\": \"D8\""));

    let bad = write(dir.path(), "bad.cfg", "pi = {3}\n\nspeed = fast\n");
    let o = fitgroup(&["verify", "--suite", "lem-3.1", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn group_file_joins_the_catalog() {
    let o = fitgroup(&[
        "verify",
        "--suite",
        "thm-1.5",
        "--group-file",
        "tests/data/a5xc7.txt",
        "--x",
        "Epi({2,3,5})",
        "--pi",
        "{7}",
        "--json",
        "-",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("\"label\": \"A5xC7-file\""));
}

#[test]
fn golden_single_suite() {
    check_golden(
        "sylow_small.json",
        &["verify", "--suite", "sylow-sanity", "--max-order", "6"],
    );
}

#[test]
fn golden_default_run() {
    check_golden("default_run.json", &["verify", "--suite", "all"]);
}

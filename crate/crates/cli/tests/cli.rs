use std::fs;
use std::process::{Command, Output};

fn adjvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adjvol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Report text above the timing section.
fn stable_part(text: &str) -> &str {
    text.split("\n[timing]").next().unwrap()
}

#[test]
fn nvol_families() {
    for (graph, want) in [
        ("cycle:4", "16"),
        ("wheel:3", "20"),
        ("path:4", "8"),
        ("kmm:6,2", "248"),
    ] {
        let o = adjvol(&["nvol", graph]);
        assert!(o.status.success(), "{graph}");
        let out = stdout(&o);
        assert!(out.starts_with("adjvol-report v1\n"));
        assert!(out.contains(&format!("\nvalue={want}\n")), "{graph}: {out}");
    }
}

#[test]
fn nvol_from_file_and_strategies_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.txt");
    fs::write(&path, "# star\n4 3\n1 2\n2 3\n2 4\n").unwrap();
    let p = path.to_str().unwrap();
    for strategy in ["auto", "enumerate"] {
        let o = adjvol(&["nvol", p, "--strategy", strategy]);
        assert!(o.status.success());
        assert!(stdout(&o).contains("\nvalue=8\n"));
    }
}

#[test]
fn nvol_trace_and_json() {
    let o = adjvol(&["nvol", "wheel:5", "--trace"]);
    let out = stdout(&o);
    assert!(out.contains("[trace]\nnvol-trace v1\n"), "{out}");
    let o = adjvol(&["nvol", "cycle:5", "--json", "--trace"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "40");
    assert_eq!(v["trace"]["rule"], "closed-form");
}

#[test]
fn enum_listing() {
    let o = adjvol(&["enum", "cycle:3"]);
    assert_eq!(
        stdout(&o),
        "0 0 2\n0 1 1\n0 2 0\n1 0 1\n1 1 0\n2 0 0\n# count=6\n"
    );
    let o = adjvol(&["enum", "path:2"]);
    assert_eq!(stdout(&o), "0 1\n1 0\n# count=2\n");
    let one = adjvol(&["enum", "wheel:5", "--workers", "1"]);
    let four = adjvol(&["enum", "wheel:5", "--workers", "4"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(adjvol(&["nvol", "nosuch:3"]).status.code(), Some(2));
    assert_eq!(adjvol(&["nvol", "cycle:2"]).status.code(), Some(2));
    assert_eq!(adjvol(&["nvol", "./missing.txt"]).status.code(), Some(2));
    assert_eq!(adjvol(&["frobnicate"]).status.code(), Some(2));
    let capped = adjvol(&[
        "nvol",
        "complete:12",
        "--strategy",
        "enumerate",
        "--max-n",
        "10",
    ]);
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "bijections", "--samples", "10"][..],
        &["verify", "formulas", "--n-max", "7", "--samples", "20"][..],
        &["verify", "recurrences", "--n-max", "6", "--samples", "20"][..],
        &["verify", "checkers", "--n-max", "5", "--samples", "200"][..],
    ] {
        let o = adjvol(args);
        let out = stdout(&o);
        assert!(o.status.success(), "{args:?}\n{out}");
        assert!(out.contains("fail=0"), "{out}");
    }
}

#[test]
fn verify_is_reproducible() {
    let args = [
        "verify",
        "recurrences",
        "--n-max",
        "6",
        "--samples",
        "15",
        "--seed",
        "9",
    ];
    let a = stdout(&adjvol(&args));
    let b = stdout(&adjvol(&args));
    assert_eq!(stable_part(&a), stable_part(&b));
}

#[test]
fn scan_wheels_appends_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wheels.txt");
    let p = path.to_str().unwrap();
    let o = adjvol(&["scan", "wheels", "--n-max", "3", "--out", p]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("# scan wheels --n-max 3"));
    assert!(
        lines[1].contains("n=4 formula=20 oracle=20 agree=yes"),
        "{}",
        lines[1]
    );
    adjvol(&["scan", "wheels", "--n-max", "3", "--out", p]);
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 4);
}

#[test]
fn scan_outerplanar_is_worker_independent() {
    let run = |w: &str| {
        let o = adjvol(&[
            "scan",
            "outerplanar-conjecture",
            "--n-max",
            "8",
            "--samples",
            "30",
            "--seed",
            "4",
            "--workers",
            w,
        ]);
        assert!(o.status.success());
        stable_part(&stdout(&o)).to_string()
    };
    let one = run("1");
    assert_eq!(one, run("2"));
    assert_eq!(one, run("8"));
    assert!(one.contains("conjecture-agree="));
}

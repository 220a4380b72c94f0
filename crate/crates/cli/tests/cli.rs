use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn posr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_reports_zero_divisors_and_conditions() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ex26.psr");
    let o = posr(&["construct", "example-2.6:k=2", "-o", arg(&file)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = posr(&["analyze", arg(&file)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("Z = {a,b1,b2}\n"), "{out}");
    assert!(out.contains("c2 = false"));
    assert!(out.contains("c3 = true\n"));
}

#[test]
fn ring_ag_shape_line() {
    let o = posr(&["ring", "ag", "zn:8", "--shape"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "complete n=2\n");
    let o = posr(&["ring", "ag", "zn:12", "--shape"]);
    assert_eq!(stdout(&o), "two-star r=1 s=1 (K1+K1+K1+K1)\n");
}

#[test]
fn census_files_of_order_three_are_not_isomorphic() {
    let dir = tempfile::tempdir().unwrap();
    let o = posr(&["enumerate", "--order", "3", "--emit-dir", arg(dir.path())]);
    assert_eq!(code(&o), 0);
    let line = stdout(&o);
    assert!(
        line.starts_with("order=3 classes=2 labeled=2 seconds="),
        "{line}"
    );
    let mut files: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 2);
    for f in &files {
        let stem = f.file_stem().unwrap().to_str().unwrap();
        assert!(stem.len() == 16 && stem.chars().all(|c| c.is_ascii_hexdigit()));
    }
    let o = posr(&["iso", arg(&files[0]), arg(&files[1])]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "non-isomorphic\n");
    let o = posr(&["iso", arg(&files[0]), arg(&files[0])]);
    assert_eq!(code(&o), 0);
}

#[test]
fn emitted_names_do_not_depend_on_the_run() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        assert_eq!(
            code(&posr(&[
                "enumerate",
                "--order",
                "4",
                "--emit-dir",
                arg(d.path())
            ])),
            0
        );
    }
    let names = |d: &Path| {
        let mut v: Vec<String> = std::fs::read_dir(d)
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        v.sort();
        v
    };
    assert_eq!(names(a.path()), names(b.path()));
    assert_eq!(names(a.path()).len(), 7);
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        "example-2.6:k=2",
        "example-3.2:k=3",
        "example-4.6:k=1,u2=u",
        "example-4.7:k=4,n=2",
        "chain:k=3",
        "bool:n=3",
        "adjoin-z1(chain:k=2)",
        "product(trivial,example-3.2:k=1)",
    ] {
        let file = dir.path().join("x.psr");
        let o = posr(&["construct", spec, "-o", arg(&file)]);
        assert_eq!(code(&o), 0, "{spec}: {}", stderr(&o));
        let o = posr(&["verify", arg(&file)]);
        assert_eq!(code(&o), 0, "{spec}");
        assert_eq!(stdout(&o), "valid\n");
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let invalid = dir.path().join("invalid.psr");
    std::fs::write(
        &invalid,
        "psr 1\norder 2\nnames 0 1\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n",
    )
    .unwrap();
    let o = posr(&["verify", arg(&invalid)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("invalid\n"));

    let malformed = dir.path().join("malformed.psr");
    std::fs::write(
        &malformed,
        "psr 1\norder 2\nnames 0 1\nadd\n0 1\n1 x\nmul\n0 0\n0 1\n",
    )
    .unwrap();
    let o = posr(&["verify", arg(&malformed)]);
    assert_eq!(code(&o), 2);
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(
        err.contains("malformed.psr") && err.contains("line 6"),
        "{err}"
    );

    assert_eq!(code(&posr(&["verify"])), 2);
    assert_eq!(code(&posr(&["verify", arg(&invalid), "--bogus"])), 2);
}

#[test]
fn json_output_has_sorted_keys() {
    let o = posr(&["--json", "analyze", "example-3.2:k=1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["analysis", "conditions", "names"]);
    let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("analysis") < pos("conditions") && pos("conditions") < pos("names"));
    assert_eq!(v["analysis"]["zero_divisors"], serde_json::json!([1]));

    for args in [
        vec!["verify", "--json"],
        vec!["graph", "bool:n=2", "--json"],
        vec!["iso", "trivial", "trivial", "--json"],
        vec!["enumerate", "--order", "3", "--json"],
        vec!["ring", "radicals", "zn:12", "--json"],
        vec!["product", "trivial", "trivial", "--json"],
        vec!["construct", "chain:k=1", "--json"],
        vec!["theorems", "--corpus", "census:2", "--json"],
    ] {
        let o = posr(&args);
        if args[0] == "verify" {
            assert_eq!(code(&o), 2);
            continue;
        }
        assert_eq!(code(&o), 0, "{args:?}");
        serde_json::from_str::<Value>(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn graph_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let o = posr(&["graph", "example-2.6:k=2", "--dot", arg(&dot)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("star r=2"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph zd {\n"));
    assert!(text.contains("\"a\" -- \"b1\";"));
}

#[test]
fn theorem_runs_report_and_exit() {
    let o = posr(&["theorems", "--corpus", "census:4+grid", "--check", "all"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().contains("fail=0"));

    let o = posr(&[
        "theorems",
        "--corpus",
        "ring:zn:12",
        "--check",
        "C4.4",
        "--report",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entry = &v["entries"][0];
    assert_eq!(entry["check"], "C4.4");
    assert_eq!(entry["instance"], "zn:12");
    assert_eq!(entry["result"], "pass");

    let o = posr(&["theorems", "--corpus", "census:3", "--check", "X1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("X1"));

    let o = posr(&["theorems", "--list"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l.starts_with("T3.1 ")));
}

#[test]
fn ring_files_and_sub_operations() {
    let dir = tempfile::tempdir().unwrap();
    let o = posr(&["ring", "semiring", "prod(zn:2,zn:2)"]);
    assert_eq!(code(&o), 0);
    let file = dir.path().join("i.psr");
    std::fs::write(&file, stdout(&o)).unwrap();
    assert_eq!(code(&posr(&["verify", arg(&file)])), 0);

    let o = posr(&["ring", "ideals", "zn:12"]);
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = posr(&["ring", "zdgraph", "zn:9", "--shape"]);
    assert_eq!(stdout(&o), "complete n=2\n");
    let o = posr(&["ring", "ag", "zn:0"]);
    assert_eq!(code(&o), 2);
}

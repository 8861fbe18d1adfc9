use std::fs;
use std::path::Path;

use qdet::exec::Exec;
use qdet::manifest::{run_manifest, run_manifest_str};

const GOLDEN: &str = "\
F_0 = (0;0;0)\\oplus(1^3;1^3;2,1)\\oplus(2,1;1^3;1^3)
F_1 = (2,1^2;2,1^2;2,1^2)
F_2 = (2^3;4,1^2;2^3)
";

fn write_case(dir: &Path, golden: &str) -> std::path::PathBuf {
    fs::write(dir.join("k3.txt"), golden).unwrap();
    let manifest = r#"{ "jobs": [
        { "name": "k3-33-22", "kind": "complex", "m": 3, "alpha": [3, 3], "gamma": [2, 2], "golden": "k3.txt" },
        { "name": "degree", "kind": "degree", "m": 2, "alpha": [2, 3], "gamma": [1, 1], "expected": "6" }
    ] }"#;
    let path = dir.join("m.json");
    fs::write(&path, manifest).unwrap();
    path
}

#[test]
fn empty_manifest_is_an_empty_pass() {
    let r = run_manifest_str(r#"{ "jobs": [] }"#, Path::new("."), Exec::default()).unwrap();
    assert!(r.results.is_empty());
    assert!(r.passed());
    let r = run_manifest_str("{}", Path::new("."), Exec::default()).unwrap();
    assert!(r.passed());
}

#[test]
fn matching_golden_passes() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_manifest(&write_case(dir.path(), GOLDEN), Exec::default()).unwrap();
    assert!(r.passed(), "{}", r.render());
}

#[test]
fn corrupted_golden_fails_with_a_diff() {
    let dir = tempfile::tempdir().unwrap();
    let bad = GOLDEN.replace("(2^3;4,1^2;2^3)", "(2^3;4,1;2^3)");
    let r = run_manifest(&write_case(dir.path(), &bad), Exec::default()).unwrap();
    assert!(!r.passed());
    let fail: Vec<_> = r.failures().collect();
    assert_eq!(fail.len(), 1);
    assert_eq!(fail[0].name, "k3-33-22");
    assert_eq!(
        fail[0].diff,
        vec!["- F_2 = (2^3;4,1;2^3)", "+ F_2 = (2^3;4,1^2;2^3)"]
    );
    assert!(r.render().contains("FAIL k3-33-22"));
}

#[test]
fn missing_term_and_missing_golden_fail() {
    let dir = tempfile::tempdir().unwrap();
    let short: String = GOLDEN.lines().take(2).collect::<Vec<_>>().join("\n");
    let r = run_manifest(&write_case(dir.path(), &short), Exec::default()).unwrap();
    assert!(!r.passed());
    let r = run_manifest_str(
        r#"{ "jobs": [ { "name": "x", "kind": "complex", "m": 1, "alpha": [1, 1], "gamma": [1, 0], "golden": "nope.txt" } ] }"#,
        dir.path(),
        Exec::default(),
    )
    .unwrap();
    assert!(r.results[0].diff[0].starts_with("error:"));
}

#[test]
fn normalization_must_match_once() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("k3.txt"),
        GOLDEN.replace("(2^3;4,1^2;2^3)", "(2^3;4,1^2,2^3)"),
    )
    .unwrap();
    let job = |from: &str| {
        format!(
            r#"{{ "jobs": [ {{ "name": "n", "kind": "complex", "m": 3, "alpha": [3, 3], "gamma": [2, 2],
                "golden": "k3.txt", "normalize": [["{from}", "(2^3;4,1^2;2^3)"]] }} ] }}"#
        )
    };
    let ok = run_manifest_str(&job("(2^3;4,1^2,2^3)"), dir.path(), Exec::default()).unwrap();
    assert!(ok.passed(), "{}", ok.render());
    let bad = run_manifest_str(&job("(9;9;9)"), dir.path(), Exec::default()).unwrap();
    assert!(!bad.passed());
}

#[test]
fn reports_are_identical_across_execution_modes() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../manifests/reference.json");
    let text = fs::read_to_string(&path).unwrap();
    // The fast half of the manifest: everything except the long complexes.
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let jobs: Vec<_> = v["jobs"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|j| j["kind"] != "complex" && j["kind"] != "tcomplex")
        .cloned()
        .collect();
    let small = serde_json::json!({ "jobs": jobs }).to_string();
    let base = path.parent().unwrap();
    let a = run_manifest_str(&small, base, Exec::Parallel).unwrap();
    let b = run_manifest_str(&small, base, Exec::Sequential).unwrap();
    assert_eq!(a.render(), b.render());
    assert_eq!(a, b);
}

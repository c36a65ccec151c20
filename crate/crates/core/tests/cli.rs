//! End-to-end checks of the binary surface: exit codes, stable output,
//! file round-trips.

use std::fs;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curvecolor"))
}

#[test]
fn build_petersen_dimacs() {
    let out = bin().args(["build", "kg", "5", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p edge 10 15"), "{text}");
    assert!(text.contains("c label 1 {1,2}"), "{text}");
    // Determinism: identical invocation, identical bytes.
    let again = bin().args(["build", "kg", "5", "2"]).output().unwrap();
    assert_eq!(text, String::from_utf8(again.stdout).unwrap());
}

#[test]
fn build_usage_error_exits_2() {
    let out = bin().args(["build", "kg", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["build", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chromatic_roundtrip_through_file() {
    let dir = std::env::temp_dir().join("curvecolor-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let col = dir.join("octahedron-n.col");
    let out = bin()
        .args(["build", "octahedron-n", "--out", col.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = bin().args(["chromatic", col.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("chromatic number: 4"), "{text}");
}

#[test]
fn chromatic_budget_exhaustion_exits_3() {
    let dir = std::env::temp_dir().join("curvecolor-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let col = dir.join("kg62.col");
    bin().args(["build", "kg", "6", "2", "--out", col.to_str().unwrap()]).output().unwrap();
    let out = bin().args(["chromatic", col.to_str().unwrap(), "--budget", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn fractional_verify_accepts_and_rejects() {
    let dir = std::env::temp_dir().join("curvecolor-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let col = dir.join("k2.col");
    fs::write(&col, "c label 1 a\nc label 2 b\np edge 2 1\ne 1 2\n").unwrap();
    let cert = dir.join("k2-coloring.json");
    fs::write(
        &cert,
        r#"{"sets":[{"vertices":["a"],"weight":"1"},{"vertices":["b"],"weight":"1"}]}"#,
    )
    .unwrap();
    let out = bin()
        .args([
            "fractional-verify",
            col.to_str().unwrap(),
            cert.to_str().unwrap(),
            "--kind",
            "coloring",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("value 2"));

    let bad = dir.join("k2-bad.json");
    fs::write(&bad, r#"{"sets":[{"vertices":["a","b"],"weight":"2"}]}"#).unwrap();
    let out = bin()
        .args([
            "fractional-verify",
            col.to_str().unwrap(),
            bad.to_str().unwrap(),
            "--kind",
            "coloring",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn domain_subcommand_explicit_regions() {
    let dir = std::env::temp_dir().join("curvecolor-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let diag = dir.join("cobound.json");
    fs::write(
        &diag,
        r#"{"genus":3,"regions":[
            {"e":-2,"corners":0,"edges":[{"edge":"c","coeff":-1},{"edge":"d","coeff":1}]},
            {"e":-2,"corners":0,"edges":[{"edge":"c","coeff":1},{"edge":"d","coeff":-1}]}],
           "boundary_c":[{"edge":"c","coeff":1}],
           "boundary_d":[{"edge":"d","coeff":1}]}"#,
    )
    .unwrap();
    let out = bin().args(["domain", diag.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["f"], 1);
    assert_eq!(v["f_prime"], 2);
}

#[test]
fn sp_and_bounds_outputs() {
    let out = bin().args(["sp", "--g", "2"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("p edge 15"));

    let out = bin().args(["bounds", "--genus", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("separating-count upper: 15"), "{text}");
    assert!(text.contains("g*4^g: 32"), "{text}");
}

#[test]
fn farey_with_coloring_json() {
    let out = bin().args(["farey", "--bound", "3", "--extended", "--color", "3"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p edge"), "{text}");
    assert!(text.contains("\"palette_size\":4"), "{text}");
}

#[test]
fn color_subcommand_total() {
    let out = bin().args(["color", "total", "6"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["palette_size"], 12);
    // {1,2,3}: k=1, a=3 -> id 1*6 + 3 - 1 = 8.
    assert_eq!(v["colors"]["{1,2,3}"], 8);
}

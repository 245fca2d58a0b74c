use std::path::PathBuf;

use galois_heights::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["galois-heights"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = exec(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(exec(&["height", &data("pair_split_indicator.json")]).0, 0);
    assert_eq!(exec(&["height", &data("malformed.json")]).0, 2);
    assert_eq!(exec(&["height", &data("does_not_exist.json")]).0, 2);
    assert_eq!(exec(&["height", &data("pair_not_normal.json")]).0, 3);
    assert_eq!(
        exec(&["discrepancy", &data("order_sqrt_m3_equation.json"), &data("ideal_not_stable.json")]).0,
        3
    );
    assert_eq!(exec(&["molien", &data("c12.json")]).0, 4);
    assert_eq!(exec(&["enumerate", &data("s3.json"), "--bound", "10^400"]).0, 2);
    assert_ne!(exec(&["--precision-bits", "0", "molien", &data("c2.json")]).0, 0);
}

#[test]
fn cubic_height_report() {
    let v = json(&["height", &data("pair_zeta7_selfdual.json")]);
    assert_eq!(v["finite_parts_agree"], Value::Bool(true));
    let mid: f64 = v["height"]["mid"].as_str().unwrap().parse().unwrap();
    assert!((mid - 7.0).abs() < 1e-9);
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().display().to_string();
    let plain = exec(&["height", &data("pair_zeta7_selfdual.json")]).1;
    let first = exec(&["--cache-dir", &cache, "height", &data("pair_zeta7_selfdual.json")]).1;
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = exec(&["--cache-dir", &cache, "height", &data("pair_zeta7_selfdual.json")]).1;
    assert_eq!(plain, first);
    assert_eq!(first, second);
}

#[test]
fn discrepancy_of_conductor() {
    let v = json(&["discrepancy", &data("order_sqrt_m3_equation.json"), &data("ideal_conductor.json")]);
    assert_eq!(v["discrepancy"], "2");
    assert_eq!(v["within_bounds"], Value::Bool(true));
    assert_eq!(v["invertible"], Value::Bool(false));
}

#[test]
fn search_within_lattice() {
    let v = json(&[
        "selfdual-search",
        &data("field_zeta7.json"),
        "--max-numerator",
        "3",
        "--max-denominator",
        "7",
        "--within",
        &data("inverse_root_different.json"),
    ]);
    let found = v.as_array().expect("list of elements");
    assert!(!found.is_empty());
}

#[test]
fn molien_csv() {
    let (code, out, _) = exec(&["molien", &data("s3.json")]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("group,order,dim_bruteforce,dim_formula,agree"));
    assert_eq!(lines.next(), Some("S3,6,83,83,true"));
}

#[test]
fn enumeration_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("points.csv");
    let cps = dir.path().join("checkpoints.csv");
    let (code, stdout, err) = exec(&[
        "enumerate",
        &data("c2.json"),
        "--bound",
        "10",
        "--out",
        out.to_str().unwrap(),
        "--checkpoints",
        cps.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(stdout.is_empty());
    let points = std::fs::read_to_string(&out).unwrap();
    assert_eq!(points.lines().count(), 11);
    let last = std::fs::read_to_string(&cps).unwrap();
    assert!(last.lines().last().unwrap().ends_with(",10"));
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use isocartan::io;
use serde_json::Value;
use tempfile::TempDir;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isocartan")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn fixture(dir: &Path, name: &str, params: &[&str]) -> PathBuf {
    let out = dir.join(format!("{name}.json"));
    let mut args = vec!["fixtures", "build", name, "--out", out.to_str().unwrap()];
    for p in params {
        args.extend(["--param", p]);
    }
    let o = bin(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    out
}

#[test]
fn verify_ch2_sphere_passes() {
    let dir = TempDir::new().unwrap();
    let model = fixture(dir.path(), "ch2-sphere", &[]);
    let o = bin(&["verify", model.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        assert!(r["abs_total"].as_f64().unwrap() < 1e-9);
        assert_eq!(r["passed"], Value::Bool(true));
    }
}

#[test]
fn verify_reports_failure_with_exit_one() {
    let dir = TempDir::new().unwrap();
    let m = write(
        dir.path(),
        "bad.json",
        r#"{"name":"not isoparametric","ambient":{"kind":"noncompact"},
            "blocks":[{"lambda":1.5,"mu":-1,"mult":1},{"lambda":0.3,"mu":-4,"mult":2}]}"#,
    );
    let o = bin(&["verify", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn wrong_mu_sign_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let m = write(dir.path(), "broken.json", r#"{"name":"b","ambient":{"kind":"noncompact"},"blocks":[{"lambda":1,"mu":4,"mult":2}]}"#);
    let o = bin(&["validate", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("mu sign"), "{}", stderr(&o));
}

#[test]
fn parse_errors_name_file_and_field() {
    let dir = TempDir::new().unwrap();
    let m = write(dir.path(), "typo.json", r#"{"name":"b","ambient":{"kind":"noncompact"},"blocks":[{"lambda":1,"mu":-1,"mlt":2}]}"#);
    let o = bin(&["focal", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("typo.json") && e.contains("mlt"), "{e}");

    let m = write(dir.path(), "sf.json", r#"{"name":"b","ambient":{"kind":"spaceform"},"blocks":[]}"#);
    let e = stderr(&bin(&["validate", m.to_str().unwrap()]));
    assert!(e.contains("ambient.c"), "{e}");

    let o = bin(&["verify", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_flags_are_input_errors() {
    let dir = TempDir::new().unwrap();
    let model = fixture(dir.path(), "ch-sphere", &[]);
    let p = model.to_str().unwrap();
    assert_eq!(bin(&["verify", p, "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", p, "--re-window", "3", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", p, "--format", "csv"]).status.code(), Some(2));
    assert_eq!(bin(&["fixtures", "build", "nope"]).status.code(), Some(2));
    assert_eq!(bin(&["fixtures", "build", "sphere", "--param", "q=1"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn tables_match_the_stored_census() {
    let o = bin(&["tables", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let md = stdout(&o);
    assert!(md.contains("| G | G2^2/SO(4) | 6 | 6 | 7 | 7 |"), "{md}");
    assert!(md.contains("| FII | F4^-20/Spin(9) | 2 | 0 | 4 | 15 |"));
    assert!(md.contains("| II-G2 | G2^C/G2 | 6 | 0 | 13 | 13 |"));
    assert!(md.contains("| EVIII | E8^8/SO'(16) | 120 | 120 | 122 | 127 |"));
    assert!(md.trim_end().ends_with("none"));

    let csv = stdout(&bin(&["tables", "--format", "csv"]));
    assert_eq!(csv, include_str!("../data/reference_census.csv"));

    let json: Value = serde_json::from_str(&stdout(&bin(&["tables", "--format", "json"]))).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 128);
    assert_eq!(json["diffs"].as_array().unwrap().len(), 0);
}

#[test]
fn json_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let model = fixture(dir.path(), "root-tube-g2", &["s0=1.5"]);
    for cmd in ["verify", "focal", "check-c", "check-d"] {
        let a = bin(&[cmd, model.to_str().unwrap(), "--format", "json"]);
        let b = bin(&[cmd, model.to_str().unwrap(), "--format", "json"]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        assert_eq!(a.status.code(), Some(0), "{cmd}: {}", stderr(&a));
    }
}

#[test]
fn model_files_round_trip() {
    let dir = TempDir::new().unwrap();
    for e in isocartan::isocartan_core::fixtures::CATALOG {
        let path = fixture(dir.path(), e.name, &[]);
        let text = std::fs::read_to_string(&path).unwrap();
        let m = io::read_model(&path).unwrap();
        assert_eq!(io::model_to_json(&m), text, "{}", e.name);
        assert_eq!(io::model_from_json(&io::model_to_json(&m)).unwrap(), m);
    }
}

#[test]
fn focal_radii_list_matches_closed_form() {
    let dir = TempDir::new().unwrap();
    let model = fixture(dir.path(), "ch2-sphere", &[]);
    let o = bin(&["focal", model.to_str().unwrap(), "--format", "json", "--re-window", "0", "3", "--im-window", "0", "3.5"]);
    let v: Vec<io::RadiusOut> = serde_json::from_str(&stdout(&o)).unwrap();
    let got: Vec<(f64, f64, u32)> = v.iter().map(|r| (r.re, r.im, r.mult)).collect();
    let want = [(1.0, 0.0, 3), (1.0, std::f64::consts::FRAC_PI_2, 1), (1.0, std::f64::consts::PI, 3)];
    assert_eq!(got.len(), want.len(), "{got:?}");
    for (g, w) in got.iter().zip(want) {
        assert!((g.0 - w.0).abs() < 1e-12 && (g.1 - w.1).abs() < 1e-12 && g.2 == w.2, "{got:?}");
    }
    let csv = stdout(&bin(&["focal", model.to_str().unwrap(), "--format", "csv"]));
    assert!(csv.starts_with("re,im,mult,blocks\n"));
}

#[test]
fn compact_models_use_real_radii() {
    let dir = TempDir::new().unwrap();
    let model = fixture(dir.path(), "cp2-sphere", &[]);
    let o = bin(&["verify", model.to_str().unwrap(), "--re-window", "0", "6.283185307179586"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("r0 = 0.523598775598"), "{}", stdout(&o));
}

#[test]
fn check_c_uses_the_projection() {
    let dir = TempDir::new().unwrap();
    let model = fixture(dir.path(), "root-tube-a2", &[]);
    let o = bin(&["check-c", model.to_str().unwrap(), "--space", "SL(3,R)/SO(3)", "--direction", "1,0,-1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("3 distinct curvatures <= bound 4: pass"), "{}", stdout(&o));
    let o = bin(&["check-c", model.to_str().unwrap(), "--space", "SL(3,R)/SO(3)", "--direction", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_d_fails_with_two_real_radii() {
    let dir = TempDir::new().unwrap();
    let m = write(
        dir.path(),
        "two.json",
        r#"{"name":"two radii","ambient":{"kind":"noncompact"},
            "blocks":[{"lambda":0.5,"mu":0,"mult":1},{"lambda":0.25,"mu":0,"mult":1}]}"#,
    );
    let o = bin(&["check-d", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lifted_trace_command() {
    let o = bin(&["lifted-trace", "--r1", "1.5707963267948966", "--r2", "-1.5707963267948966", "--m1", "3", "--m2", "3", "--k", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lifted trace (symmetric, K = 10): 0\n");
    let o = bin(&["lifted-trace", "--r1", "1", "--r2", "1", "--m1", "1", "--m2", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fixtures_list_names_every_entry() {
    let o = stdout(&bin(&["fixtures", "list"]));
    for e in isocartan::isocartan_core::fixtures::CATALOG {
        assert!(o.contains(e.name));
    }
    let o = bin(&["fixtures", "build", "oh-sphere"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("no independent oracle"));
}

use std::process::{Command, Output};

use cga_core::{ConformalModel, Multivector};
use serde_json::Value;

fn cga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cga"))
        .args(args)
        .env_remove("CGA_EPSILON")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = cga(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(v["schema"], 1);
    v
}

fn f(v: &Value) -> f64 {
    v.as_f64().expect("number")
}

#[test]
fn dist_matches_documented_output() {
    let out = cga(&["dist", "--model", "E2", "--a", "0,0", "--b", "3,4"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"schema":1,"d2":25.0}"#);
    let v = json(&["dist", "--a", "0,0", "--b", "1,0", "--convention", "paper"]);
    assert_eq!(f(&v["d2"]), -0.5);
}

#[test]
fn minkowski_distance_sign() {
    let v = json(&["dist", "--model", "M11", "--a", "0,0", "--b", "2,1"]);
    assert!((f(&v["d2"]) - -3.0).abs() < 1e-12);
}

#[test]
fn little_group_of_infinity_is_e2() {
    let v = json(&["little-group", "--model", "E2", "--fix", "inf"]);
    assert_eq!(v["label"], "e(2)");
    assert_eq!(v["dim"], 3);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn little_group_of_e_plus_is_so21() {
    let v = json(&["little-group", "--fix", "e+"]);
    assert_eq!(v["label"], "so(2,1)");
    assert_eq!(v["killing_signature"], serde_json::json!([2, 1, 0]));
}

#[test]
fn compare_shells() {
    let v = json(&["compare", "--model", "M11", "--a", "O + 0.5*inf", "--b", "O - 0.5*inf"]);
    assert_eq!(v["verdict"], "isomorphic");
    let v = json(&["compare", "--model", "M21", "--a", "O + 0.5*inf", "--b", "O - 0.5*inf"]);
    assert_eq!(v["verdict"], "distinct");
}

#[test]
fn rep_check_residuals() {
    let v = json(&["rep", "--series", "principal", "--s", "1", "--eps", "0", "--M", "10", "--check"]);
    assert_eq!(f(&v["q"]), -1.25);
    assert!(f(&v["interior_commutator_residual"]) < 1e-10);
    assert!(f(&v["interior_casimir_residual"]) < 1e-10);
    for q in v["spectrum_sample"].as_array().unwrap() {
        assert!((f(q) + 1.25).abs() < 1e-10);
    }
    let v = json(&["rep", "--series", "discrete-plus", "--k", "1", "--M", "4"]);
    assert_eq!(f(&v["q"]), 2.0);
    assert_eq!(v["two_sided"], false);
    assert_eq!(f(&v["weights"][0]), 2.0);
}

#[test]
fn decompose_a0() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let b = format!("{h}*e0^O - {h}*e0^inf");
    let v = json(&["decompose", "--model", "M11", "--bivector", &b]);
    assert!((f(&v["translation_coeffs"][0]) + h).abs() < 1e-12);
    assert!((f(&v["tangent_coeffs"][0]) - h).abs() < 1e-12);
    assert_eq!(v["remainder"], "0");
}

#[test]
fn circle_and_incidence() {
    let v = json(&["circle", "--a", "1,0", "--b", "0,1", "--c", "-1,0"]);
    assert_eq!(v["kind"], "circle");
    assert_eq!(v["grade"], 3);
    assert_eq!(v["representation"], "direct");
    let v = json(&["circle", "--a", "0,0", "--b", "1,0", "--c", "2,0"]);
    assert_eq!(v["kind"], "line/flat");
    let v = json(&["incidence", "--point", "0,-1", "--a", "1,0", "--b", "0,1", "--c", "-1,0"]);
    assert_eq!(v["incident"], true);
    let v = json(&["incidence", "--point", "0,0", "--a", "1,0", "--b", "0,1", "--c", "-1,0"]);
    assert_eq!(v["incident"], false);
    assert!(f(&v["direct"]) > 0.1);
}

#[test]
fn dual_round_of_radius_sqrt2_is_e_plus() {
    let v = json(&["dual", "--center", "0,0", "--r2", "2"]);
    assert_eq!(v["grade"], 1);
    let m = ConformalModel::from_alias("E2").unwrap();
    let b = m.parse(v["blade"].as_str().unwrap()).unwrap();
    assert!(b.approx_eq(&m.e_plus().scale(2f64.sqrt()), 1e-12));
    let v = json(&["dual", "--model", "M11", "--center", "0,0", "--r2", "-1"]);
    assert_eq!(v["kind"], "shell-timelike");
}

#[test]
fn emitted_multivectors_reparse() {
    let m = ConformalModel::from_alias("E2").unwrap();
    let v = json(&["embed", "--point", "-1.5,2.25"]);
    let p = m.parse(v["vector"].as_str().unwrap()).unwrap();
    let expected = m.embed_point(&"-1.5,2.25".parse().unwrap()).unwrap();
    assert!(p.approx_eq(&expected, 1e-12));
    let v = json(&["little-group", "--fix", "inf"]);
    for b in v["basis"].as_array().unwrap() {
        let text = b.as_str().unwrap();
        let mv = Multivector::parse(m.signature(), text).unwrap();
        assert_eq!(mv.to_string(), text);
    }
}

#[test]
fn project_round_trip_and_infinity() {
    let v = json(&["project", "--vector", "2*O + 6*e1 - 8*e2 + 50*inf"]);
    assert!((f(&v["point"][0]) - 3.0).abs() < 1e-12);
    assert!((f(&v["point"][1]) + 4.0).abs() < 1e-12);
    let out = cga(&["project", "--vector", "inf"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("point at infinity"));
    assert!(out.stdout.is_empty());
}

#[test]
fn domain_errors_exit_one() {
    let out = cga(&["circle", "--a", "1,1", "--b", "1,1", "--c", "2,3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cga(&["little-group", "--fix", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["dist", "--a", "0,0"][..],
        &["dist", "--a", "0,0", "--b", "1,1", "--bogus"],
        &["frobnicate"],
        &["--model", "X9", "dist", "--a", "0,0", "--b", "1,1"],
        &["embed", "--point", "1,zz"],
        &["rep", "--series", "principal"],
        &["rep", "--series", "principal", "--s", "1", "--eps", "0.3"],
        &["embed", "--model", "R(3,1)", "--point", "1,2"],
        &["little-group", "--fix", "e7"],
        &["embed", "--point", "1,2,3"],
    ] {
        let out = cga(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn rank_threshold_from_env_and_flag() {
    // With an absurd cutoff every direction counts as null.
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_cga"));
        c.args(["little-group", "--fix", "e1 + 0.001*e2"]);
        if let Some(f) = flag {
            c.args(["--rank-threshold", f]);
        }
        match env {
            Some(e) => c.env("CGA_EPSILON", e),
            None => c.env_remove("CGA_EPSILON"),
        };
        let out = c.output().unwrap();
        (out.status.code(), serde_json::from_slice::<Value>(&out.stdout).ok())
    };
    let (code, v) = run(None, None);
    assert_eq!((code, v.unwrap()["dim"].as_u64()), (Some(0), Some(3)));
    let (_, v) = run(Some("1"), None);
    assert_eq!(v.unwrap()["dim"], 6);
    let (_, v) = run(Some("1"), Some("1e-9"));
    assert_eq!(v.unwrap()["dim"], 3);
    let (code, _) = run(Some("abc"), None);
    assert_eq!(code, Some(2));
}

#[test]
fn bare_algebra_models() {
    let v = json(&["little-group", "--model", "R(4,2)", "--fix", "e1"]);
    assert_eq!(v["dim"], 10);
    assert_eq!(v["label"], "so(3,2)");
    let v = json(&["classify", "--model", "R(3,0)", "--basis", "e2^e3", "--basis", "e3^e1", "--basis", "e1^e2"]);
    assert_eq!(v["label"], "so(3)");
}

#[test]
fn text_output() {
    let out = cga(&["dist", "--a", "0,0", "--b", "3,4", "--output", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "schema: 1\nd2: 25.0\n");
}

#[test]
fn selftest_is_deterministic_and_has_negative_control() {
    let args = ["selftest", "--cases", "10", "--seed", "7"];
    let a = cga(&args);
    let b = cga(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);

    let bad = cga(&["selftest", "--cases", "10", "--corrupt-metric"]);
    assert_eq!(bad.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&bad.stdout).unwrap();
    let failed: Vec<_> = v["properties"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["passed"] == false)
        .map(|p| p["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, ["metric-soundness"]);
}

#[test]
fn identical_argv_gives_identical_bytes() {
    let args = ["little-group", "--model", "M21", "--fix", "O - 0.5*inf"];
    assert_eq!(cga(&args).stdout, cga(&args).stdout);
}

use std::process::{Command, Output};

use whitehead::polyring::LaurentPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitehead")).args(args).output().unwrap()
}

#[test]
fn apoly_json_has_fixture() {
    let out = run(&["apoly", "--k", "1", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["k", "A1", "A2", "nonhyp_factor", "canonical_factor", "newton_polygon"]);
    let c: LaurentPoly = serde_json::from_value(v["canonical_factor"].clone()).unwrap();
    assert_eq!(c.to_string(), "M^4*L^2 - M^4*L + 4*M^2*L - L + 1");
    assert_eq!(v["newton_polygon"]["slopes"], serde_json::json!(["1/4", "inf"]));
}

#[test]
fn riley_k0_warns() {
    let out = run(&["riley", "--k", "0"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not hyperbolic"));
}

#[test]
fn verify_k3_passes() {
    let out = run(&["verify", "--k", "3", "--trials", "20"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["apoly", "--k", "1", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["volume", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["cover", "--k", "1", "--r", "2"]).status.code(), Some(1));
}

#[test]
fn outputs_are_reproducible() {
    for args in [
        &["verify", "--k", "2", "--trials", "5", "--seed", "9", "--json"][..],
        &["volume", "--k", "2", "--alpha", "1.0", "--csv"][..],
        &["riley", "--two-bridge", "10,3", "--json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn volume_csv_and_numbers() {
    let out = run(&["volume", "--k", "1", "--alpha", "0.0001", "--csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("omega,re_z,im_z,integrand\n"));
    let out = run(&["volume", "--k", "1", "--alpha", "0.0001"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("= 3.6638623"), "{text}");
    let out = run(&["alpha-bound", "--k", "1"]);
    let b: f64 = String::from_utf8(out.stdout).unwrap().trim().parse().unwrap();
    assert!(b > 2.0 && b < 3.2);
}

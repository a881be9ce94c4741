use std::process::{Command, Output};

use fermionic::{poly_from_json, poly_to_json};
use fermionic_core::characters::{ch_bigc, chi};
use fermionic_core::Composition;
use proptest::prelude::*;

fn fermionic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fermionic"))
        .args(args)
        .env_remove("FERMIONIC_PRIME")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fermionic(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn chbig_smallest_case() {
    let got = stdout(&["chbig", "--k", "1", "--l", "1", "--N", "1"]);
    assert_eq!(
        got.trim(),
        r#"{"vars":["q","z"],"halfstep":[false,true],"terms":[{"e":[0,-1],"c":"1"},{"e":[0,1],"c":"1"}]}"#
    );
    assert_eq!(stdout(&["chbig", "--k", "1", "--l", "1", "--N", "1", "--format", "pretty"]).trim(), "z^(-1/2) + z^(1/2)");
}

#[test]
fn kostka_and_verlinde_examples() {
    assert_eq!(stdout(&["kostka", "--k", "1", "--l", "0", "--m", "2", "--format", "pretty"]).trim(), "q");
    assert_eq!(stdout(&["verlinde-dim", "--k", "1", "--l", "0", "--N", "1", "--format", "pretty"]).trim(), "1");
    assert_eq!(stdout(&["verlinde-dim", "--k", "1", "--l", "0", "--N", "1"]).trim(), r#"{"dim":"1"}"#);
}

#[test]
fn csv_rows_are_exponents_then_coefficient() {
    let got = stdout(&["chbig", "--k", "1", "--l", "1", "--N", "1", "--format", "csv"]);
    assert_eq!(got, "q,z,coeff\n0,-1/2,1\n0,1/2,1\n");
}

#[test]
fn json_output_round_trips() {
    let m = Composition::new(vec![1, 1]).unwrap();
    let text = stdout(&["chi", "--m", "1,1"]);
    assert_eq!(poly_from_json(text.trim()).unwrap(), chi(&m));
    let text = stdout(&["chbig", "--k", "2", "--l", "0", "--N", "2"]);
    assert_eq!(poly_from_json(text.trim()).unwrap(), ch_bigc(2, 0, 2).unwrap());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["chmix", "--k", "2", "--l", "0", "--M", "1,1", "--Mbar", "0,1"][..],
        &["oracle", "chbig", "--k", "2", "--l", "1", "--N", "1", "--seed", "3"],
        &["verify", "identities"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{:?}", args);
    }
}

#[test]
fn oracle_reports_a_match() {
    let got = stdout(&["oracle", "kostka", "--k", "2", "--l", "0", "--m", "0,2", "--seed", "7"]);
    let v: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(v["verdict"], "match");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["poly"], v["formula"]);
}

#[test]
fn oracle_prime_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_fermionic"))
        .args(["oracle", "chi", "--m", "2"])
        .env("FERMIONIC_PRIME", "2147483629")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["prime"], 2147483629u64);
}

#[test]
fn rational_oracle_mode() {
    let got = stdout(&["oracle", "chbig", "--k", "1", "--l", "0", "--N", "2", "--rational"]);
    let v: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(v["field"], "rational");
    assert_eq!(v["verdict"], "match");
}

#[test]
fn wrong_cartan_reading_fails_verification() {
    let out = fermionic(&["oracle", "chmix", "--k", "1", "--l", "1", "--M", "1", "--Mbar", "0", "--cartan", "htilde"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_identities_passes() {
    let out = fermionic(&["verify", "identities", "--format", "pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for id in 1..=4 {
        assert!(text.contains(&format!("PASS [{}]", id)), "{}", text);
    }
    assert_eq!(fermionic(&["verify", "--suite", "identities"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "everything"][..],
        &["verify"],
        &["chbig", "--k", "1"],
        &["chbig", "--k", "1", "--l", "2", "--N", "1"],
        &["kostka", "--l", "0", "--m", ""],
        &["verlinde-dim", "--k", "1", "--l", "0"],
        &["nonsense"],
    ] {
        assert_eq!(fermionic(args).status.code(), Some(2), "{:?}", args);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn chi_json_round_trips(m in prop::collection::vec(0u32..3, 1..4)) {
        let p = chi(&Composition::new(m).unwrap());
        prop_assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn cli_matches_library(k in 1u32..3, l in 0u32..3, n in 0u32..3) {
        prop_assume!(l <= k);
        let args = ["chbig", "--k", &k.to_string(), "--l", &l.to_string(), "--N", &n.to_string()].map(String::from);
        let out = Command::new(env!("CARGO_BIN_EXE_fermionic")).args(&args).output().unwrap();
        prop_assert!(out.status.success());
        let got = poly_from_json(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
        prop_assert_eq!(got, ch_bigc(k, l, n).unwrap());
    }
}

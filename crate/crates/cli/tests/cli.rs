//! End-to-end CLI tests: verbs, exit codes, and byte-determinism of reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn doa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("doa-cli-test-{}-{name}", std::process::id()));
    p
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

#[test]
fn verify_unconditional_family_exits_zero() {
    let out = doa(&["verify", "--family", "refl-tri", "--n", "4"]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["schema_version"], "1.0");
    assert_eq!(json["pass"], true);
    assert_eq!(json["properties"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_conditional_family_exits_one_with_system() {
    let out = doa(&["verify", "--family", "lie", "--n", "4"]);
    assert_eq!(exit_code(&out), 1);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["pass"], false);
    assert!(json["system"]["generators"].as_array().unwrap().len() >= 20);
}

#[test]
fn verify_std_lie_emits_the_nonexistence_certificate() {
    let out = doa(&["verify", "--family", "std-lie", "--n", "4"]);
    assert_eq!(exit_code(&out), 1);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["certified"], true);
    assert!(json["checks"].as_array().unwrap().len() >= 15);
}

#[test]
fn extract_compare_roundtrip() {
    let file = tmp("refl-full.json");
    let out = doa(&[
        "extract",
        "--family",
        "refl-full",
        "--n",
        "4",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    // equal to the ledger block as a set and as an ideal
    for mode in ["set", "ideal"] {
        let out = doa(&[
            "compare",
            "--left",
            file.to_str().unwrap(),
            "--right",
            "ledger:Obstr2PhiC1C2C3L2",
            "--mode",
            mode,
        ]);
        assert_eq!(exit_code(&out), 0, "mode {mode}");
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(json["equal"], true);
    }
    // not equal to a different block
    let out = doa(&[
        "compare",
        "--left",
        file.to_str().unwrap(),
        "--right",
        "ledger:Obstr2kappaCref",
        "--mode",
        "ideal",
    ]);
    assert_eq!(exit_code(&out), 1);
    std::fs::remove_file(&file).ok();
}

#[test]
fn compare_ledger_unions() {
    let file = tmp("lie.json");
    let out = doa(&[
        "extract",
        "--family",
        "lie",
        "--n",
        "4",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let out = doa(&[
        "compare",
        "--left",
        file.to_str().unwrap(),
        "--right",
        "ledger:Obstr1+Obstr2kappaC1+Obstr2kappaCref",
        "--mode",
        "ideal",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::remove_file(&file).ok();
}

#[test]
fn groebner_dimension_report() {
    let file = tmp("refl-ideal.json");
    doa(&[
        "extract",
        "--family",
        "refl-full",
        "--n",
        "4",
        "--out",
        file.to_str().unwrap(),
    ]);
    let out = doa(&[
        "groebner",
        "--in",
        file.to_str().unwrap(),
        "--dimension",
        "--degree",
    ]);
    assert_eq!(exit_code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["timed_out"], false);
    assert_eq!(json["affine_dim"], 5);
    assert_eq!(json["projective_dim"], 4);
    assert_eq!(json["degree"], "1");
    std::fs::remove_file(&file).ok();
}

#[test]
fn oracle_pass_and_fail() {
    let point = tmp("point.json");
    std::fs::write(&point, r#"{ "aperp": "1", "bperp": "-2", "c": "3" }"#).unwrap();
    let out = doa(&[
        "oracle", "--family", "std-refl", "--n", "4", "--point",
        point.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["pass"], true);
    assert!(json["triples_checked"].as_u64().unwrap() > 50);

    // an obstructed identity-linear point must fail with a witness
    std::fs::write(
        &point,
        r#"{ "a1": "0", "a2": "0", "a3": "0", "a4": "0", "a5": "0", "a6": "0", "a7": "0",
            "b1": "0", "b2": "0", "b3": "0", "b4": "1", "b5": "0", "b6": "0", "b7": "0",
            "alpha": "1", "beta": "0", "c": "0" }"#,
    )
    .unwrap();
    let out = doa(&[
        "oracle", "--family", "lie", "--n", "4", "--point",
        point.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["pass"], false);
    assert!(json["witness"].is_object());
    std::fs::remove_file(&point).ok();
}

#[test]
fn verify_with_bindings_file() {
    let bindings = tmp("bindings.json");
    // degree-zero specialization of the off-identity family
    std::fs::write(
        &bindings,
        r#"{ "a": "0", "aperp": "0", "b": "0", "bperp": "0", "alpha": "0", "beta": "0" }"#,
    )
    .unwrap();
    let out = doa(&[
        "verify", "--family", "refl-full", "--n", "4", "--bindings",
        bindings.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::remove_file(&bindings).ok();
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = doa(&["verify", "--family", "lie", "--n", "4"]);
    let b = doa(&["verify", "--family", "lie", "--n", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let f1 = tmp("det1.json");
    let f2 = tmp("det2.json");
    doa(&["extract", "--family", "lie", "--n", "5", "--out", f1.to_str().unwrap()]);
    doa(&["extract", "--family", "lie", "--n", "5", "--out", f2.to_str().unwrap()]);
    assert_eq!(
        std::fs::read(&f1).unwrap(),
        std::fs::read(&f2).unwrap(),
        "extraction output must be deterministic"
    );
    std::fs::remove_file(&f1).ok();
    std::fs::remove_file(&f2).ok();
}

#[test]
fn usage_errors_exit_two() {
    let out = doa(&["verify", "--family", "no-such-family", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
    let out = doa(&["verify", "--family", "refl", "--n", "3"]);
    assert_eq!(exit_code(&out), 2);
    let out = doa(&["compare", "--left", "/nonexistent.json", "--right", "ledger:Obstr1", "--mode", "set"]);
    assert_eq!(exit_code(&out), 2);
    let out = doa(&["compare", "--left", "/nonexistent.json", "--right", "ledger:Obstr1", "--mode", "nope"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn invariants_suite_passes_at_n4() {
    let out = doa(&["invariants", "--n", "4"]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["pass"], true);
    assert!(json["checks"].as_array().unwrap().len() >= 15);
    let text = String::from_utf8_lossy(&out.stderr);
    assert!(text.contains("[PASS] lie_family_ledger_ideal_equality"));
    assert!(!text.contains("[FAIL]"));
}

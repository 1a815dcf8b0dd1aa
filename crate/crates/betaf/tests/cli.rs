//! CLI contract tests: exit codes, deterministic output, cache
//! transparency.

use std::process::Command;

fn betaf() -> Command {
    Command::new(env!("CARGO_BIN_EXE_betaf"))
}

#[test]
fn beta_rep_prints_and_exits_zero() {
    let out = betaf()
        .args(["beta-rep", "-t", "2", "-s", "2", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["result"]["degree"], 8);
    assert_eq!(v["result"]["order_exponent"], 1);
}

#[test]
fn r_greater_than_one_exits_two() {
    let out = betaf().args(["beta-rep", "-t", "1", "-s", "1", "-r", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unsupported"), "stderr: {err}");
}

#[test]
fn invalid_configuration_exits_two() {
    let out = betaf()
        .args(["--prime", "3", "--level", "3", "beta-rep", "-t", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = betaf()
        .args(["--precision", "10", "beta-rep", "-t", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = betaf().args(["verify", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_structured_output() {
    let run = || {
        betaf()
            .args(["f-inv", "beta", "4", "4", "--format", "json"])
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "structured output must be byte-identical");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["result"]["structured"], "a3^4 + a3^3");
    assert_eq!(v["result"]["matches_closed_form_mod_ambiguity"], true);
}

#[test]
fn cache_transparency() {
    let dir = std::env::temp_dir().join(format!("betaf-cli-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let args = [
        "beta-rep",
        "-t",
        "2",
        "-s",
        "2",
        "--format",
        "json",
        "--cache-dir",
    ];
    let cold = betaf()
        .args(args)
        .arg(dir.as_os_str())
        .output()
        .unwrap();
    assert!(cold.status.success(), "{}", String::from_utf8_lossy(&cold.stderr));
    assert!(dir.exists(), "cache directory should be created");
    let warm = betaf()
        .args(args)
        .arg(dir.as_os_str())
        .output()
        .unwrap();
    assert_eq!(cold.stdout, warm.stdout, "warm and cold cache results must agree");
    // and identical to a run without any cache
    let plain = betaf()
        .args(["beta-rep", "-t", "2", "-s", "2", "--format", "json"])
        .output()
        .unwrap();
    let strip_config = |bytes: &[u8]| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_slice(bytes).unwrap();
        v["config"]["cache_dir"] = serde_json::Value::Null;
        v
    };
    assert_eq!(strip_config(&plain.stdout), strip_config(&warm.stdout));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn verify_suite_prints_one_line_per_criterion() {
    let out = betaf().args(["verify", "eta"]).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout.lines().filter(|l| l.starts_with("criterion")).collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].contains("[PASS]"), "{}", lines[0]);
}

#[test]
fn chern_commands() {
    let out = betaf()
        .args(["chern", "polynomial", "--dimension", "4", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["polynomial"], "c1_0*c1_1");
    let out = betaf()
        .args([
            "chern",
            "evaluate",
            "--dimension",
            "4",
            "--data",
            r#"{"c1_0*c1_1": 3}"#,
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("kervaire-one"));
    // unsupported dimension: invalid input
    let out = betaf()
        .args(["chern", "polynomial", "--dimension", "6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eisenstein_orientation_on_level_one() {
    let out = betaf()
        .args([
            "--prime",
            "5",
            "--level",
            "1",
            "--orientation",
            "eisenstein",
            "--precision",
            "100",
            "f-inv",
            "beta",
            "1",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["matches_closed_form_mod_ambiguity"], true);
}

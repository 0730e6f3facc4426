//! Integration tests for the `spgr` binary surface.

use spgr::pluecker::LinearSection;
use std::process::Command;

fn spgr(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_spgr"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

#[test]
fn equation_emits_worked_section() {
    let (code, stdout, _) = spgr(&["equation", "--i-prime", "3", "--n", "4"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["d"], 3);
    assert_eq!(value["two_n"], 8);
    let terms = value["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["index"], serde_json::json!([1, 3, 8]));
    assert_eq!(terms[0]["coeff"], "-1");
    assert_eq!(terms[1]["index"], serde_json::json!([2, 3, 7]));
    assert_eq!(terms[1]["coeff"], "-1");
    assert_eq!(terms[2]["index"], serde_json::json!([3, 4, 5]));
    assert_eq!(terms[2]["coeff"], "1");
    // round-trip through the library parser
    let section = LinearSection::from_json(&stdout).unwrap();
    assert_eq!(section.to_json() + "\n", stdout);
}

#[test]
fn equation_empty_i_prime() {
    let (code, stdout, _) = spgr(&["equation", "--n", "2"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["d"], 2);
    let terms = value["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["index"], serde_json::json!([1, 4]));
    assert_eq!(terms[1]["index"], serde_json::json!([2, 3]));
}

#[test]
fn restrict_drops_terms() {
    let (code, stdout, _) = spgr(&[
        "restrict",
        "--i-prime",
        "1",
        "--i",
        "1,3,7",
        "--two-n",
        "8",
    ]);
    assert_eq!(code, 0);
    let section = LinearSection::from_json(&stdout).unwrap();
    assert_eq!(section.num_terms(), 2);
}

#[test]
fn count_reports_erratum_note() {
    let (code, stdout, _) = spgr(&["count", "--j", "1,2,3", "--i", "1,3,7", "--two-n", "8"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["n"], 1);
    assert!(value["note"].as_str().unwrap().contains("1"));
    // no note on an ordinary pair
    let (code, stdout, _) = spgr(&["count", "--j", "1,2", "--two-n", "8", "--i", "5,8"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["n"], 1);
    assert!(value.get("note").is_none());
}

#[test]
fn classify_csv_shape() {
    let (code, stdout, _) = spgr(&["classify", "--d", "2", "--two-n", "4"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.trim_end().lines().collect();
    assert_eq!(lines.len(), 5); // header + 4 records
    assert_eq!(
        lines[0],
        "index,dim_a,dim_c,n_self,n_id,r1,r2,q,r,lci,tangent_dim_a,tangent_codim_c,smooth_a,smooth_c"
    );
    assert!(lines[1].starts_with("\"1,2\""));
}

#[test]
fn enumerate_below_and_errors() {
    let (code, stdout, _) = spgr(&[
        "enumerate",
        "--d",
        "3",
        "--two-n",
        "8",
        "--symplectic",
        "--below",
        "1,3,7",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.lines().all(|l| !l.is_empty()));
    let (code, _, stderr) = spgr(&["enumerate", "--d", "9", "--two-n", "4"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error"));
}

#[test]
fn tangent_reports_witness() {
    let (code, stdout, _) = spgr(&["tangent", "--i", "5,6", "--two-n", "8"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["smooth_a"], true);
    assert_eq!(value["smooth_c"], false);
    assert_eq!(value["tangent_dim_a"], 8);
    assert_eq!(value["tangent_codim_c"], 0);
}

#[test]
fn flag_report_and_enumeration() {
    let (code, stdout, _) = spgr(&["flag", "--w", "3,1,7", "--two-n", "8"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["dim_a"], 6);
    assert_eq!(value["dim_c"], 5);
    let (code, stdout, _) = spgr(&["flag", "--n", "2", "--symplectic"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim_end().lines().count(), 8);
}

#[test]
fn sample_deterministic_per_seed() {
    let args = [
        "sample",
        "--kind",
        "isotropic",
        "--d",
        "2",
        "--two-n",
        "4",
        "--seed",
        "11",
        "--samples",
        "2",
    ];
    let (code, first, _) = spgr(&args);
    assert_eq!(code, 0);
    let (_, second, _) = spgr(&args);
    assert_eq!(first, second);
    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 2);
    // entries are rational strings in a 4x2 layout
    assert_eq!(value[0].as_array().unwrap().len(), 4);
    assert_eq!(value[0][0].as_array().unwrap().len(), 2);
}

#[test]
fn usage_error_exits_one_and_help_zero() {
    let (code, _, _) = spgr(&["--definitely-not-a-flag"]);
    assert_eq!(code, 1);
    let (code, stdout, _) = spgr(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("enumerate"));
    let (code, _, stderr) = spgr(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unknown suite"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("spgr-out-{}.json", std::process::id()));
    let path_str = path.to_str().unwrap();
    let (code, stdout, _) = spgr(&[
        "equation",
        "--i-prime",
        "1",
        "--n",
        "4",
        "--out",
        path_str,
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(LinearSection::from_json(&body).is_ok());
    let _ = std::fs::remove_file(&path);
}

#[test]
fn thread_cap_env_var_is_honoured() {
    let output = Command::new(env!("CARGO_BIN_EXE_spgr"))
        .env("SPGR_THREADS", "1")
        .args(["verify", "--suite", "lemma"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0));
}

/// The shipped verification feature at its documented scale: every suite
/// green at 2n <= 8 and exit code 0.
#[test]
fn verify_all_two_n_max_8_exits_zero() {
    let (code, stdout, stderr) = spgr(&["verify", "--suite", "all", "--two-n-max", "8"]);
    assert_eq!(code, 0, "stdout:\n{stdout}\nstderr:\n{stderr}");
    assert!(stdout.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!stdout.contains("FAIL"));
}

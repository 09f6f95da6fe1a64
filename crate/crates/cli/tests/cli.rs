//! End-to-end runs of the gsp4kit binary: exit codes, report formats,
//! determinism, and the shipped data files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gsp4kit"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn constants_example_report() {
    let out = bin()
        .args(["constants", "--k", "0", "--kp", "0", "--level", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("- C (closed form): 64/3\n"), "{text}");
    assert!(text.contains("- discriminant constant: 524288/15*pi^12\n"), "{text}");
    assert!(text.contains("- C' = C: PASS\n"));
}

#[test]
fn constants_level_two() {
    let out = bin()
        .args(["constants", "--k", "1", "--kp", "0", "--level", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("- level factor C_N: 2/25\n"));
}

#[test]
fn missing_required_flag_is_a_usage_error() {
    let out = bin().args(["constants", "--kp", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.to_lowercase().contains("usage") || err.contains("--k"), "{err}");
}

#[test]
fn invalid_weights_exit_with_usage_status() {
    let out = bin()
        .args(["constants", "--k", "0", "--kp", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--kp must not exceed --k"));

    let out = bin()
        .args(["constants", "--k", "1", "--kp", "0", "--level", "12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_format_emits_exact_strings() {
    let out = bin()
        .args(["constants", "--k", "2", "--kp", "1", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["sections"][1]["rows"].as_array().unwrap();
    let disc = rows.iter().find(|r| r["label"] == "discriminant constant").unwrap();
    assert!(disc["value"]["coeff"].is_string());
    assert_eq!(disc["value"]["pi_exp"], 19); // 3k + k' + 12
}

#[test]
fn approx_adds_but_never_replaces() {
    let out = bin()
        .args(["constants", "--k", "0", "--kp", "0", "--approx"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("- C (closed form): 64/3 ≈ 2.133333e1\n"), "{text}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let run = || {
        stdout(
            &bin()
                .args(["verify", "lattice", "--format", "csv"])
                .output()
                .unwrap(),
        )
    };
    assert_eq!(run(), run());
}

#[test]
fn out_flag_writes_the_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.md");
    let out = bin()
        .args(["constants", "--k", "0", "--kp", "0"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("64/3"));
}

#[test]
fn verify_constants_headline() {
    let out = bin().args(["verify", "constants"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("- C' = C for 91 weight pairs: PASS\n"), "{text}");
    assert!(text.contains("- verdict: PASS\n"));
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = bin().args(["verify", "everything"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lattice_disc_on_identity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.json");
    std::fs::write(
        &path,
        r#"{ "prime": 5,
             "basis": [["1","0"],["0","1"]],
             "gram": [["1","0"],["0","1"]],
             "alternating": false }"#,
    )
    .unwrap();
    let out = bin().arg("lattice").arg(&path).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("- Gram discriminant: 1\n"));
    assert!(text.contains("- valuation at 5: 0\n"));
}

#[test]
fn lattice_disc_diag_one_five_scaled_basis() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    // scaled row: basis Gram = diag(1, 25)
    std::fs::write(
        &path,
        r#"{ "prime": 5,
             "basis": [["1","0"],["0","5"]],
             "gram": [["1","0"],["0","1"]],
             "alternating": false }"#,
    )
    .unwrap();
    let out = bin().arg("lattice").arg(&path).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("- Gram discriminant: 25\n"));
    assert!(text.contains("- valuation at 5: 2\n"));
}

#[test]
fn lattice_malformed_json_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{ "prime": 5, "basis": [["1","oops"]], "gram": [["1","0"]], "alternating": false }"#,
    )
    .unwrap();
    let out = bin().arg("lattice").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("basis[0][1]"));
}

#[test]
fn duality_check_on_shipped_file_passes() {
    let out = bin()
        .arg("lattice")
        .arg(data("lattice_split.json"))
        .args(["--action", "duality-check"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("self-dual in its subspace: PASS"));
}

#[test]
fn congruence_shipped_files_report_691() {
    let out = bin()
        .arg("congruence")
        .arg(data("delta.json"))
        .arg(data("e12.json"))
        .args(["--bound", "100"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("- congruence primes: [691]\n"), "{text}");
    assert!(text.contains("- p = 691: maximal ideal (691, x, y)\n"), "{text}");
}

#[test]
fn congruence_file_with_itself_is_identical() {
    let out = bin()
        .arg("congruence")
        .arg(data("delta.json"))
        .arg(data("delta.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("identical systems"));
}

#[test]
fn congruence_bound_zero_is_empty_range() {
    let out = bin()
        .arg("congruence")
        .arg(data("delta.json"))
        .arg(data("e12.json"))
        .args(["--bound", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("empty comparison range"));
}

#[test]
fn thread_cap_env_var_is_accepted() {
    let out = bin()
        .env("TOOLKIT_THREADS", "1")
        .args(["verify", "constants"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

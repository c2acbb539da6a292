use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fweights(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fweights"))
        .args(args)
        .env_remove("FW_GOLDEN_DIR")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn rv1_report_values() {
    let out = fweights(&["rv", "--system", "RV1", "--prime", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["w"], 35);
    assert_eq!(v["m"], 41);
    assert_eq!(v["k"], 41);
    assert_eq!(v["m_star"], 41);
    assert_eq!(v["conjectures"]["k_le_S"]["rhs"], 343);
    assert_eq!(v["conjectures"]["w_le_p_pow_sectional_rank"]["rhs"], 49);
}

#[test]
fn he_defect_split() {
    let v = json(&fweights(&["rv", "--system", "He", "--prime", "7"]));
    assert_eq!(v["m_by_defect"]["2"], 3);
    assert_eq!(v["m_by_defect"]["3"], 20);
    assert_eq!(v["m_by_defect"]["0"], 0);
}

#[test]
fn rv_at_wrong_prime_is_input_error() {
    let out = fweights(&["rv", "--system", "RV1", "--prime", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("only at p = 7"));
    assert_eq!(fweights(&["rv", "--system", "Nope", "--prime", "7"]).status.code(), Some(3));
}

#[test]
fn table_all_primes_has_no_diffs() {
    let out = fweights(&["rv-table", "--primes", "3,5,7,13"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["diffs"].as_array().unwrap().is_empty());
    let mut rows: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["row"].as_u64().unwrap()).collect();
    rows.dedup();
    assert_eq!(rows.len(), 19);
}

#[test]
fn table_prime_three_only() {
    let out = fweights(&["rv-table", "--primes", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let systems: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(systems, ["2F4(2)'", "J4"]);
}

#[test]
fn table_golden_override_reports_diff() {
    let dir = tempfile::tempdir().unwrap();
    let golden = include_str!("../../core/golden/table2.json").replace(
        r#"{ "system": "He", "primes": [7], "out_star": "C_3", "m2": 3, "m3": 20, "w": 10 }"#,
        r#"{ "system": "He", "primes": [7], "out_star": "C_3", "m2": 3, "m3": 20, "w": 11 }"#,
    );
    std::fs::write(dir.path().join("table2.json"), golden).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_fweights"))
        .args(["rv-table", "--primes", "7"])
        .env("FW_GOLDEN_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["diffs"][0]["system"], "He");
    assert_eq!(v["diffs"][0]["computed"], 10);
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(fweights(&["rv-table", "--format", "xml"]).status.code(), Some(3));
    assert_eq!(fweights(&["rv-table", "--primes", "11"]).status.code(), Some(3));
    assert_eq!(fweights(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(fweights(&["rv", "--system", "He"]).status.code(), Some(3));
    assert_eq!(fweights(&["--help"]).status.code(), Some(0));
}

#[test]
fn group_s4_main2() {
    let out = fweights(&["group", &fixture("s4.json"), "--prime", "2", "--checks", "main2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"]["main2"]["pass"], true);
    assert_eq!(v["report"]["k"], 5);
    assert_eq!(v["report"]["m_star"], 5);
    assert_eq!(v["system"], "s4");
}

#[test]
fn group_gl2_section5() {
    let out = fweights(&["group", &fixture("gl2_3.json"), "--prime", "3", "--checks", "section5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let s = &v["checks"]["section5"]["outcome"];
    let k = &s["k"];
    for key in ["m_star_via_chains", "m_e", "m_circ", "m_e_circ", "m_e_circ_c"] {
        assert_eq!(&s["sums"][key], k);
    }
}

#[test]
fn group_all_checks_on_fixtures() {
    for (file, p) in [("d8.json", "2"), ("c7_c3.json", "7"), ("sl2_3.json", "3"), ("sl2_3.json", "2")] {
        let out = fweights(&["group", &fixture(file), "--prime", p]);
        assert_eq!(out.status.code(), Some(0), "{file} p={p}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json(&out)["pass"], true);
    }
}

#[test]
fn group_p_group_input() {
    // G = S: F_S(S) on D₈, k is the number of classes of D₈
    let out = fweights(&["group", &fixture("d8.json"), "--prime", "2", "--checks", "main2"]);
    assert_eq!(json(&out)["report"]["k"], 5);
}

#[test]
fn group_input_errors() {
    assert_eq!(fweights(&["group", &fixture("singular.json"), "--prime", "3"]).status.code(), Some(3));
    assert_eq!(fweights(&["group", "/no/such/file.json", "--prime", "3"]).status.code(), Some(3));
    assert_eq!(
        fweights(&["group", &fixture("s4.json"), "--prime", "2", "--checks", "main3"]).status.code(),
        Some(3)
    );
    let capped = fweights(&["group", &fixture("s4.json"), "--prime", "2", "--cap-group-order", "10"]);
    assert_eq!(capped.status.code(), Some(3));
    let capped = fweights(&["group", &fixture("s4.json"), "--prime", "2", "--cap-subgroups", "4"]);
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn output_is_byte_stable_and_out_flag_writes() {
    let a = fweights(&["group", &fixture("s4.json"), "--prime", "2"]);
    let b = fweights(&["group", &fixture("s4.json"), "--prime", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let c = fweights(&["rv", "--system", "M", "--prime", "13"]);
    let d = fweights(&["rv", "--system", "M", "--prime", "13"]);
    assert_eq!(c.stdout, d.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("he.md");
    let out = fweights(&["rv", "--system", "He", "--prime", "7", "--format", "md", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.contains("| m(d=3) | 20 |"));
}

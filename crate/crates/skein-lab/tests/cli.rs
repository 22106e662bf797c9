//! End-to-end tests of the `skein-lab` binary: output formats, exit codes
//! and the documented environment override.

use std::io::Write;
use std::process::{Command, Output};

fn skein_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn poly_prints_the_trefoil_polynomial() {
    let out = skein_lab(&["poly", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "P = -2*l^2*m^0 + 1*l^2*m^2 + -1*l^4*m^0"
    );
}

#[test]
fn bounds_reports_figure_eight() {
    let out = skein_lab(&["bounds", "--dt", "4 6 8 2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mfw_lower=3\n"));
    assert!(text.contains("span_l=4\n"));
    assert!(text.contains("tau_prime_upper=-3\n"));
    assert!(text.contains("pf_holds=true\n"));

    let json = skein_lab(&["bounds", "--dt", "4 6 8 2", "--format", "json"]);
    assert!(json.status.success());
    let report: skein_core::bounds::BoundsReport =
        serde_json::from_str(stdout(&json).trim()).expect("documented schema");
    assert_eq!(report.span_l, 4);
}

#[test]
fn kauffman_and_seifert_run() {
    let out = skein_lab(&["kauffman", "--braid", "1 1 1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("F = "));
    let out = skein_lab(&["seifert", "--braid", "1 1 1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["seifert_circles"], 2);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["genus_status"], "certified");
}

#[test]
fn twist_echoes_p1_at_n_zero() {
    let p1 = "-2*l^2*m^0 + 1*l^2*m^2 + -1*l^4*m^0";
    let pinf = "-1*l^1*m^1 + 1*l^1*m^-1 + 1*l^3*m^-1";
    let mut seed = tempfile::NamedTempFile::new().unwrap();
    writeln!(seed, "{p1}\n{pinf}").unwrap();
    seed.flush().unwrap();
    let out = skein_lab(&["twist", "--seed", seed.path().to_str().unwrap(), "--n", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), format!("P_1 = {p1}"));
    let out = skein_lab(&["twist", "--seed", seed.path().to_str().unwrap(), "--n", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("P_3 = "));
}

#[test]
fn usage_errors_exit_64() {
    let out = skein_lab(&["poly", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(64));
    let out = skein_lab(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
    // --help is not an error
    let out = skein_lab(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn computation_errors_exit_1() {
    let out = skein_lab(&["poly", "--dt", "4 4 2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = skein_lab(&["poly"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn env_budget_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_skein-lab"))
        .args(["poly", "--braid", "1 1 1 2 2 -1 2"])
        .env("SKEIN_LAB_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    // an explicit flag overrides the environment
    let out = Command::new(env!("CARGO_BIN_EXE_skein-lab"))
        .args(["poly", "--braid", "1 1 1", "--budget", "100000"])
        .env("SKEIN_LAB_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn scan_resume_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("table.tsv");
    std::fs::write(&table, "3_1\tdt: 4 6 2\n4_1\tdt: 4 6 8 2\n5_2\tdt: 4 8 10 2 6\n").unwrap();
    let results = dir.path().join("out.jsonl");
    let summary = dir.path().join("summary.csv");

    let out = skein_lab(&[
        "scan",
        "--table",
        table.to_str().unwrap(),
        "--out",
        results.to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
        "--max-crossings",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("crossings,count,pf_violations"));
    let full = std::fs::read_to_string(&results).unwrap();
    assert_eq!(full.lines().count(), 4); // header + 3 records
    assert_eq!(
        std::fs::read_to_string(&summary).unwrap(),
        "crossings,count,pf_violations\n3,1,0\n4,1,0\n5,1,0\n"
    );

    // truncate and resume to identical bytes
    let prefix: String = full.lines().take(2).map(|l| format!("{l}\n")).collect();
    std::fs::write(&results, prefix).unwrap();
    let out = skein_lab(&[
        "resume",
        "--results",
        results.to_str().unwrap(),
        "--table",
        table.to_str().unwrap(),
        "--max-crossings",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&results).unwrap(), full);

    // a partial scan (budget skips) exits 2
    let tight = dir.path().join("tight.jsonl");
    let out = skein_lab(&[
        "scan",
        "--table",
        table.to_str().unwrap(),
        "--out",
        tight.to_str().unwrap(),
        "--max-crossings",
        "5",
        "--budget",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // resuming against the wrong table is a hard error
    let other = dir.path().join("other.tsv");
    std::fs::write(&other, "3_1\tdt: 4 6 2\n").unwrap();
    let out = skein_lab(&[
        "resume",
        "--results",
        results.to_str().unwrap(),
        "--table",
        other.to_str().unwrap(),
        "--max-crossings",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_passes_on_good_diagrams() {
    let out = skein_lab(&["check", "--dt", "4 8 10 2 6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("skein relation at every crossing: PASS"));
    assert!(text.contains("P(l, -l-l^-1) = 1 at 3 sample points: PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn family_commands_run() {
    let out = skein_lab(&["family", "--torus2", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("torus2(3): crossings=3 writhe=3 P = "));
    let out = skein_lab(&["family", "--pretzel=-3,-5,-7", "--steps", "2", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pretzel(-3,-5,-7)"));
    assert!(text.contains("pretzel(-3,-5,-9)"));
    let out = skein_lab(&["family", "--twist-knot", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["crossings"], 4);
}

//! End-to-end runs of the binary on the sample job files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_xcoh"))
}

fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("testdata")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn cohomology_of_braided_example() {
    let out = run(&[
        "cohomology",
        "--spec",
        testdata("z2_braided.job").to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("braiding_level = \"symmetric\""));
    // H^-1 = C2, H^0 has 4 classes, H^1 has 4 classes with a table
    assert!(text.contains("degree = -1"), "{text}");
    let h1_block = text.split("h_1 {").nth(1).expect("h_1 block");
    assert!(h1_block.contains("order = 4"));
    assert!(h1_block.contains("abelian = true"));
}

#[test]
fn cohomology_of_classic_s3() {
    let out = run(&[
        "cohomology",
        "--spec",
        testdata("classic_s3.job").to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let h0_block = text.split("h_0 {").nth(1).expect("h_0 block");
    assert!(h0_block.contains("order = 6"));
    let h1_block = text.split("h_1 {").nth(1).expect("h_1 block");
    assert!(h1_block.contains("order = 2"));
}

#[test]
fn verify_reports_no_violations() {
    let out = run(&[
        "verify",
        "--spec",
        testdata("z2_braided.job").to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("failed_suites = 0"));
}

#[test]
fn butterfly_star_structure() {
    let out = run(&[
        "butterfly",
        "--spec",
        testdata("z2_braided.job").to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("classes_multiply = true"));
    assert!(text.contains("braiding_squares_to_identity = true"));
    assert!(text.contains("identity_pushforward_preserves_classes = true"));
    assert!(text.contains("rho_derivation"));
}

#[test]
fn les_junctions_exact() {
    let out = run(&["les", "--spec", testdata("times2.job").to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("= false"), "{text}");
    assert!(text.contains("intertwining_ok = true"));
}

#[test]
fn invalid_braiding_fails_verification_with_witnesses() {
    let out = run(&[
        "verify",
        "--spec",
        testdata("bad_braiding.job").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("violated"), "{text}");
    assert!(text.contains("bracket_boundary"), "{text}");
}

#[test]
fn parse_errors_carry_positions_and_exit_2() {
    let dir = std::env::temp_dir().join("xcoh-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.job");
    std::fs::write(&bad, "[group G]\ncyclic nope\n[job]\ncoefficients G\n").unwrap();
    let out = run(&["cohomology", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = run(&[
        "cohomology",
        "--spec",
        testdata("times2.job").to_str().unwrap(),
        "--budget",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("budget"), "{text}");
}

#[test]
fn env_budget_is_honored() {
    let out = bin()
        .args([
            "cohomology",
            "--spec",
            testdata("times2.job").to_str().unwrap(),
        ])
        .env("XCOH_BUDGET", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn selftest_passes_and_is_byte_deterministic() {
    let a = run(&["selftest"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
    let b = run(&["selftest"]);
    assert_eq!(
        a.stdout, b.stdout,
        "selftest reports must be byte-identical"
    );
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("criterion_12"));
    assert!(!text.contains("passed = false"));
}

#[test]
fn reports_to_file_match_stdout() {
    let dir = std::env::temp_dir().join("xcoh-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = run(&[
        "cohomology",
        "--spec",
        testdata("z2_braided.job").to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let direct = run(&[
        "cohomology",
        "--spec",
        testdata("z2_braided.job").to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

//! End-to-end tests of the `acyclo` binary: flags, exit codes, pipelines.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn acyclo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acyclo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn acyclo_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_acyclo"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn homology_preset_text_and_json() {
    let out = acyclo(&["homology", "--preset", "sphere2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("degree 2: Z"), "{}", stdout(&out));

    let out = acyclo(&["homology", "--preset", "sphere2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["2"]["betti"], serde_json::json!(1));
    assert_eq!(v["1"]["betti"], serde_json::json!(0));
}

#[test]
fn homology_of_projective_plane_shows_torsion() {
    let out = acyclo(&["homology", "rp2_6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["1"]["torsion"], serde_json::json!([2]));
}

#[test]
fn cohomology_shifts_torsion() {
    let out = acyclo(&["cohomology", "--preset", "rp2_6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["2"]["torsion"], serde_json::json!([2]));
    assert_eq!(v["1"]["torsion"], serde_json::json!([]));
}

#[test]
fn max_degree_flag_limits_table() {
    let out = acyclo(&["homology", "--preset", "sphere2", "--max-degree", "1"]);
    let text = stdout(&out);
    assert!(text.contains("degree 1:"));
    assert!(!text.contains("degree 2:"));
}

#[test]
fn perfect_exit_codes() {
    let out = acyclo(&["perfect", "--preset", "hatcher"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("perfect: true"));

    let out = acyclo(&["perfect", "--preset", "free1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("perfect: false"));
}

#[test]
fn abelianize_from_inline_text() {
    let out = acyclo(&[
        "abelianize",
        "--text",
        "< a, b | a b a^-1 = b^2 >",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["free_rank"], serde_json::json!(1));
    assert_eq!(v["torsion"], serde_json::json!([]));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let out = acyclo(&["abelianize", "--text", "< a | a^ >"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("1:"), "no position in: {err}");
    assert!(err.contains("exponent"), "unexpected message: {err}");
}

#[test]
fn unknown_preset_exits_2() {
    let out = acyclo(&["homology", "--preset", "noexist"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("preset"));
}

#[test]
fn kind_mismatch_exits_2() {
    let out = acyclo(&["join", "hatcher", "circle3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("complex"), "{}", stderr(&out));

    let out = acyclo(&["abelianize", "--preset", "torus7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("presentation"), "{}", stderr(&out));
}

#[test]
fn acyclicity_reports() {
    let out = acyclo(&["acyclicity", "--preset", "higman", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["max_k"], serde_json::json!("infinity"));
    assert_eq!(v["connected"], serde_json::json!(true));
    assert!(v["caveat"].as_str().unwrap().contains("Whitehead"));

    let out = acyclo(&["acyclicity", "--preset", "circle3"]);
    assert!(stdout(&out).contains("max_k: 1"));
}

#[test]
fn acyclicity_h_indexing_flag() {
    let out = acyclo(&["acyclicity", "--preset", "s0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["max_k"], serde_json::json!(0));

    let out = acyclo(&[
        "acyclicity",
        "--preset",
        "s0",
        "--h-indexing",
        "section5",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["max_k"], serde_json::json!(-1));
}

#[test]
fn pi1_of_torus() {
    let out = acyclo(&["pi1", "--preset", "torus7", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["abelianization"]["free_rank"], serde_json::json!(2));

    let out = acyclo(&["pi1", "--preset", "s0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("2 components"));
}

#[test]
fn snf_subcommand() {
    let out = acyclo(&["snf", "--text", "[[2,4],[6,8]]"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("diagonal: [2, 4]"));

    let out = acyclo(&["snf", "--text", "[[2,4],[6,8]]", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["diagonal"], serde_json::json!([2, 4]));
}

#[test]
fn stdin_complex_analysis() {
    let out = acyclo_stdin(&["homology", "-"], "# triangle\n0 1\n1 2\n0 2\n");
    assert!(out.status.success());
    assert!(stdout(&out).contains("degree 1: Z"));
}

#[test]
fn emitted_suspension_pipes_back_in() {
    let out = acyclo(&["suspend", "--preset", "s0"]);
    assert!(out.status.success());
    let emitted = stdout(&out);
    let out = acyclo_stdin(&["homology", "-"], &emitted);
    assert!(stdout(&out).contains("degree 1: Z"), "{}", stdout(&out));
}

#[test]
fn join_emits_a_three_sphere() {
    let out = acyclo(&["join", "circle3", "circle3"]);
    assert!(out.status.success());
    let emitted = stdout(&out);
    let out = acyclo_stdin(&["homology", "-", "--format", "json"], &emitted);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["3"]["betti"], serde_json::json!(1));
    assert_eq!(v["2"]["betti"], serde_json::json!(0));
}

#[test]
fn wedge_and_cone_emission() {
    let out = acyclo(&["wedge", "circle3", "circle3"]);
    assert!(out.status.success());
    let out = acyclo_stdin(&["homology", "-", "--format", "json"], &stdout(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["1"]["betti"], serde_json::json!(2));

    let out = acyclo(&["cone", "--preset", "rp2_6", "--format", "json"]);
    assert!(out.status.success());
    let out = acyclo_stdin(&["acyclicity", "-", "--format", "json"], &stdout(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["max_k"], serde_json::json!("infinity"));
}

#[test]
fn complex_file_input() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("triangle.cplx");
    std::fs::write(&path, "0 1\n1 2\n0 2\n").expect("write");
    let out = acyclo(&["homology", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("degree 1: Z"));

    let out = acyclo(&["homology", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn permcheck_preset_and_exit_codes() {
    let out = acyclo(&["permcheck", "--preset", "hatcher-a5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("relations hold: true"));
    assert!(text.contains("image order: 60"));
    assert!(text.contains("surjective onto target: true"));

    // b = (2 5 4) replaced by a transposition: a^5 = b^3 fails.
    let out = acyclo(&[
        "permcheck",
        "--presentation",
        "< a, b | a^5 = b^3, b^3 = (a b)^2 >",
        "--assign",
        "a=(1 2 3 4 5)",
        "--assign",
        "b=(2 5)",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("relations hold: false"));
}

#[test]
fn permcheck_custom_target() {
    let out = acyclo(&[
        "permcheck",
        "--presentation",
        "< a, b | a^5 = b^3, b^3 = (a b)^2 >",
        "--assign",
        "a=(1 2 3 4 5)",
        "--assign",
        "b=(2 5 4)",
        "--target",
        "alternating5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["image_order"], serde_json::json!(60));
    assert_eq!(v["surjective"], serde_json::json!(true));
}

#[test]
fn verify_paper_passes() {
    let out = acyclo(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("23 of 23 rows passed"), "{text}");
    assert!(!text.contains("FAIL"));

    let out = acyclo(&["verify-paper", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["pass"] == serde_json::json!(true)));
}

//! End-to-end tests of the command-line surface: exit codes, output
//! determinism, and the JSON schema.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prym2"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

#[test]
fn verify_text_passes_and_prints_presentation() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("check theorem"));
    assert!(!text.contains("FAIL"));
    let last = text.lines().last().unwrap();
    assert_eq!(
        last,
        "CH*(R_2) = Z[l1,l2,g]/(2*l1, 2*g, 8*l2, g^2+l1*g, l1^2+l1*g)"
    );
}

#[test]
fn verify_json_schema() {
    let out = run(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert!(v["version"].is_string());
    assert!(v["timing_ms"].is_u64());
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 13);
    for c in checks {
        assert!(c["id"].is_string());
        assert!(c["pass"].as_bool().unwrap());
        assert!(c["detail"].is_string());
    }
    let theorem = &v["theorem"];
    assert_eq!(theorem["verified"], true);
    assert_eq!(
        theorem["presentation"],
        "Z[l1,l2,g]/(2*l1, 2*g, 8*l2, g^2+l1*g, l1^2+l1*g)"
    );
    assert_eq!(theorem["computed_generators"].as_array().unwrap().len(), 29);
    assert_eq!(theorem["target_generators"].as_array().unwrap().len(), 5);
}

#[test]
fn text_and_json_verdicts_agree() {
    let text = stdout(&run(&["verify"]));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["verify", "--format", "json"]))).unwrap();
    let text_pass = text
        .lines()
        .filter(|l| l.starts_with("check ") && l.contains("PASS"))
        .count();
    let json_pass = json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"].as_bool().unwrap())
        .count();
    assert_eq!(text_pass, json_pass);
    assert!(!text
        .lines()
        .any(|l| l.starts_with("check ") && l.contains("FAIL")));
}

#[test]
fn verify_output_is_deterministic() {
    let a = stdout(&run(&["verify"]));
    let b = stdout(&run(&["verify"]));
    assert_eq!(a, b);

    // JSON differs only in timing
    let mut ja: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["verify", "--format", "json"]))).unwrap();
    let mut jb: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["verify", "--format", "json"]))).unwrap();
    ja["timing_ms"] = 0.into();
    jb["timing_ms"] = 0.into();
    assert_eq!(ja, jb);
}

#[test]
fn dump_output_is_deterministic() {
    for what in ["envelope", "chern", "ideal", "sclasses"] {
        let a = stdout(&run(&["dump", what]));
        let b = stdout(&run(&["dump", what]));
        assert_eq!(a, b, "{what}");
    }
}

#[test]
fn corrupted_fixture_fails_with_named_check() {
    let out = Command::new(env!("CARGO_BIN_EXE_prym2"))
        .args(["verify"])
        .env("NO_COLOR", "1")
        .env("PRYM2_TEST_CORRUPT_FIXTURE", "1")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    // the corrupted input class is named by the first failing check
    assert!(text.contains("finite-subsets") || text.contains("{X,Y}"));
}

#[test]
fn check_finite_subsets_prints_six_class_lines() {
    let out = run(&["check", "finite-subsets"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches(": PASS").count(), 6);
    for label in [
        "{X^2,Y^2}",
        "{X^2Y,XY^2}",
        "{X^3,Y^3}",
        "{X^2Y^2}",
        "{X^3Y,XY^3}",
        "{X^4,Y^4}",
    ] {
        assert!(text.contains(label), "{label} missing");
    }
}

#[test]
fn check_ph_vanishing_prints_witness() {
    let out = run(&["check", "ph-vanishing"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("witness: P(b1+g) ="));
}

#[test]
fn single_checks_run_and_pass() {
    for id in ["finite-subsets", "ph-vanishing", "theorem"] {
        let out = run(&["check", id]);
        assert_eq!(out.status.code(), Some(0), "{id}");
        assert!(stdout(&out).contains("PASS"));
    }
}

#[test]
fn unknown_check_exits_2_with_registry() {
    let out = run(&["check", "nonsense-id"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown check"));
    assert!(err.contains("diag-pe"));
    assert!(err.contains("theorem"));
}

#[test]
fn list_checks_names_the_registry() {
    let out = run(&["list-checks"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let ids: Vec<&str> = text.lines().collect();
    assert_eq!(ids.len(), 13);
    assert_eq!(ids[0], "diag-pe");
    assert_eq!(ids[12], "theorem");
}

#[test]
fn dump_sclasses_contains_the_conversion_table() {
    let out = run(&["dump", "sclasses"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("s_4^2 = h^2 - b1*h + 4*b2"));
    assert!(text.contains("s_1^0 = 1"));
    assert!(text.contains("s_1^1 = h"));
}

#[test]
fn dump_chern_contains_top_class() {
    let out = run(&["dump", "chern"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("c5(Sym4(Vdual)) = -96*b1^3*b2 - 128*b1*b2^2"));
    assert!(text.contains("c0(Sym1(Vdual)) = 1"));
}

#[test]
fn dump_ideal_lists_provenance() {
    let out = run(&["dump", "ideal"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2*g  [BG relation]"));
    assert!(text.contains("[P(h)]"));
    assert!(text.contains("p4: {X^2Y^2}"));
    assert_eq!(text.lines().count(), 29);
}

#[test]
fn dump_envelope_covers_all_components() {
    let out = run(&["dump", "envelope"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for c in ["p11", "p12", "p21", "p23", "p31", "p4"] {
        assert!(text.contains(&format!("{c}:")), "{c} missing");
    }
    assert!(text.contains("p22: skipped (factors through p11)"));
    assert!(text.contains("p32: skipped (factors through p11)"));
    // 26 pushforwards + 2 skip notices
    assert_eq!(text.lines().count(), 28);
}

#[test]
fn dump_json_is_valid() {
    for what in ["envelope", "chern", "ideal", "sclasses"] {
        let out = run(&["dump", what, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{what}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
        assert!(v.as_array().unwrap().len() > 3);
    }
}

#[test]
fn invalid_dump_target_exits_2() {
    let out = run(&["dump", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

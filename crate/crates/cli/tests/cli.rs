//! End-to-end tests of the binary: exit codes per error family, report
//! content, determinism, and exact round-tripping of the machine section.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn problems_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../problems")
}

fn omnf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omnf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("omnf-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_reports_all_four_types() {
    let file = problems_dir().join("coupled_rotations.toml");
    let out = omnf(&["classify", file.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    for t in ["SE", "SR", "AE", "AR"] {
        assert!(text.contains(t), "missing {t} in:\n{text}");
    }
    assert!(text.contains("antisymplectic"));
}

#[test]
fn verify_accepts_consistent_problem() {
    let file = problems_dir().join("d4_plane.toml");
    let out = omnf(&["verify", file.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("S acts symplectically"));
}

#[test]
fn verify_rejects_non_symplectic_closure_with_exit_3() {
    let file = problems_dir().join("s_not_symplectic.toml");
    let out = omnf(&["verify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("S is not symplectic"), "stderr: {err}");
}

#[test]
fn normal_form_equivariant_runs_and_round_trips() {
    let file = problems_dir().join("d4_plane.toml");
    let out = omnf(&[
        "normal-form",
        file.to_str().unwrap(),
        "--equivariant",
        "--format",
        "json",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json = String::from_utf8(out.stdout).unwrap();

    // typed round trip: re-parsing reproduces identical exact values and bytes
    let report: omnf_cli::report::MachineReport = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), json);
    let again: omnf_cli::report::MachineReport =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);

    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["task"], "normal-form --equivariant");
    assert_eq!(value["certificates_passed"], true);
    let degrees = value["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 5); // k = 3..7
    let dims: Vec<u64> = degrees
        .iter()
        .map(|d| d["complement_dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![0, 1, 0, 1, 0]);

    // the degree-2 coefficient of K is lambda*a12/2 = (-7/2)(5/3)/2 = -35/12
    let nf = value["normal_form"].as_array().unwrap();
    let quadratic: Vec<&serde_json::Value> = nf
        .iter()
        .filter(|t| {
            t["exponents"]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| e.as_u64().unwrap())
                .sum::<u64>()
                == 2
        })
        .collect();
    assert_eq!(quadratic.len(), 2);
    assert!(quadratic.iter().all(|t| t["coefficient"] == "-35/12"));
}

#[test]
fn normal_form_output_is_byte_identical_across_runs() {
    let file = problems_dir().join("coupled_rotations.toml");
    let args = [
        "normal-form",
        file.to_str().unwrap(),
        "--equivariant",
        "--format",
        "both",
    ];
    let a = omnf(&args);
    let b = omnf(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn order_flag_overrides_file_order() {
    let file = problems_dir().join("d4_plane.toml");
    let out = omnf(&[
        "normal-form",
        file.to_str().unwrap(),
        "--order",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(value["order"], 4);
    assert_eq!(value["degrees"].as_array().unwrap().len(), 2);
}

#[test]
fn output_file_is_written() {
    let file = problems_dir().join("d4_plane.toml");
    let target = std::env::temp_dir().join(format!("omnf-out-{}.json", std::process::id()));
    let out = omnf(&[
        "normal-form",
        file.to_str().unwrap(),
        "--format",
        "json",
        "--output",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&written).is_ok());
    std::fs::remove_file(&target).ok();
}

#[test]
fn non_skew_omega_is_a_validation_error() {
    let path = write_temp(
        "bad-omega.toml",
        r#"
dimension = 2
omega = [["0", "1"], ["1", "0"]]
"#,
    );
    let out = omnf(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("omega not skew-symmetric"), "stderr: {err}");
    std::fs::remove_file(path).ok();
}

#[test]
fn inconsistent_signs_are_a_validation_error() {
    // the identity generated with sigma_1 = -1 cannot carry a homomorphism
    let path = write_temp(
        "bad-signs.toml",
        r#"
dimension = 2
omega = [["0", "1"], ["-1", "0"]]

[group]

[[group.generators]]
matrix = [["1", "0"], ["0", "1"]]
sigma1 = -1
sigma2 = 1
"#,
    );
    let out = omnf(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("two different values"), "stderr: {err}");
    std::fs::remove_file(path).ok();
}

#[test]
fn malformed_toml_is_a_parse_error() {
    let path = write_temp("malformed.toml", "dimension = [[");
    let out = omnf(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(path).ok();
}

#[test]
fn missing_order_is_reported() {
    let path = write_temp(
        "no-order.toml",
        r#"
dimension = 2
omega = [["0", "1"], ["-1", "0"]]

[hamiltonian]
linear_part = [["0", "1"], ["-1", "0"]]
"#,
    );
    let out = omnf(&["normal-form", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--order"), "stderr: {err}");
    std::fs::remove_file(path).ok();
}

#[test]
fn equivariant_flag_requires_group() {
    let path = write_temp(
        "no-group.toml",
        r#"
dimension = 2
order = 4
omega = [["0", "1"], ["-1", "0"]]

[hamiltonian]
linear_part = [["0", "1"], ["-1", "0"]]
"#,
    );
    let out = omnf(&["normal-form", path.to_str().unwrap(), "--equivariant"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(path).ok();
}

#[test]
fn run_dispatches_on_the_file_task_tag() {
    // s_not_symplectic.toml carries task = "verify" and must exit 3
    let file = problems_dir().join("s_not_symplectic.toml");
    let out = omnf(&["run", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    // d4_plane.toml carries task = "normal-form" and a group block, so the
    // run is equivariant
    let file = problems_dir().join("d4_plane.toml");
    let out = omnf(&["run", file.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(value["task"], "normal-form --equivariant");
}

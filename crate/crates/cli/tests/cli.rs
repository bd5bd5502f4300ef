//! End-to-end tests of the `fc` binary: fixture loading, report content,
//! determinism, exit codes, and the fixture directory override.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

const FIXTURES: &[&str] = &["trivial", "s3", "d8", "a4", "c12", "dinf", "zxs3", "z2c4"];

fn fc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fc"))
        .args(args)
        .env_remove("FC_FIXTURE_DIR")
        .output()
        .expect("the binary runs")
}

fn fc_json(args: &[&str]) -> Value {
    let out = fc(args);
    assert!(
        out.status.success(),
        "fc {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn exit_code(args: &[&str]) -> i32 {
    fc(args).status.code().expect("no signal")
}

#[test]
fn every_fixture_loads_and_both_bundled_chains_validate() {
    for name in FIXTURES {
        let started = Instant::now();
        let nilpotent = fc_json(&["check-chain", name, "--chain", &format!("{name}.nilpotent")]);
        let solvable = fc_json(&["check-chain", name, "--chain", &format!("{name}.solvable")]);
        assert!(
            started.elapsed() <= Duration::from_secs(5),
            "{name}: chain checks over the time budget"
        );
        assert_eq!(nilpotent["results"]["valid"], Value::Bool(true));
        assert_eq!(solvable["results"]["valid"], Value::Bool(true));
        assert_eq!(nilpotent["schema"], "fc-report/v1");
    }
}

#[test]
fn tower_report_on_the_infinite_dihedral_fixture() {
    let report = fc_json(&["tower", "dinf"]);
    let results = &report["results"];
    assert_eq!(results["stabilizer_index"]["value"], 2);
    assert_eq!(results["nilpotency_class"], 1);
    assert_eq!(results["class_within_bound"], Value::Bool(true));
    assert_eq!(results["tower_verified"], Value::Bool(true));
    let steps = results["steps"].as_array().unwrap();
    assert!(!steps.is_empty());
    for step in steps {
        assert_eq!(step["odd_factor_finite"], Value::Bool(true));
    }
    // The input digests identify the bundled fixture and chain.
    assert_eq!(report["inputs"]["group"]["source"], "fixture:dinf");
    assert_eq!(report["inputs"]["chain"]["source"], "fixture:dinf.nilpotent");
}

#[test]
fn analyze_report_on_the_product_fixture() {
    let report = fc_json(&["analyze", "zxs3"]);
    let results = &report["results"];
    assert_eq!(results["fc_is_whole_group"], Value::Bool(true));
    assert_eq!(results["bound"]["value"], 3);
    let decomposition = &results["decomposition"];
    assert_eq!(decomposition["derived_order"]["value"], 3);
    assert_eq!(decomposition["centralizer_index"]["value"], 2);
    assert_eq!(decomposition["centralizer_class"], 1);
    // The cross-check section reports stabilized conjugate counts for
    // every generator (the whole group is FC).
    for gen in report["oracle"]["generators"].as_array().unwrap() {
        assert_eq!(gen["stabilized"], Value::Bool(true));
    }
}

#[test]
fn analyze_report_on_a_group_with_infinite_classes() {
    let report = fc_json(&["analyze", "dinf"]);
    let results = &report["results"];
    assert_eq!(results["fc_is_whole_group"], Value::Bool(false));
    assert_eq!(results["fc_index"]["value"], 2);
    assert_eq!(results["bound"]["value"], 2);
    assert!(results["decomposition"].is_null());
    // The reflection generator's conjugate count keeps growing.
    let gens = report["oracle"]["generators"].as_array().unwrap();
    assert!(gens
        .iter()
        .any(|g| g["stabilized"] == Value::Bool(false)));
}

#[test]
fn reports_are_byte_stable_across_runs() {
    for args in [
        vec!["analyze", "zxs3"],
        vec!["tower", "z2c4"],
        vec!["solvable", "dinf"],
        vec!["oracle", "s3", "--max-ball-radius", "8"],
    ] {
        let first = fc(&args);
        let second = fc(&args);
        assert!(first.status.success());
        assert_eq!(
            first.stdout, second.stdout,
            "fc {args:?} output changed between runs"
        );
    }
}

#[test]
fn the_order_and_ball_sizes_match_the_library_corpus() {
    for name in FIXTURES {
        let fixture = fc_core::fixtures::by_name(name).unwrap().unwrap();
        let report = fc_json(&["analyze", name, "--max-ball-radius", "3"]);
        let order = &report["results"]["group_order"]["value"];
        match fixture.group.order() {
            fc_core::IndexValue::Finite(n) => assert_eq!(order, &Value::from(n), "{name}"),
            fc_core::IndexValue::Infinite => assert_eq!(order, "infinite", "{name}"),
        }
        let gens = fixture.group.standard_generators();
        let ball = fc_core::oracle::ball_enumerate(&fixture.group, &gens, 3).unwrap();
        let sizes: Vec<u64> = (0..=3)
            .map(|r| ball.elements_within(r).count() as u64)
            .collect();
        let reported: Vec<u64> = report["oracle"]["ball_sizes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap())
            .collect();
        assert_eq!(reported, sizes, "{name}: ball sizes disagree");
    }
}

#[test]
fn the_group_digest_matches_the_embedded_fixture_bytes() {
    use sha2::{Digest, Sha256};
    let bytes = include_str!("../fixtures/dinf.json");
    let expected: String = Sha256::digest(bytes.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    let report = fc_json(&["oracle", "dinf"]);
    assert_eq!(report["inputs"]["group"]["sha256"], Value::from(expected));
}

#[test]
fn default_chains_come_from_the_fixture() {
    let solvable = fc_json(&["solvable", "s3"]);
    assert_eq!(solvable["inputs"]["chain"]["source"], "fixture:s3.solvable");
    assert!(solvable["results"]["derived_length"].as_u64().unwrap() <= 2);
    let checked = fc_json(&["check-chain", "d8"]);
    assert_eq!(checked["inputs"]["chain"]["source"], "fixture:d8.nilpotent");
    assert_eq!(checked["results"]["levels"], 3);
}

#[test]
fn exit_codes_distinguish_failure_kinds() {
    // I/O and schema errors.
    assert_eq!(exit_code(&["analyze", "/no/such/file.json"]), 4);
    let dir = tempfile::tempdir().unwrap();
    let malformed = dir.path().join("malformed.json");
    std::fs::write(&malformed, "not json").unwrap();
    assert_eq!(exit_code(&["analyze", malformed.to_str().unwrap()]), 4);
    let bad_action = dir.path().join("bad-action.json");
    std::fs::write(
        &bad_action,
        r#"{"schema": "fc-group/v1", "kind": "affine", "rank": 2,
            "finite_part": {"kind": "finite-permutation", "degree": 2, "generators": {"r": [2, 1]}},
            "action": {"r": [[1, 1], [0, 1]]}}"#,
    )
    .unwrap();
    assert_eq!(exit_code(&["analyze", bad_action.to_str().unwrap()]), 4);
    let wrong_schema = dir.path().join("wrong-schema.json");
    std::fs::write(
        &wrong_schema,
        r#"{"schema": "fc-group/v2", "kind": "finite-permutation", "degree": 1, "generators": {}}"#,
    )
    .unwrap();
    assert_eq!(exit_code(&["analyze", wrong_schema.to_str().unwrap()]), 4);

    // Validation failures: a hypothesis that fails, and an invalid chain.
    assert_eq!(exit_code(&["neumann", "dinf"]), 2);
    let bad_chain = dir.path().join("bad-chain.json");
    std::fs::write(
        &bad_chain,
        r#"{"schema": "fc-chain/v1", "kind": "nilpotent",
            "levels": [[], [[2, 1, 3]], [[2, 3, 1], [2, 1, 3]]]}"#,
    )
    .unwrap();
    // The middle level is not normal in the group.
    assert_eq!(
        exit_code(&["check-chain", "s3", "--chain", bad_chain.to_str().unwrap()]),
        2
    );
    // A chain command without a chain for a plain file.
    let plain_group = dir.path().join("plain.json");
    std::fs::write(
        &plain_group,
        r#"{"schema": "fc-group/v1", "kind": "finite-permutation", "degree": 3,
            "generators": {"r": [2, 3, 1]}}"#,
    )
    .unwrap();
    assert_eq!(exit_code(&["check-chain", plain_group.to_str().unwrap()]), 2);
    // Commands that take no chain reject one.
    assert_eq!(exit_code(&["analyze", "s3", "--chain", "s3.nilpotent"]), 2);
}

#[test]
fn the_fixture_directory_override_takes_precedence() {
    let dir = tempfile::tempdir().unwrap();
    // A renamed copy of the bundled group proves the override was read.
    let text = include_str!("../fixtures/s3.json").replace("\"s3\"", "\"s3-override\"");
    std::fs::write(dir.path().join("s3.json"), text).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_fc"))
        .args(["analyze", "s3"])
        .env("FC_FIXTURE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["inputs"]["group"]["name"], "s3-override");
    // Without the variable, the embedded corpus is used.
    let report = fc_json(&["analyze", "s3"]);
    assert_eq!(report["inputs"]["group"]["name"], "s3");
}

#[test]
fn the_output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = fc(&["tower", "dinf", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let report: Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).expect("file is a JSON report");
    assert_eq!(report["schema"], "fc-report/v1");
    assert_eq!(report["results"]["stabilizer_index"]["value"], 2);
}

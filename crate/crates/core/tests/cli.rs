//! End-to-end checks of the command-line interface: report shape,
//! determinism, and the exit-code contract.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_builder_sl2() {
    let out = run(&["check", "--builder", "sl2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["membership"]["lie"], Value::Bool(true));
    assert_eq!(v["membership"]["associative"], Value::Bool(false));
    assert_eq!(v["input"]["dim"], 3);
}

#[test]
fn check_leibniz2_flags() {
    let out = run(&["check", "--builder", "leibniz2"]);
    let v = stdout_json(&out);
    assert_eq!(v["membership"]["leibniz"], Value::Bool(true));
    assert_eq!(v["membership"]["lie"], Value::Bool(false));
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["cohomology", "--builder", "m2", "--theory", "hochschild"]);
    let b = run(&["cohomology", "--builder", "m2", "--theory", "hochschild"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["cohomology"]["summary"]["h2"], 0);
    assert_eq!(v["cohomology"]["summary"]["z2"], 13);
}

#[test]
fn equivariance_is_seed_deterministic() {
    let a = run(&["equivariance", "--seed", "7", "--dim", "2", "--trials", "3"]);
    let b = run(&["equivariance", "--seed", "7", "--dim", "2", "--trials", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["equivariance"]["all_passed"], Value::Bool(true));
    assert_eq!(v["seed"], 7);
}

#[test]
fn count_subcommands() {
    let out = run(&["count", "assoc", "10"]);
    let v = stdout_json(&out);
    assert_eq!(v["count"]["value"], 4);
    let out = run(&["count", "lie", "14", "--witnesses"]);
    let v = stdout_json(&out);
    assert_eq!(v["count"]["value"], 2);
    let witnesses = v["count"]["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 2);
}

#[test]
fn forms_report_contents() {
    let out = run(&["forms", "--builder", "sl2"]);
    let v = stdout_json(&out);
    assert_eq!(v["forms"]["killing"]["discriminant"], "-128");
    assert_eq!(v["forms"]["semisimple_lie_point"], Value::Bool(true));
    assert_eq!(v["forms"]["operator_identities_ok"], Value::Bool(true));
}

#[test]
fn rigidity_report() {
    let out = run(&["rigidity", "--builder", "split_etale", "--arg", "3", "--theory", "comm"]);
    let v = stdout_json(&out);
    assert_eq!(v["rigidity"]["verdict"]["rigid_in_moduli"], Value::Bool(true));
    assert_eq!(v["rigidity"]["verdict"]["predicted_dim"], 9);
}

#[test]
fn file_input_round_trip() {
    let dir = std::env::temp_dir().join("algvar_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl2.json");
    std::fs::write(&path, algvar::algebra::to_json("sl2", &algvar::algebra::sl2())).unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["input"]["name"], "sl2");
    assert_eq!(v["membership"]["lie"], Value::Bool(true));
}

#[test]
fn parse_error_names_the_triple_and_exits_2() {
    let dir = std::env::temp_dir().join("algvar_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"name":"bad","dim":2,"field":"rational","table":[{"i":5,"j":0,"l":0,"c":"1"}]}"#,
    )
    .unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("i=5"), "stderr should name the triple: {stderr}");
}

#[test]
fn off_variety_exits_3_and_names_residual() {
    let out = run(&["cohomology", "--builder", "leibniz2", "--theory", "ce"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("not lie"), "stderr: {stderr}");
    assert!(stderr.contains("[1, 1, 0]"), "stderr names coordinate: {stderr}");
    // leibniz2 happens to be associative, so hochschild runs fine.
    let out = run(&["cohomology", "--builder", "leibniz2", "--theory", "hochschild"]);
    assert!(out.status.success());
}

#[test]
fn missing_input_is_a_parse_error() {
    let out = run(&["check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn prime_field_mode_adds_advisory_section() {
    let out = run(&["check", "--builder", "sl2", "--field", "prime"]);
    let v = stdout_json(&out);
    assert_eq!(v["input"]["field"], "prime");
    assert_eq!(v["membership_mod_p"]["lie"], Value::Bool(true));
    // Rational default omits the advisory section.
    let out = run(&["check", "--builder", "sl2"]);
    let v = stdout_json(&out);
    assert!(v.get("membership_mod_p").is_none());
}

#[test]
fn builder_shorthand_and_errors() {
    let out = run(&["check", "--builder", "m3"]);
    let v = stdout_json(&out);
    assert_eq!(v["input"]["dim"], 9);
    let out = run(&["check", "--builder", "split_etale"]);
    assert_eq!(out.status.code(), Some(2), "missing --arg");
    let out = run(&["check", "--builder", "unknown_thing"]);
    assert_eq!(out.status.code(), Some(2));
}

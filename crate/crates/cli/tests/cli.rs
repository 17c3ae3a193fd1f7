use std::path::PathBuf;

use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn gvdkit() -> Command {
    Command::cargo_bin("gvdkit").unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let out = gvdkit().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gvd_invariants_report_both_provenances() {
    let path = data("six_variable_gvd.json");
    let v = json_of(&["gvd", "invariants", path.to_str().unwrap()]);
    assert_eq!(v["certified"], true);
    for key in ["direct", "recursion"] {
        assert_eq!(v[key]["reg"], 3, "{key}");
        assert_eq!(v[key]["e"], 8, "{key}");
        assert_eq!(v[key]["a"], -1, "{key}");
    }
    assert_eq!(v["direct"]["provenance"], "direct");
    assert_eq!(v["recursion"]["provenance"], "recursion");
    assert_eq!(v["search"]["unmixed"], "structural");
}

#[test]
fn assumed_cohen_macaulay_invariants() {
    let path = data("binomial_pair.json");
    let v = json_of(&["gvd", "invariants", path.to_str().unwrap(), "--assume-cm"]);
    assert_eq!(v["certified"], false);
    assert_eq!(v["asserted"]["combined"]["reg"], 2);
    assert_eq!(v["asserted"]["combined"]["e"], 4);
    assert_eq!(v["direct"]["cm"], "asserted");
    let weak = data("six_variable_weakly_gvd.json");
    let v = json_of(&["gvd", "invariants", weak.to_str().unwrap(), "--assume-cm"]);
    assert_eq!(v["asserted"]["combined"]["reg"], 3);
}

#[test]
fn expectations_set_the_exit_code() {
    let pair = data("binomial_pair.json");
    gvdkit()
        .args(["gvd", "check", pair.to_str().unwrap(), "--expect", "gvd"])
        .assert()
        .code(1);
    gvdkit()
        .args([
            "gvd",
            "check",
            pair.to_str().unwrap(),
            "--expect",
            "not-gvd",
        ])
        .assert()
        .success();
    let c = data("c_unsaturated_pair.json");
    gvdkit()
        .args(["gvd", "check", c.to_str().unwrap(), "--expect", "gvd"])
        .assert()
        .success();
    gvdkit()
        .args([
            "gvd",
            "check",
            c.to_str().unwrap(),
            "--c-saturated",
            "--expect",
            "gvd",
        ])
        .assert()
        .code(1);
}

#[test]
fn trace_outline() {
    let path = data("six_variable_gvd.json");
    gvdkit()
        .args(["--format", "text", "gvd", "trace", path.to_str().unwrap()])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("<y*z*s - y*x^2, y*w*r, "))
        .stdout(predicate::str::contains("split at y (nondegenerate"))
        .stdout(predicate::str::contains("  C = <"));
}

#[test]
fn graph_commands() {
    let v = json_of(&["ferrers", "--partition", "3,3,3,2"]);
    assert_eq!(v["closedForm"]["reg"], 2);
    assert_eq!(v["closedForm"]["e"], 9);
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 11);

    let v = json_of(&["grd", "--r", "3", "--d", "2", "--verify-direct"]);
    assert_eq!(
        (
            v["direct"]["reg"].as_i64(),
            v["direct"]["e"].as_i64(),
            v["direct"]["a"].as_i64()
        ),
        (Some(2), Some(5), Some(-4))
    );
    assert_eq!(v["agree"], true);

    let square = data("square.json");
    let v = json_of(&[
        "glue",
        square.to_str().unwrap(),
        "--edge",
        "e1",
        "--cycle",
        "4",
        "--verify-direct",
    ]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["graph"]["vertices"].as_array().unwrap().len(), 6);

    let v = json_of(&["toric", "build", square.to_str().unwrap()]);
    assert_eq!(v["ideal"]["generators"][0], "e1*e3 - e2*e4");
    assert_eq!(v["report"]["hilbertian"], "Hilbertian");
}

#[test]
fn simplicial_commands() {
    let tri = data("triangle_boundary.json");
    let v = json_of(&["sr", "invariants", tri.to_str().unwrap()]);
    assert_eq!(v["ideal"]["generators"][0], "x*y*z");
    assert_eq!(v["recursionReg"], 2);
    assert_eq!(v["direct"]["hilbertian"], "AlmostHilbertian");
    let rp2 = data("projective_plane.json");
    gvdkit()
        .args(["sr", "vd-check", rp2.to_str().unwrap(), "--expect-vd"])
        .assert()
        .code(1);
    gvdkit()
        .args(["sr", "vd-check", tri.to_str().unwrap(), "--expect-vd"])
        .assert()
        .success();
}

#[test]
fn input_errors_exit_with_two() {
    gvdkit()
        .args(["invariants", "/nonexistent/ideal.json"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("/nonexistent/ideal.json"));
    gvdkit()
        .args(["ferrers", "--partition", "2,3"])
        .assert()
        .code(2);
    gvdkit()
        .args(["grd", "--r", "2", "--d", "1"])
        .assert()
        .code(2);
    gvdkit()
        .args(["gvd", "check", "--unknown-flag", "x"])
        .assert()
        .code(2);
    let square = data("square.json");
    gvdkit()
        .args([
            "glue",
            square.to_str().unwrap(),
            "--edge",
            "e9",
            "--cycle",
            "4",
        ])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("e9"));
}

#[test]
fn verify_subset_and_json() {
    gvdkit()
        .args(["verify", "--only", "ferrers"])
        .assert()
        .success()
        .stdout(predicate::str::contains("[PASS]  7 ferrers"))
        .stdout(predicate::str::contains("1/1 criteria passed"));
    let v = json_of(&["verify-paper", "--only", "1,grd", "--json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
    gvdkit().args(["verify", "--only", "nope"]).assert().code(2);
}

#[test]
fn output_is_deterministic() {
    let path = data("six_variable_gvd.json");
    let run = || {
        gvdkit()
            .args(["gvd", "check", path.to_str().unwrap()])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
    let run = || {
        gvdkit()
            .args([
                "--seed",
                "7",
                "verify",
                "--only",
                "hilbert-oracle,recursion",
                "--json",
            ])
            .output()
            .unwrap()
            .stdout
    };
    let strip = |bytes: Vec<u8>| {
        let mut v: Value = serde_json::from_slice(&bytes).unwrap();
        for c in v["criteria"].as_array_mut().unwrap() {
            c["elapsedMs"] = Value::Null;
        }
        v
    };
    assert_eq!(strip(run()), strip(run()));
}

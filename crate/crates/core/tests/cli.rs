use std::process::{Command, Output};

fn spinlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinlab"))
        .args(args)
        .output()
        .expect("spinlab runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn default_check_is_green() {
    let out = spinlab(&["check", "--samples", "10"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["meta"]["prng"], "chacha8");
    assert_eq!(v["meta"]["seed"], 42);
    let ids: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["id"].as_str().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for id in [
        "clifford",
        "amplitude",
        "equivalence",
        "isotropy",
        "limit",
        "intertwining",
    ] {
        assert!(ids.contains(&id), "{id}");
    }
}

#[test]
fn unreachable_tolerance_exits_one() {
    assert_eq!(code(&spinlab(&["check", "--samples", "5", "--tol", "1e-20"])), 1);
}

#[test]
fn invalid_configuration_exits_two() {
    for args in [
        &["check", "--samples", "0"][..],
        &["check", "--mass", "-1"],
        &["check", "--format", "xml"],
        &["table2", "--tol", "0"],
        &["compare", "nw", "spin"],
        &["compare", "NW", "fw"],
        &["classify", "--alpha", "0.5 +", "--beta", "0"],
        &["classify", "--alpha", "q", "--beta", "0"],
    ] {
        assert_eq!(code(&spinlab(args)), 2, "{args:?}");
    }
}

#[test]
fn identical_seeds_give_identical_bytes() {
    let a = spinlab(&["check", "--samples", "8", "--seed", "7"]);
    let b = spinlab(&["check", "--samples", "8", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let c = spinlab(&["check", "--samples", "8", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn compare_reports_sector_verdicts() {
    let out = spinlab(&["compare", "chakrabarti", "nw", "--samples", "5"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind_a"], "chakrabarti");
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["equivalent_positive"], true);
    assert_eq!(v["sectors"].as_array().unwrap().len(), 4);
}

#[test]
fn classify_reports_families() {
    let out = spinlab(&["classify", "--alpha", "-0.5", "--beta", "1/r^2", "--samples", "5"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["sectors"][0]["family"], "FamilyII");
    assert_eq!(v["sectors"][1]["family"], "FamilyII");
}

#[test]
fn table2_markdown() {
    let out = spinlab(&["table2", "--samples", "5", "--format", "md"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# spinlab table2"));
    assert!(text.contains("| Newton-Wigner | yes | yes | yes | yes | yes | yes | yes |"));
    assert!(!text.contains('⚠'));
}

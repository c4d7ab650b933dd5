use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str], file: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirichlet"))
        .arg(args[0])
        .arg(data(file))
        .args(&args[1..])
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn charpoly_text() {
    assert_eq!(stdout(&run(&["charpoly"], "wheatstone.json")), "t^2 - 5t + 6\n");
}

#[test]
fn count_chambers_json() {
    let out = stdout(&run(&["count-chambers", "--format", "json"], "wheatstone.json"));
    assert_eq!(out.trim(), r#"{"total":12,"bounded":2}"#);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 12);
    assert_eq!(v["bounded"], 2);
}

#[test]
fn plot_path() {
    let svg = stdout(&run(&["plot"], "p4.json"));
    assert_eq!(svg.matches("<line").count(), 3);
    assert_eq!(svg.matches("<polygon").count(), 1);
    for key in ["i1-j1", "i1-i2", "i2-j2"] {
        assert!(svg.contains(&format!(">{key}</text>")), "label {key}");
    }
}

#[test]
fn validate_roundtrips() {
    let first = stdout(&run(&["validate", "--format", "json"], "p4.json"));
    let dir = std::env::temp_dir().join(format!("dirichlet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let copy = dir.join("p4.json");
    std::fs::write(&copy, &first).unwrap();
    let again = Command::new(env!("CARGO_BIN_EXE_dirichlet"))
        .args(["validate", "--format", "json"])
        .arg(&copy)
        .output()
        .unwrap();
    assert_eq!(stdout(&again), first);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_output() {
    for args in [
        &["critical-points", "--format", "json"][..],
        &["orientations", "--mode", "semicompatible", "--points", "--adjacency", "--format", "json"][..],
        &["poset", "--format", "json"][..],
    ] {
        let a = stdout(&run(args, "wheatstone.json"));
        let b = stdout(&run(args, "wheatstone.json"));
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn orientations_and_poset() {
    let v = json(&run(&["orientations", "--mode", "semicompatible", "--format", "json"], "wheatstone.json"));
    assert_eq!(v["count"], 12);
    let v = json(&run(&["orientations", "--adjacency", "--format", "json"], "wheatstone.json"));
    assert_eq!(v["count"], 2);
    assert_eq!(v["adjacency"]["edges"].as_array().unwrap().len(), 1);
    let v = json(&run(&["poset", "--format", "json"], "wheatstone.json"));
    assert_eq!(v["elements"].as_array().unwrap().len(), 10);
    assert_eq!(v["characteristic_polynomial"], "t^2 - 5t + 6");
}

#[test]
fn supersolvable_reports_witness() {
    let v = json(&run(&["supersolvable", "--format", "json"], "p4.json"));
    assert_eq!(v["supersolvable"], false);
    assert_eq!(v["chordless_cycle"].as_array().unwrap().len(), 4);
    assert!(v["weighted_elimination_ordering"].is_null());
    let v = json(&run(&["supersolvable", "--format", "json"], "wheatstone.json"));
    assert_eq!(v["supersolvable"], true);
    assert_eq!(v["weighted_elimination_ordering"].as_array().unwrap().len(), 2);
}

#[test]
fn harmonic_and_energies() {
    // conductances 1, 2, 1/2 in series: currents balance at 2/7 and 3/7
    let v = json(&run(&["harmonic", "--format", "json"], "p4.json"));
    assert_eq!(v["values"]["i1"], "2/7");
    assert_eq!(v["values"]["i2"], "3/7");
    assert_eq!(v["generic"], true);
    let v = json(&run(&["energies", "--gamma", "i1-j1=1,i1-i2=1,i2-j2=1", "--format", "json"], "p4.json"));
    assert_eq!(v["energies"]["i1-i2"], "1/9");
}

#[test]
fn critical_points_wheatstone() {
    let v = json(&run(&["critical-points", "--format", "json"], "wheatstone.json"));
    assert_eq!(v["count"], 2);
    assert_eq!(v["sdr"], true);
    let s = 5f64.sqrt().recip();
    for sol in v["solutions"].as_array().unwrap() {
        let (a, b) = (sol["point"]["i1"].as_f64().unwrap(), sol["point"]["i2"].as_f64().unwrap());
        assert!((a.abs() - s).abs() < 1e-9 && (a + b).abs() < 1e-9);
    }
}

fn error_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap()
}

#[test]
fn exit_codes() {
    let out = run(&["charpoly"], "adjacent_boundary.json");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_of(&out)["error"]["category"], "validation");

    let out = run(&["plot"], "join_2_8.json");
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["orientations", "--adjacency"], "join_2_8.json");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_of(&out)["error"]["kind"], "InstanceTooLarge");

    let out = run(&["critical-points", "--max-iter", "1"], "wheatstone.json");
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_of(&out)["error"]["category"], "convergence");

    let out = run(&["charpoly"], "missing.json");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn writes_output_file() {
    let path = std::env::temp_dir().join(format!("dirichlet-cli-out-{}.txt", std::process::id()));
    let out = run(&["charpoly", "-o", path.to_str().unwrap()], "wheatstone.json");
    assert!(stdout(&out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "t^2 - 5t + 6\n");
    std::fs::remove_file(&path).unwrap();
}

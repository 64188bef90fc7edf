use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lattice-solids"))
}

fn run(args: &[&str]) -> Output {
    bin().env_remove("LATTICE_SOLIDS_UNSAFE_ORACLE_CAP").args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn ok_text(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn triples_list_the_tier_nine_solutions() {
    let doc = ok_json(&["triples", "--dmax", "9"]);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "triples");
    let triples = doc["payload"]["triples"].as_array().unwrap();
    assert!(triples.contains(&json!({ "a": 5, "b": 7, "c": 13, "d": 9 })));
    assert!(triples.contains(&json!({ "a": 1, "b": 11, "c": 11, "d": 9 })));

    let csv = ok_text(&["triples", "--dmax", "9", "--format", "csv"]);
    assert!(csv.starts_with("d,a,b,c\n1,1,1,1\n"));
    assert!(csv.lines().any(|l| l == "9,5,7,13"));
}

#[test]
fn triples_with_dmax_one_is_a_single_record() {
    let doc = ok_json(&["triples", "--dmax", "1"]);
    assert_eq!(doc["payload"]["triples"], json!([{ "a": 1, "b": 1, "c": 1, "d": 1 }]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["triples", "--dmax", "0"][..],
        &["triples"],
        &["nonsense"],
        &["count", "--kind", "dodeca", "--n", "3"],
        &["count", "--kind", "cube", "--n", "0"],
        &["count", "--kind", "cube", "--n", "3", "--method", "guess"],
        &["count", "--kind", "cube", "--n", "3", "--jobs", "0"],
        &["build", "--triple", "1,1,1", "--mn", "1,0", "--k", "1"],
        &["build", "--triple", "1,1,1,1", "--mn", "x,0", "--k", "1"],
        &["matrix"],
        &["matrix", "--tier-reps", "3", "--tier-classes", "3"],
        &["build", "--triple", "1,1,1,1", "--mn", "1,0", "--k", "1", "--format", "csv"],
    ] {
        assert_eq!(exit_code(args), 2, "{args:?}");
    }
}

#[test]
fn count_rows_match_known_values() {
    let csv = ok_text(&["count", "--kind", "cube", "--n", "5", "--format", "csv"]);
    assert_eq!(csv.lines().last(), Some("5,229"));
    let csv = ok_text(&["count", "--kind", "octa", "--n", "2", "--format", "csv"]);
    assert_eq!(csv, "n,count\n1,0\n2,1\n");

    let doc = ok_json(&["count", "--kind", "tetra", "--n", "4"]);
    let counts: Vec<u64> = doc["payload"]["rows"].as_array().unwrap().iter().map(|r| r["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [2, 18, 72, 208]);
}

#[test]
fn count_with_oracle_reports_matches_and_refusals() {
    let doc = ok_json(&["count", "--kind", "cube", "--n", "3", "--oracle"]);
    for row in doc["payload"]["rows"].as_array().unwrap() {
        assert_eq!(row["match"], true, "{row}");
        assert_eq!(row["oracle"], row["count"]);
        assert!(row["oracle_refused"].is_null());
    }

    let out = run(&["count", "--kind", "cube", "--n", "5", "--oracle", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().last(), Some("5,229,refused,"));

    let doc = ok_json(&["count", "--kind", "tetra", "--n", "4", "--oracle"]);
    let last = &doc["payload"]["rows"][3];
    assert!(last["oracle"].is_null() && last["match"].is_null());
    assert!(last["oracle_refused"].as_str().unwrap().contains("n <= 3"));
}

#[test]
fn oracle_method_beyond_its_cap_is_a_validation_error() {
    assert_eq!(exit_code(&["count", "--kind", "cube", "--n", "5", "--method", "oracle"]), 1);
    let doc = ok_json(&["count", "--kind", "octa", "--n", "3", "--method", "oracle"]);
    assert_eq!(doc["payload"]["rows"][2]["count"], 8);
}

#[test]
fn env_override_raises_the_oracle_cap() {
    let out = bin()
        .env("LATTICE_SOLIDS_UNSAFE_ORACLE_CAP", "1")
        .args(["count", "--kind", "cube", "--n", "2", "--oracle", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,count,oracle,match\n1,1,1,true\n2,9,refused,\n");
}

#[test]
fn help_marks_the_env_override_unsafe() {
    for args in [&["--help"][..], &["count", "--help"]] {
        let text = ok_text(args);
        let at = text.find("LATTICE_SOLIDS_UNSAFE_ORACLE_CAP").expect("env var documented");
        assert!(text[at..].contains("UNSAFE"), "{args:?}");
    }
}

#[test]
fn jobs_do_not_change_the_output() {
    let one = ok_text(&["count", "--kind", "octa", "--n", "7", "--jobs", "1"]);
    let four = ok_text(&["count", "--kind", "octa", "--n", "7", "--jobs", "4"]);
    let default = ok_text(&["count", "--kind", "octa", "--n", "7"]);
    assert_eq!(one, four);
    assert_eq!(one, default);
}

#[test]
fn every_command_is_byte_deterministic() {
    let cube = write_tmp("det-cube.json", "[[1,4,3],[3,3,1],[1,1,0],[-1,2,2],[2,2,5],[4,1,3],[2,-1,2],[0,0,4]]");
    let cube = cube.to_str().unwrap();
    for args in [
        &["triples", "--dmax", "21"][..],
        &["omega", "--k", "7"],
        &["count", "--kind", "cube", "--n", "6", "--method", "frames"],
        &["build", "--triple", "5,-7,13,9", "--mn", "3,0", "--k", "3", "--cube", "--octa"],
        &["matrix", "--from-cube", cube],
        &["matrix", "--tier-classes", "13", "--format", "csv"],
        &["strategies"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn build_reproduces_the_unit_tetrahedron_and_cube() {
    let doc = ok_json(&["build", "--triple", "1,1,1,1", "--mn", "1,0", "--k", "1", "--rs", "1,1", "--cube"]);
    let p = &doc["payload"];
    assert_eq!(p["tetrahedra"][0]["vertices"], json!([[0, 0, 0], [-1, 0, 1], [-1, 1, 0], [0, 1, 1]]));
    assert_eq!(p["cubes"][0]["side"], 1);
    let mut cube: Vec<Value> = p["cubes"][0]["vertices"].as_array().unwrap().clone();
    cube.sort_by_key(|v| v.to_string());
    let mut want = Vec::new();
    for x in [-1, 0] {
        for y in [0, 1] {
            for z in [0, 1] {
                want.push(json!([x, y, z]));
            }
        }
    }
    want.sort_by_key(|v| v.to_string());
    assert_eq!(cube, want);

    // Default (r, s) gives another unit tetrahedron in the same plane.
    let doc = ok_json(&["build", "--triple", "1,1,1,1", "--mn", "1,0", "--k", "1", "--cube", "--octa"]);
    let p = &doc["payload"];
    assert_eq!(p["rs"], json!({ "r": 0, "s": 2, "q": 2 }));
    assert_eq!(p["tetrahedra"].as_array().unwrap().len(), 1);
    assert_eq!(p["tetrahedra"][0]["side_sq"], 2);
    assert_eq!(p["cubes"][0]["side"], 1);
    assert_eq!(p["octahedra"][0]["edge_sq"], 2);
    assert!(p.get("cubes").is_some() && p["cubes"][0]["irreducible"] == true);
}

#[test]
fn build_outside_omega_names_the_violation() {
    let out = run(&["build", "--triple", "1,1,1,1", "--mn", "1,0", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not in Omega(2)"), "{err}");

    assert_eq!(exit_code(&["build", "--triple", "1,1,1,2", "--mn", "1,0", "--k", "1"]), 1);
    assert_eq!(exit_code(&["build", "--triple", "1,1,1,1", "--mn", "0,0", "--k", "1"]), 1);
    assert_eq!(exit_code(&["build", "--triple", "1,1,1,1", "--mn", "1,0", "--k", "1", "--rs", "0,1"]), 1);
}

#[test]
fn build_with_k_divisible_by_three_reports_two_tetrahedra() {
    let doc = ok_json(&["build", "--triple", "1,1,1,1", "--mn", "3,0", "--k", "3", "--cube"]);
    let tets = doc["payload"]["tetrahedra"].as_array().unwrap();
    assert_eq!(tets.len(), 2);
    assert_eq!(tets[0]["sign"], "+");
    assert_eq!(tets[1]["sign"], "-");
    assert_eq!(doc["payload"]["cubes"].as_array().unwrap().len(), 2);
}

#[test]
fn matrix_from_unit_cube_is_the_identity() {
    let path = write_tmp("unit-cube.json", "[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,1]]");
    let doc = ok_json(&["matrix", "--from-cube", path.to_str().unwrap()]);
    assert_eq!(doc["payload"]["matrix"], json!([["1/1", "0/1", "0/1"], ["0/1", "1/1", "0/1"], ["0/1", "0/1", "1/1"]]));
    assert_eq!(doc["payload"]["tier"], 1);
    assert_eq!(doc["payload"]["determinant"], "1/1");
}

#[test]
fn matrix_from_a_tier_three_cube() {
    let path = write_tmp("fig-cube.json", "[[1,4,3],[3,3,1],[1,1,0],[-1,2,2],[2,2,5],[4,1,3],[2,-1,2],[0,0,4]]");
    let doc = ok_json(&["matrix", "--from-cube", path.to_str().unwrap(), "--rotation"]);
    let p = &doc["payload"];
    assert_eq!(p["tier"], 3);
    assert_eq!(p["orthogonal"], true);
    assert_eq!(p["determinant"], "1/1");
    assert_eq!(p["cube"]["side"], 3);
    let csv = ok_text(&["matrix", "--from-cube", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.lines().skip(1).all(|l| l.split(',').all(|e| e.ends_with("/3"))));
}

#[test]
fn matrix_rejects_non_cubes() {
    let cases = [
        ("not-cube.json", "[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,2]]"),
        ("seven.json", "[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1]]"),
        ("fraction.json", "[[0,0,0.5],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,1]]"),
        ("garbage.json", "cube"),
    ];
    for (name, text) in cases {
        let path = write_tmp(name, text);
        assert_eq!(exit_code(&["matrix", "--from-cube", path.to_str().unwrap()]), 1, "{name}");
    }
    assert_eq!(exit_code(&["matrix", "--from-cube", "/definitely/not/here.json"]), 1);
}

#[test]
fn tier_representations() {
    let doc = ok_json(&["matrix", "--tier-reps", "9"]);
    assert_eq!(doc["payload"]["representations"], json!([[1, 11, 11], [5, 7, 13]]));
    let doc = ok_json(&["matrix", "--tier-reps", "1"]);
    assert_eq!(doc["payload"]["representations"], json!([[1, 1, 1]]));
    let doc = ok_json(&["matrix", "--tier-classes", "13"]);
    assert_eq!(doc["payload"]["classes"].as_array().unwrap().len(), 2);
    assert_eq!(doc["payload"]["matrices"], 672);
}

#[test]
fn omega_and_strategies() {
    let doc = ok_json(&["omega", "--k", "7"]);
    let pairs = doc["payload"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 18);
    assert!(pairs.contains(&json!([8, 3])));
    let csv = ok_text(&["strategies", "--format", "csv"]);
    let names: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(names, ["constructive", "frames", "oracle"]);
}

#[test]
fn large_integers_are_printed_in_full() {
    let big = "1000000000000000000000000001";
    let doc = ok_text(&["build", "--triple", "1,1,1,1", "--mn", &format!("{big},0"), "--k", big]);
    assert!(!doc.contains("e+") && !doc.contains("E+"), "no exponent notation");
    let v: Value = serde_json::from_str(&doc).unwrap();
    assert_eq!(v["params"]["k"].to_string(), big);
    assert!(doc.contains(&format!("-{big}")));
}

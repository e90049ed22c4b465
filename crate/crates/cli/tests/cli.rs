use std::io::Write;
use std::process::{Command, Output};

use quartics_cli::{registry, run_check, run_selected, RunConfig, Status, SCHEMA_VERSION};
use serde_json::Value;

fn quartics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartics")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = quartics(&all);
    let v =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().expect("exit code"), v)
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("quartics-cli-{}-{name}", std::process::id()));
    std::fs::File::create(&path).and_then(|mut f| f.write_all(text.as_bytes())).expect("temp file");
    path
}

#[test]
fn diophantine_lists_three_profiles_for_tau_37() {
    let (code, v) = json(&["diophantine", "--tau", "37"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    let profiles = v["result"]["profiles"].as_array().unwrap();
    assert_eq!(profiles.len(), 3);
    for p in profiles {
        assert_eq!(p["tau"], 37);
    }
}

#[test]
fn combinatorics_check_passes_with_versioned_json() {
    let (code, v) = json(&["check", "combinatorics28"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["results"][0]["name"], "combinatorics28");
    assert_eq!(v["results"][0]["status"], "pass");
}

#[test]
fn combinatorics_of_the_28_lines() {
    let (code, v) = json(&["combinatorics", "bitangents28"]);
    assert_eq!(code, 0);
    let counts = &v["result"]["counts"];
    assert_eq!((counts["2"].as_u64(), counts["3"].as_u64(), counts["4"].as_u64()), (Some(240), Some(32), Some(7)));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = quartics(&["check", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("combinatorics28"));
}

#[test]
fn missing_input_is_a_usage_error() {
    let out = quartics(&["invariants", "/nonexistent/curve"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no such file or fixture"));
}

#[test]
fn short_line_row_reports_its_line_number() {
    let path = temp_file("short.lines", "field: Q\n1, 0, 0\n1, 2\n");
    let out = quartics(&["combinatorics", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3: expected 3 coefficients, found 2"));
}

#[test]
fn syntax_error_reports_its_position() {
    let path = temp_file("bad.curve", "field: Q\nvars: x, y, z\nx^4 + * y\n");
    let out = quartics(&["invariants", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 7"));
}

#[test]
fn hessian_of_the_generic_quartic_has_ten_coefficients() {
    let (code, v) = json(&["hessian", "generic"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["coefficients"].as_array().map(Vec::len), Some(10));
}

#[test]
fn file_input_matches_the_fixture() {
    let path = temp_file("c9.curve", "field: Q\nvars: x, y, z\nz^4 + z*y^3 + y*x^3\n");
    let (code, from_file) = json(&["tjurina", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    let (_, from_fixture) = json(&["tjurina", "c9"]);
    assert_eq!(code, 0);
    assert_eq!(from_file["result"]["value"], 0);
    assert_eq!(from_file["result"], from_fixture["result"]);
}

#[test]
fn modular_tjurina_does_not_depend_on_prime_size_or_seed() {
    let mut values = Vec::new();
    for (bits, seed) in [("16", "7"), ("24", "7"), ("24", "1234")] {
        let (code, v) = json(&["tjurina", "dual12", "--field-mode", "modular", "--prime-bits", bits, "--seed", seed]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["agreed"], true);
        values.push(v["result"]["value"].clone());
    }
    assert_eq!(values, vec![Value::from(80); 3]);
}

#[test]
fn modular_and_exact_tjurina_agree() {
    let (_, exact) = json(&["tjurina", "dual12", "--field-mode", "exact"]);
    let (_, modular) = json(&["tjurina", "dual12", "--field-mode", "modular"]);
    assert_eq!(exact["result"]["mode"], "exact");
    assert_eq!(exact["result"]["value"], modular["result"]["value"]);
}

#[test]
fn check_list_names_every_registered_check() {
    let out = quartics(&["check", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), registry().len());
    for c in registry() {
        assert!(text.contains(c.name));
    }
}

#[test]
fn run_check_rejects_unknown_names() {
    let err = run_check("nope", &RunConfig::default()).unwrap_err();
    assert!(err.contains("unknown check"));
}

#[test]
fn parallel_runs_keep_registration_order() {
    let checks = &registry()[..4];
    let s = run_selected(checks, &RunConfig { jobs: 4, ..RunConfig::default() });
    let names: Vec<_> = s.results.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, checks.iter().map(|c| c.name).collect::<Vec<_>>());
    assert_eq!((s.passed, s.failed), (4, 0));
    assert!(s.results.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn c48_is_smooth_with_mdr_3_and_not_free() {
    let (code, v) = json(&["invariants", "c48"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["degree"], 4);
    assert_eq!(v["result"]["euler_relation"], true);
    let report = &v["result"]["freeness"]["report"];
    assert_eq!((report["mdr"].as_u64(), report["tau"].as_u64()), (Some(3), Some(0)));
    assert_eq!(report["free"], false);

    let (_, freeness) = json(&["freeness", "c48"]);
    assert_eq!(&freeness["result"]["report"], report);
}

#[test]
fn mdr_table_lists_syzygy_dimensions() {
    let (code, v) = json(&["mdr", "c48", "--table", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["mdr"], 3);
    let dims: Vec<(u64, u64)> = v["result"]["syzygy_dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_u64().unwrap(), p[1].as_u64().unwrap()))
        .collect();
    assert_eq!(dims, [(0, 0), (1, 0), (2, 0), (3, 3), (4, 9)]);
}

#[test]
fn flexes_and_tangency_of_c48() {
    let (code, flexes) = json(&["flexes", "c48"]);
    assert_eq!(code, 0);
    assert_eq!(flexes["result"]["hyperflex_count"], 4);
    assert_eq!(flexes["result"]["pattern"].as_array().unwrap().iter().map(|m| m.as_u64().unwrap()).sum::<u64>(), 24);

    let (code, tangency) = json(&["tangency", "c48", "bitangents28"]);
    assert_eq!(code, 0);
    let r = &tangency["result"];
    assert_eq!((r["bitangents"].as_u64(), r["hyperflexes"].as_u64()), (Some(24), Some(4)));
    let dual = &r["dual_singularities"];
    assert_eq!((dual["nodes"].as_u64(), dual["cusps"].as_u64(), dual["e6"].as_u64()), (Some(24), Some(16), Some(4)));
}

#[test]
fn dual_curve_vanishes_on_the_gradient_image() {
    let (code, v) = json(&["dual-check", "c48", "dual12"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["result"]["cofactor_degree"], 32);
}

#[test]
fn thm23_passes_every_stage() {
    let (code, v) = json(&["thm23"]);
    assert_eq!(code, 0);
    let stages = v["result"]["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 5);
    assert!(stages.iter().all(|s| s["status"] == "pass"), "{stages:?}");
}

#[test]
fn default_deletion_study_finds_no_free_septic() {
    let (code, v) = json(&["deletion-study"]);
    assert_eq!(code, 0);
    let deletions = v["result"]["deletions"].as_array().unwrap();
    let removed: Vec<u64> = deletions.iter().map(|d| d["removed"].as_u64().unwrap()).collect();
    assert_eq!(removed, [25, 26, 27, 28]);
    assert!(deletions.iter().all(|d| d["report"]["free"] == false && d["report"]["degree"] == 7));
}

#[test]
fn deletion_of_a_missing_line_is_a_usage_error() {
    let out = quartics(&["deletion-study", "--select", "29"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no line number 29"));
}

#[test]
fn text_output_is_line_oriented() {
    let out = quartics(&["combinatorics", "bitangents28"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().any(|l| l.starts_with("ordinary_tjurina: 431")), "{text}");
}

use std::process::{Command, Output};

use serde_json::Value;

fn ramlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramlab")).args(args).env_remove("RAMLAB_PRECISION").output().unwrap()
}

fn scenario(name: &str) -> String {
    format!("{}/scenarios/{}", env!("CARGO_MANIFEST_DIR"), name)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["--format", "json", "run", &scenario("good-reduction-2-2.json")];
    let (a, b) = (ramlab(&args), ramlab(&args));
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let report = json(&a);
    assert_eq!(report["schema"], "ramlab.report/1");
    assert!(report["claims"].as_array().unwrap().iter().all(|c| c["status"] == "match"));
}

#[test]
fn config_format_and_claims() {
    let out = ramlab(&["run", &scenario("genus2-type-ii.json")]);
    assert!(out.status.success());
    let report = json(&out);
    let claim = report["claims"].as_array().unwrap().iter().find(|c| c["id"] == "tf.slope-denominator").unwrap();
    assert_eq!(claim["computed"], 8);
    assert_eq!(claim["anchor"], "genus2.type-ii.slope");
}

#[test]
fn subcommands_render_text() {
    let out = ramlab(&["filtration", "product", "--a", "q8-1-3", "--b", "q8-5-69"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("product.upper") && text.trim_end().ends_with("ok"), "{}", text);
    let out = ramlab(&["--format", "json", "filtration", "psi", "--profile", "q8-1-3", "--at", "3/2"]);
    assert_eq!(json(&out)["claims"][0]["computed"], 3);
}

#[test]
fn exit_codes() {
    let out = ramlab(&["--precision", "2", "analyze", "good-reduction", "--p", "2", "--n", "1", "--f-ur", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hint:"));
    let out = ramlab(&["group", "info", "--name", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ramlab(&["run", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
    let inline = r#"{"group":"G","mode":"lower","breaks":[[1,"G",8],[3,"Z",2]]}"#;
    let out = ramlab(&["filtration", "phi", "--profile", inline, "--at", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn low_precision_errors_instead_of_mismatching() {
    for n in 1..=6 {
        let n = n.to_string();
        let out = ramlab(&["--precision", &n, "analyze", "good-reduction", "--p", "3", "--n", "1", "--f-ur", "1"]);
        let code = out.status.code();
        assert!(code == Some(0) || code == Some(2), "precision {}: exit {:?}", n, code);
    }
}

#[test]
fn sample_scenarios_parse() {
    let dir = format!("{}/scenarios", env!("CARGO_MANIFEST_DIR"));
    let mut n = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        ramlab::ScenarioConfig::load(path.to_str().unwrap()).unwrap_or_else(|e| panic!("{}: {}", path.display(), e));
        n += 1;
    }
    assert!(n >= 5);
}

#[test]
fn data_table_loads_as_dims() {
    let data = format!("{}/data/elliptic_fixed_dims.json", env!("CARGO_MANIFEST_DIR"));
    let out = ramlab(&["--format", "json", "conductor", "swan", "--profile", "q8-1-3", "--dims", &data]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["details"]["conductor"]["sw"], 3);
}

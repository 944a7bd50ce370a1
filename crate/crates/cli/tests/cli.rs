use std::path::PathBuf;
use std::process::{Command, Output};

use jsonschema::{Registry, Validator};
use serde_json::Value;

fn ordlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordlab"))
        .args(args)
        .output()
        .expect("ordlab runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = ordlab(&all);
    let v = serde_json::from_str(stdout(&o).trim()).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn load(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(schema_dir().join(name)).unwrap()).unwrap()
}

const BASE: &str = "file:///schemas/";

fn validator(name: &str) -> Validator {
    let registry = Registry::new()
        .add(format!("{BASE}coloring.schema.json"), load("coloring.schema.json"))
        .unwrap()
        .prepare()
        .unwrap();
    jsonschema::options()
        .with_base_uri(BASE)
        .with_registry(&registry)
        .build(&load(name))
        .unwrap()
}

fn assert_valid(v: &Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{doc}: {errors:?}");
}

#[test]
fn documented_examples() {
    let o = ordlab(&["ph", "2", "2", "1", "3"]);
    assert_eq!(stdout(&o).trim(), "Holds");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&ordlab(&["fgh", "w", "1"])).trim(), "7");
    assert_eq!(stdout(&ordlab(&["fseq", "w^w", "3"])).trim(), "w^4");
}

#[test]
fn exit_codes() {
    assert_eq!(ordlab(&["ord", "cmp", "w", "5"]).status.code(), Some(0));
    assert_eq!(ordlab(&["fgh", "w^w", "3"]).status.code(), Some(2));
    assert_eq!(ordlab(&["--steps", "10", "fgh", "w*2", "2"]).status.code(), Some(2));
    assert_eq!(ordlab(&["fgh", "w+", "1"]).status.code(), Some(1));
    assert_eq!(ordlab(&["nonsense"]).status.code(), Some(1));
    assert_eq!(ordlab(&[]).status.code(), Some(1));
    assert_eq!(ordlab(&["--bits", "0", "fgh", "1", "1"]).status.code(), Some(1));
    assert_eq!(ordlab(&["props", "no-such-suite"]).status.code(), Some(1));
    assert_eq!(ordlab(&["--help"]).status.code(), Some(0));
    assert_eq!(ordlab(&["--version"]).status.code(), Some(0));
}

#[test]
fn parse_errors_show_grammar_and_position() {
    let o = ordlab(&["ord", "eval", "w^(w+"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 5"), "{err}");
    assert!(err.contains("ordinal :="), "{err}");
    let (v, code) = json(&["ord", "eval", "w^(w+"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["position"], 5);
}

#[test]
fn outputs_match_schema() {
    let v = validator("cli_output.schema.json");
    let cases: &[&[&str]] = &[
        &["ord", "eval", "w^w+3"],
        &["ord", "cmp", "w^2", "w*5"],
        &["ord", "encode", "w^(w+1)*2"],
        &["ord", "decode", "0,1,2,3,3"],
        &["fseq", "w_3", "2"],
        &["step", "w", "1", "0"],
        &["step", "w^w", "1", "w^2"],
        &["step", "3", "0", "5"],
        &["fgh", "w", "1"],
        &["fgh", "w^w", "3"],
        &["feps", "0"],
        &["inv", "1000"],
        &["diamond", "3"],
        &["slowh", "1", "3"],
        &["pair", "3", "4"],
        &["unpair", "32"],
        &["unpair", "32", "--proof-shape"],
        &["ph", "2", "2", "1", "3"],
        &["ph", "2", "3", "1", "4"],
        &["--nodes", "1", "ph", "3", "3", "2", "8"],
        &["sigma", "1", "2"],
        &["minwit", "2", "3", "1"],
        &["chain", "16"],
        &["props", "pairing"],
        &["fgh", "w+", "1"],
    ];
    for args in cases {
        let (doc, _) = json(args);
        assert_valid(&v, &doc);
        if doc.get("error").is_none() {
            assert!(doc["timing"]["wall_ms"].is_number(), "{doc}");
        }
    }
}

#[test]
fn trace_lines_match_schema() {
    let v = validator("trace_record.schema.json");
    let o = ordlab(&["--trace", "fgh", "w+1", "1"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    let (result, records) = lines.split_last().unwrap();
    assert!(!records.is_empty());
    for (i, line) in records.iter().enumerate() {
        let doc: Value = serde_json::from_str(line).unwrap();
        assert_valid(&v, &doc);
        assert_eq!(doc["step"], i as u64 + 1);
    }
    assert_eq!(*result, stdout(&ordlab(&["fgh", "w+1", "1"])).trim());
}

#[test]
fn colorings_match_schema() {
    let v = validator("coloring.schema.json");
    let (doc, _) = json(&["ph", "2", "3", "1", "4"]);
    assert_eq!(doc["verdict"], "fails");
    assert_valid(&v, &doc["witness"]);
    let (doc, _) = json(&["sigma", "2", "2"]);
    assert_valid(&v, &doc["below"]);
}

#[test]
fn flags_override_config_file() {
    let dir = std::env::temp_dir().join(format!("ordlab-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, r#"{"max_steps": 3, "output": "json"}"#).unwrap();
    let path = cfg.to_str().unwrap();
    let o = ordlab(&["--config", path, "fgh", "3", "1"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["result"], "step-limit");
    let o = ordlab(&["--config", path, "--steps", "1000", "fgh", "3", "1"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], "2047");
    std::fs::write(&cfg, r#"{"max_step": 5}"#).unwrap();
    assert_eq!(ordlab(&["--config", path, "fgh", "3", "1"]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn large_numbers_are_elided_unless_full() {
    let short = stdout(&ordlab(&["pair", "1", &"9".repeat(1300)]));
    assert!(short.trim().starts_with("~2^"), "{short}");
    let full = stdout(&ordlab(&["--full", "pair", "1", &"9".repeat(1300)]));
    assert!(full.trim().chars().all(|c| c.is_ascii_digit()));
}

#[test]
fn props_suite_runs_clean() {
    let (v, code) = json(&["props", "roundtrip", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["seed"], 7);
}

#[test]
fn sigma_matches_checked_in_artifact() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../artifacts/sigma_2_2.json");
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let (fresh, _) = json(&["sigma", "2", "2"]);
    assert_eq!(fresh["N"], stored["N"]);
    assert_eq!(fresh["search_hash"], stored["search_hash"]);
}

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value as Json;
use semiunital_cli::{dump, parse_structure, Context, InputError, Item};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> (i32, Json) {
    let out = Command::new(env!("CARGO_BIN_EXE_semiunital")).args(args).output().unwrap();
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap_or(Json::Null))
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn ragged_rows_point_at_their_key() {
    let text = "{\n  \"kind\": \"semiring\",\n  \"size\": 2,\n  \"mul\": [[0, 0], [0, 1]],\n  \"add\": [[0, 1], [1]]\n}";
    match parse_structure(text, &mut Context::default()) {
        Err(InputError::Syntax { line, column, message }) => {
            assert_eq!((line, column), (5, 3));
            assert!(message.contains("ragged"), "{message}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn distributivity_faults_carry_a_witness() {
    let text = r#"{"kind":"semiring","size":3,"add":[[0,1,2],[1,2,2],[2,2,2]],"mul":[[0,0,0],[0,1,2],[0,2,1]]}"#;
    match parse_structure(text, &mut Context::default()) {
        Err(InputError::Semantic(r)) => assert_eq!(r.witness.len(), 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn builtin_bases_dump_as_tables() {
    let text = std::fs::read_to_string(data("plane-algebra.json")).unwrap();
    let item = parse_structure(&text, &mut Context::default()).unwrap();
    assert!(matches!(item, Item::SemiunitalSemiring(_)));
    let d = dump(&item);
    assert_eq!(d["base"]["kind"], "semiring");
    assert_eq!(d["maps"]["eta"], serde_json::json!([0, 1]));
}

#[test]
fn files_share_a_variety_per_base() {
    let mut ctx = Context::default();
    let a = std::fs::read_to_string(data("z2-algebra.json")).unwrap();
    let c = std::fs::read_to_string(data("z2-coring.json")).unwrap();
    let (Item::SemiunitalSemiring(a), Item::SemicounitalSemicoring(c)) =
        (parse_structure(&a, &mut ctx).unwrap(), parse_structure(&c, &mut ctx).unwrap())
    else {
        panic!("unexpected kinds");
    };
    assert!(std::sync::Arc::ptr_eq(&a.variety, &c.variety));
}

#[test]
fn tensor_of_z2_with_itself_is_z2() {
    let (code, r) = run(&["tensor", &path("z2.json"), &path("z2.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["size"], 2);
}

#[test]
fn reflecting_boolean_gives_a_point() {
    let (code, r) = run(&["reflect", &path("boolean.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["reflected"]["size"], 1);
    assert_eq!(r["outputs"]["kernel"], serde_json::json!([0, 1]));
}

#[test]
fn strict_reports_both_variants() {
    let (code, r) = run(&["check", "--suite", "semiring", "--strict", &path("plane-algebra.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["laws"].as_array().unwrap().len(), 2);
}

#[test]
fn out_flag_writes_the_report() {
    let target = std::env::temp_dir().join(format!("semiunital-out-{}.json", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_semiunital"))
        .args(["validate", &path("z2.json"), "--out", &target.display().to_string()])
        .output()
        .unwrap();
    assert!(out.stdout.is_empty());
    let r: Json = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    std::fs::remove_file(&target).ok();
    assert_eq!(r["exit"], 0);
}

#[test]
fn timings_only_when_asked() {
    let (_, r) = run(&["sweedler", &path("diagonal.json")]);
    assert!(r.get("timings").is_none());
    let (_, r) = run(&["sweedler", &path("diagonal.json"), "--timing"]);
    assert!(r["timings"]["sweedler"].is_number());
}

#[test]
fn unknown_arguments_exit_with_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_semiunital")).args(["check", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

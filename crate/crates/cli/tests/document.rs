use std::collections::BTreeMap;
use std::path::Path;

use proptest::prelude::*;
use sepkit::doc::{AlgebraDef, Cell, CertificateDef, Expect, HomDef, SpecDocument, Task, TaskArgs};
use sepkit::{parse_spec, run_tasks, CliError, Outcome, Verdict, DEFAULT_LIMIT};

fn golden_inputs() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut v: Vec<(String, String)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| !p.to_string_lossy().ends_with(".expected.json"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    v.sort();
    v
}

fn input_error(text: &str) -> String {
    match parse_spec(text) {
        Err(CliError::Input(msg)) => msg,
        other => panic!("expected an input error, got {other:?}"),
    }
}

#[test]
fn golden_documents_round_trip() {
    for (name, text) in golden_inputs() {
        let doc: SpecDocument = serde_json::from_str(&text).unwrap();
        let again: SpecDocument = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(doc, again, "{name}");
    }
}

#[test]
fn parse_errors_carry_a_location() {
    let msg = input_error("{\n  \"field\": \"GF(2)\",\n  \"tasks\": [\n    { \"op\": \"check-algebra\", \"argz\": {} }\n  ]\n}");
    assert!(msg.contains("argz") && msg.contains("line 4"), "{msg}");
    let msg = input_error("{ \"field\": \"GF(2)\", ");
    assert!(msg.contains("line 1"), "{msg}");
}

#[test]
fn names_are_unique_across_kinds() {
    let msg = input_error(
        r#"{ "field": "GF(2)",
             "definitions": { "algebras": { "x": { "preset": "ground" } },
                              "coalgebras": { "x": { "preset": "ground" } } } }"#,
    );
    assert!(msg.contains("'x'"), "{msg}");
}

#[test]
fn shapes_are_checked() {
    let msg = input_error(
        r#"{ "field": "Q",
             "definitions": { "algebras": { "k": { "preset": "ground" }, "m": { "preset": "matrix", "n": 2 } },
                              "homs": { "h": { "source": "k", "target": "m", "matrix": [["1", "0", "0"]] } } } }"#,
    );
    assert!(msg.contains("hom 'h'") && msg.contains("4x1"), "{msg}");
    let msg = input_error(r#"{ "field": "GF(5)", "definitions": { "algebras": { "a": { "dim": 1, "mult": [["1"]], "unit": ["x"] } } } }"#);
    assert!(msg.contains("algebra 'a'"), "{msg}");
}

#[test]
fn task_references_resolve_before_running() {
    let msg = input_error(r#"{ "field": "GF(2)", "tasks": [{ "op": "check-entwining", "args": { "entwining": "e" } }] }"#);
    assert!(msg.contains("undeclared entwining 'e'"), "{msg}");
    let doc: SpecDocument = serde_json::from_str(
        r#"{ "field": "GF(2)",
             "definitions": { "algebras": { "k": { "preset": "ground" } } },
             "tasks": [{ "op": "check-algebra", "args": { "algebra": "k" }, "expect": "empty" }] }"#,
    )
    .unwrap();
    assert!(matches!(run_tasks(&doc, None, DEFAULT_LIMIT), Err(CliError::Input(_))));
}

#[test]
fn searches_over_q_are_input_errors() {
    let doc: SpecDocument = serde_json::from_str(
        r#"{ "field": "Q",
             "definitions": { "algebras": { "k": { "preset": "ground" } },
                              "homs": { "h": { "source": "k", "target": "k", "preset": "identity" } } },
             "tasks": [{ "op": "solve-idempotent", "args": { "phi": "h" } }] }"#,
    )
    .unwrap();
    let err = run_tasks(&doc, None, DEFAULT_LIMIT).unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn every_failing_task_has_a_witness() {
    for (name, text) in golden_inputs() {
        let Ok(doc) = parse_spec(&text) else { continue };
        let report = match run_tasks(&doc, None, DEFAULT_LIMIT) {
            Ok(r) => r,
            Err(_) => continue,
        };
        for t in &report.tasks {
            if t.verdict == Verdict::Fail || t.outcome == Outcome::Fail {
                assert!(t.conditions.iter().any(|c| !c.passed && !c.witnesses.is_empty()), "{name} task {}", t.index);
            }
        }
    }
}

fn cell() -> impl Strategy<Value = Cell> {
    prop_oneof![
        (-5i64..5).prop_map(Cell::Int),
        (-5i64..5, 1i64..4).prop_map(|(n, d)| Cell::Text(format!("{n}/{d}"))),
    ]
}

fn name() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,5}"
}

fn algebra_def() -> impl Strategy<Value = AlgebraDef> {
    prop_oneof![
        (prop::sample::select(vec!["ground", "matrix", "gaussian", "dual_numbers"]), prop::option::of(1usize..3))
            .prop_map(|(p, n)| AlgebraDef { preset: Some(p.to_string()), n, ..AlgebraDef::default() }),
        (1usize..3).prop_flat_map(|d| {
            (prop::collection::vec(prop::collection::vec(cell(), d * d), d), prop::collection::vec(cell(), d)).prop_map(
                move |(mult, unit)| AlgebraDef { dim: Some(d), mult: Some(mult), unit: Some(unit), ..AlgebraDef::default() },
            )
        }),
    ]
}

fn task() -> impl Strategy<Value = Task> {
    (
        prop::sample::select(sepkit::OPS.to_vec()),
        prop::option::of(name()),
        prop::option::of(0u64..1000),
        prop::option::of(prop::sample::select(vec![Expect::Pass, Expect::Fail, Expect::Empty, Expect::Nonempty])),
    )
        .prop_map(|(op, algebra, limit, expect)| Task { op: op.to_string(), args: TaskArgs { algebra, limit, ..TaskArgs::default() }, expect })
}

fn document() -> impl Strategy<Value = SpecDocument> {
    (
        prop::sample::select(vec!["Q", "GF(2)", "GF(7)"]),
        prop::collection::btree_map(name(), algebra_def(), 0..4),
        prop::collection::btree_map(name(), (name(), name(), prop::option::of(prop::collection::vec(prop::collection::vec(cell(), 2), 2))), 0..3),
        prop::collection::btree_map(name(), (name(), name(), prop::collection::vec(prop::collection::vec(cell(), 2), 1)), 0..2),
        prop::collection::vec(task(), 0..4),
    )
        .prop_map(|(field, algebras, homs, certs, tasks)| {
            let mut doc = SpecDocument { field: field.to_string(), definitions: Default::default(), certificates: BTreeMap::new(), tasks };
            doc.definitions.algebras = algebras;
            doc.definitions.homs = homs
                .into_iter()
                .map(|(n, (source, target, matrix))| {
                    let preset = if matrix.is_none() { Some("identity".to_string()) } else { None };
                    (n, HomDef { source, target, preset, matrix })
                })
                .collect();
            doc.certificates = certs
                .into_iter()
                .map(|(n, (phi, psi, matrix))| (n, CertificateDef::Retraction { phi, psi, matrix }))
                .collect();
            doc
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip(doc in document()) {
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let again: SpecDocument = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&doc, &again);
        prop_assert_eq!(serde_json::to_string_pretty(&again).unwrap(), text);
    }
}

use super::*;
use crate::error::Error;
use crate::pscolim::verify_main_theorem;
use crate::seeds;
use crate::Budget;

const SEED_FILES: [(&str, &str); 6] = [
    ("seed1", include_str!("../../seeds/seed1.toml")),
    ("seed2", include_str!("../../seeds/seed2.toml")),
    ("seed3", include_str!("../../seeds/seed3.toml")),
    ("seed4", include_str!("../../seeds/seed4.toml")),
    ("seed5", include_str!("../../seeds/seed5.toml")),
    ("seed6", include_str!("../../seeds/seed6.toml")),
];

fn opts() -> RunOptions {
    RunOptions {
        budget: Budget::default(),
        dot_dir: None,
    }
}

#[test]
fn bundled_seed_files_match_builtin_seeds() {
    for ((name, text), s) in SEED_FILES.iter().zip(seeds::all_seeds()) {
        assert_eq!(*name, s.name);
        let spec = parse_spec(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(*spec.functors["E"] == *s.e, "{name}: E differs");
        assert!(*spec.functors["W"] == *s.w, "{name}: W differs");
    }
}

#[test]
fn empty_document_has_no_blocks() {
    for text in ["", "version = 1\n"] {
        match parse_spec(text) {
            Err(Error::Parse { message, .. }) => assert_eq!(message, "no blocks"),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn undefined_functor_is_unresolved_with_position() {
    let text = "[categories.c]\nbuiltin = \"terminal\"\n\n[[jobs]]\ncommand = \"pscolim\"\ne = \"E\"\nw = \"W\"\n";
    let err = parse_spec(text).unwrap_err();
    assert!(matches!(err.root(), Error::Unresolved { name, .. } if name == "E"), "{err}");
    match err {
        Error::At { line, .. } => assert!(line >= 4, "{line}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_fields_are_rejected_with_position() {
    let text = "[categories.c]\nbuiltin = \"terminal\"\ncolour = \"red\"\n";
    match parse_spec(text) {
        Err(Error::Parse { line, message, .. }) => {
            assert_eq!(line, 3);
            assert!(message.contains("colour"), "{message}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let text = "version = 1\n[categories.c\n";
    match parse_spec(text) {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 14)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn invalid_block_is_named() {
    // (e;g);e = e;e = g but e;(g;e) = e;g = e
    let text = "[categories.bad]\nobjects = [\"x\"]\narrows = [[\"e\", \"x\", \"x\"], [\"g\", \"x\", \"x\"]]\ncompose = [[\"e\", \"e\", \"g\"], [\"e\", \"g\", \"e\"], [\"g\", \"e\", \"g\"], [\"g\", \"g\", \"g\"]]\n";
    let err = parse_spec(text).unwrap_err();
    match err.root() {
        Error::Invalid { block, details } => {
            assert_eq!(block, "bad");
            assert!(details.contains("Associativity"), "{details}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn non_functorial_transition_is_rejected() {
    let text = r#"
[categories.A]
builtin = "walking-arrow"
[categories.B]
builtin = "walking-iso"
[shapes.K]
locally_discrete = "A"
[functors.E]
shape = "K"
variance = "covariant"
values = { a0 = "A", a1 = "B" }
transitions.a.objects = { a0 = "k0", a1 = "k0" }
transitions.a.arrows = { a = "i" }
"#;
    let err = parse_spec(text).unwrap_err();
    assert!(matches!(err.root(), Error::Invalid { block, .. } if block == "E"), "{err}");
}

#[test]
fn wrong_variance_is_rejected() {
    let text = "[categories.p]\nbuiltin = \"terminal\"\n[shapes.K]\nbuiltin = \"point\"\n[functors.E]\nshape = \"K\"\nvariance = \"covariant\"\nconstant = \"p\"\n[[jobs]]\ncommand = \"pscolim\"\ne = \"E\"\nw = \"E\"\n";
    let err = parse_spec(text).unwrap_err();
    assert!(matches!(err.root(), Error::Precondition(m) if m.contains("contravariant")), "{err}");
}

#[test]
fn missing_and_extra_job_arguments() {
    let base = "[categories.p]\nbuiltin = \"terminal\"\n[[jobs]]\n";
    let err = parse_spec(&format!("{base}command = \"verify-main\"\n")).unwrap_err();
    assert!(err.to_string().contains("missing argument `e`"), "{err}");
    let err = parse_spec(&format!("{base}command = \"example-idempotent\"\nx = \"p\"\n")).unwrap_err();
    assert!(err.to_string().contains("unexpected argument `x`"), "{err}");
}

#[test]
fn normalization_is_a_fixed_point() {
    for (name, text) in SEED_FILES {
        let spec = parse_spec(text).unwrap();
        let once = normalized_text(&spec).unwrap();
        let again = parse_spec(&once).unwrap_or_else(|e| panic!("{name}: {e}\n{once}"));
        assert_eq!(normalized_text(&again).unwrap(), once, "{name}");
        for (n, c) in &spec.categories {
            assert!(**c == *again.categories[n], "{name}: category {n}");
        }
        for (n, k) in &spec.shapes {
            assert!(**k == *again.shapes[n], "{name}: shape {n}");
        }
        for (n, f) in &spec.functors {
            assert!(**f == *again.functors[n], "{name}: functor {n}");
        }
    }
}

#[test]
fn shape_tables_rebuild_builtin_shapes() {
    use crate::twocat::{idempotent_shape, walking_two_cell};
    for k in [idempotent_shape(), walking_two_cell()] {
        let b = shape_block(&k).unwrap();
        let mut doc = SpecDocument::default();
        doc.shapes.insert("K".into(), toml::Spanned::new(0..0, b));
        let spec = resolve(doc, "").unwrap();
        assert!(*spec.shapes["K"] == k);
    }
}

#[test]
fn empty_job_list_gives_empty_report() {
    let spec = parse_spec("[categories.p]\nbuiltin = \"terminal\"\n").unwrap();
    let r = run(&spec, "", &opts()).unwrap();
    assert!(r.jobs.is_empty());
    assert!(!r.is_failure());
}

#[test]
fn verify_main_job_matches_direct_call() {
    let text = SEED_FILES[0].1;
    let spec = parse_spec(text).unwrap();
    let r = run(&spec, text, &opts()).unwrap();
    let job = r.jobs.iter().find(|j| j.command == Command::VerifyMain).unwrap();
    assert_eq!(job.outcome, Outcome::Pass);
    let s = seeds::seed1();
    let direct = verify_main_theorem(&s.e, &s.w, &spec.categories["arrow"], Budget::default()).unwrap();
    assert_eq!(job.result, serde_json::to_value(&direct).unwrap());
    assert_eq!(job.result["sigma_functors"], 3);
}

#[test]
fn reports_are_deterministic() {
    for (name, text) in SEED_FILES {
        let spec = parse_spec(text).unwrap();
        let a = run(&spec, text, &opts()).unwrap();
        let b = run(&parse_spec(text).unwrap(), text, &opts()).unwrap();
        assert_eq!(a.deterministic_json(), b.deterministic_json(), "{name}");
        assert_eq!(a.timing_ms.len(), a.jobs.len());
    }
}

#[test]
fn budget_errors_are_recorded_and_the_run_continues() {
    let text = format!("{}\n[[jobs]]\ncommand = \"pscolim\"\ne = \"E\"\nw = \"W\"\nbudget = 1\n", SEED_FILES[2].1);
    let spec = parse_spec(&text).unwrap();
    let r = run(&spec, &text, &opts()).unwrap();
    let last = r.jobs.last().unwrap();
    assert_eq!(last.outcome, Outcome::BudgetExceeded);
    assert_eq!(last.budget, 1);
    assert!(!last.outcome.is_failure());
    assert!(r.jobs[..r.jobs.len() - 1].iter().all(|j| j.outcome == Outcome::Pass));
    assert_eq!(r.warnings().count(), 1);
}

#[test]
fn export_dot_writes_listed_files() {
    let dir = std::env::temp_dir().join(format!("wcolim-dot-{}", std::process::id()));
    let text = SEED_FILES[1].1;
    let spec = parse_spec(text).unwrap();
    let r = run(
        &spec,
        text,
        &RunOptions {
            budget: Budget::default(),
            dot_dir: Some(dir.clone()),
        },
    )
    .unwrap();
    let mut written = 0;
    for j in r.jobs.iter().filter(|j| j.command == Command::ExportDot) {
        for f in j.result["files"].as_array().unwrap() {
            let body = std::fs::read_to_string(dir.join(f["file"].as_str().unwrap())).unwrap();
            assert_eq!(sha256_hex(body.as_bytes()), f["sha256"].as_str().unwrap());
            written += 1;
        }
    }
    assert_eq!(written, 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn line_column_counts_from_one() {
    assert_eq!(line_column("ab\ncd", 0), (1, 1));
    assert_eq!(line_column("ab\ncd", 4), (2, 2));
}

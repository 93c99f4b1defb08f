//! Byte-for-byte comparisons against recorded reports. Set `WCOLIM_BLESS=1`
//! to rewrite the recorded files from the current output.

use std::path::PathBuf;
use wcolim::bicolim::example_idempotent;
use wcolim::Budget;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

pub fn example_idempotent_json() -> String {
    let report = example_idempotent(Budget::default()).unwrap();
    serde_json::to_string_pretty(&report).unwrap() + "\n"
}

#[test]
fn example_idempotent_matches_recorded_report() {
    let path = golden("example_idempotent.json");
    let actual = example_idempotent_json();
    if std::env::var_os("WCOLIM_BLESS").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected);
}

#[test]
fn example_idempotent_is_deterministic() {
    assert_eq!(example_idempotent_json(), example_idempotent_json());
}

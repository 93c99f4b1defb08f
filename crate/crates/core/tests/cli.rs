use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use wcolim::cli::{Outcome, ReportDocument};

fn seed(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("seeds").join(name)
}

fn wcolim(args: &[&str], budget: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wcolim"));
    cmd.args(args).env_remove("WCOLIM_BUDGET");
    if let Some(b) = budget {
        cmd.env("WCOLIM_BUDGET", b);
    }
    cmd.output().unwrap()
}

fn report(out: &Output) -> ReportDocument {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn bundled_seeds_validate_and_run() {
    for i in 1..=6 {
        let path = seed(&format!("seed{i}.toml"));
        let p = path.to_str().unwrap();
        let v = wcolim(&["validate", p], None);
        assert!(v.status.success(), "{}", String::from_utf8_lossy(&v.stderr));
        let r = wcolim(&["run", p], None);
        assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
        let doc = report(&r);
        assert!(doc.jobs.iter().all(|j| j.outcome == Outcome::Pass), "seed{i}");
        assert_eq!(doc.timing_ms.len(), doc.jobs.len());
    }
}

#[test]
fn budget_from_environment_is_recorded_and_not_fatal() {
    let p = seed("seed3.toml");
    let out = wcolim(&["run", p.to_str().unwrap()], Some("3"));
    assert!(out.status.success());
    let doc = report(&out);
    assert_eq!(doc.provenance.default_budget, 3);
    assert!(doc.jobs.iter().any(|j| j.outcome == Outcome::BudgetExceeded));
    assert!(String::from_utf8_lossy(&out.stderr).contains("did not reach a verdict"));
}

#[test]
fn budget_flag_overrides_environment() {
    let p = seed("seed1.toml");
    let out = wcolim(&["run", p.to_str().unwrap(), "--budget", "1000000"], Some("3"));
    assert_eq!(report(&out).provenance.default_budget, 1_000_000);
}

#[test]
fn report_can_be_written_to_a_file() {
    let dir = std::env::temp_dir().join(format!("wcolim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_file = dir.join("report.json");
    let p = seed("seed2.toml");
    let out = wcolim(
        &["run", p.to_str().unwrap(), "--out", out_file.to_str().unwrap(), "--dot", dir.to_str().unwrap()],
        None,
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: ReportDocument = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    let dots = std::fs::read_dir(&dir)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "dot"))
        .count();
    assert!(dots > 0);
    assert!(!doc.jobs.is_empty());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn failed_verdict_exits_nonzero() {
    let p = seed("example_idempotent.toml");
    let out = wcolim(&["run", p.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out).jobs[0].outcome, Outcome::Fail);
}

#[test]
fn unreadable_or_empty_specs_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("wcolim-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.toml");
    std::fs::write(&empty, "").unwrap();
    let out = wcolim(&["validate", empty.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no blocks"));
    let out = wcolim(&["run", dir.join("missing.toml").to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

use super::doc::{Command, Job};
use super::normalize::{normalize, to_toml};
use super::resolve::Spec;
use crate::bicolim::{build_tensor, comparison_functor, example_idempotent, summarize_localization, verify_bicolimit};
use crate::budget::Budget;
use crate::dot;
use crate::error::{Error, Result};
use crate::pscolim::{build_delta, localize, pscolim_presentation, verify_main_theorem, yoneda_equivalence, yoneda_transitions, LocStatus};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    /// A verdict that contradicts the expected one.
    Fail,
    /// A localization could not be decided.
    Undecided,
    BudgetExceeded,
    Error,
}

impl Outcome {
    /// Whether the outcome makes the run exit nonzero.
    pub fn is_failure(self) -> bool {
        matches!(self, Outcome::Fail | Outcome::Error)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobReport {
    pub index: usize,
    pub label: String,
    pub command: Command,
    pub arguments: BTreeMap<String, String>,
    pub budget: u64,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub result: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub tool_version: String,
    /// SHA-256 of the input text.
    pub input_sha256: String,
    /// SHA-256 of each normalized block, keyed `<table>.<name>`.
    pub blocks_sha256: BTreeMap<String, String>,
    pub default_budget: u64,
}

/// Outcome of [`run`]. Everything except `timing_ms` is a function of the
/// input text and the budgets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub provenance: Provenance,
    pub jobs: Vec<JobReport>,
    /// Wall-clock milliseconds per job, in job order.
    pub timing_ms: Vec<f64>,
}

impl ReportDocument {
    pub fn is_failure(&self) -> bool {
        self.jobs.iter().any(|j| j.outcome.is_failure())
    }

    pub fn warnings(&self) -> impl Iterator<Item = &JobReport> {
        self.jobs
            .iter()
            .filter(|j| matches!(j.outcome, Outcome::Undecided | Outcome::BudgetExceeded))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with timings removed, identical across runs of the same input.
    pub fn deterministic_json(&self) -> String {
        let mut r = self.clone();
        r.timing_ms.clear();
        r.to_json()
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub budget: Budget,
    /// Where `export-dot` jobs write their files; nothing is written when unset.
    pub dot_dir: Option<PathBuf>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn block_hashes(spec: &Spec) -> Result<BTreeMap<String, String>> {
    let doc = normalize(spec)?;
    let mut out = BTreeMap::new();
    let mut put = |key: String, value: std::result::Result<String, toml::ser::Error>| -> Result<()> {
        let text = value.map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
        out.insert(key, sha256_hex(text.as_bytes()));
        Ok(())
    };
    for (n, b) in &doc.categories {
        put(format!("categories.{n}"), toml::to_string(b.get_ref()))?;
    }
    for (n, b) in &doc.shapes {
        put(format!("shapes.{n}"), toml::to_string(b.get_ref()))?;
    }
    for (n, b) in &doc.functors {
        put(format!("functors.{n}"), toml::to_string(b.get_ref()))?;
    }
    Ok(out)
}

/// Runs the jobs of `spec` in order. A job that fails or exceeds its budget
/// is recorded and the run continues.
pub fn run(spec: &Spec, input: &str, opts: &RunOptions) -> Result<ReportDocument> {
    let provenance = Provenance {
        tool: env!("CARGO_PKG_NAME").to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input_sha256: sha256_hex(input.as_bytes()),
        blocks_sha256: block_hashes(spec)?,
        default_budget: opts.budget.limit,
    };
    let mut jobs = Vec::new();
    let mut timing_ms = Vec::new();
    for (index, job) in spec.document.jobs.iter().enumerate() {
        let job = job.get_ref();
        let budget = job.budget.map(Budget::new).unwrap_or(opts.budget);
        let start = Instant::now();
        let (outcome, message, result) = match run_job(index, job, spec, budget, opts) {
            Ok((outcome, result)) => (outcome, None, result),
            Err(e) if e.is_budget() => (Outcome::BudgetExceeded, Some(e.to_string()), Value::Null),
            Err(e) => (Outcome::Error, Some(e.to_string()), Value::Null),
        };
        timing_ms.push(start.elapsed().as_secs_f64() * 1e3);
        jobs.push(JobReport {
            index,
            label: job.label(),
            command: job.command,
            arguments: job.arguments().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            budget: budget.limit,
            outcome,
            message,
            result,
        });
    }
    Ok(ReportDocument {
        provenance,
        jobs,
        timing_ms,
    })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn run_job(index: usize, job: &Job, spec: &Spec, budget: Budget, opts: &RunOptions) -> Result<(Outcome, Value)> {
    let functor = |n: &Option<String>| spec.functors[n.as_deref().expect("checked at parse time")].clone();
    let category = |n: &Option<String>| spec.categories[n.as_deref().expect("checked at parse time")].clone();
    match job.command {
        Command::Validate => {
            // blocks were validated during parsing
            let mut blocks = BTreeMap::new();
            for (n, c) in &spec.categories {
                blocks.insert(format!("categories.{n}"), json!({"objects": c.n_objects(), "arrows": c.n_arrows()}));
            }
            for (n, k) in &spec.shapes {
                blocks.insert(
                    format!("shapes.{n}"),
                    json!({"objects": k.n_objects(), "one_cells": k.n_one(), "two_cells": k.n_two()}),
                );
            }
            for (n, f) in &spec.functors {
                blocks.insert(format!("functors.{n}"), json!({"variance": f.variance, "shape": spec.functor_shape[n]}));
            }
            if let Some(t) = &job.target {
                blocks.retain(|k, _| k.split_once('.').map(|(_, n)| n) == Some(t.as_str()));
            }
            Ok((Outcome::Pass, json!({ "valid": blocks })))
        }
        Command::Pscolim => {
            let (e, w) = (functor(&job.e), functor(&job.w));
            let delta = build_delta(&e, &w, budget)?;
            let pres = pscolim_presentation(&e, &w, budget)?;
            let p = &pres.p;
            Ok((
                Outcome::Pass,
                json!({
                    "delta": {
                        "objects": delta.carrier.n_objects(),
                        "one_cells": delta.carrier.n_one(),
                        "two_cells": delta.carrier.n_two(),
                        "cartesian": delta.cartesian.iter().filter(|&&c| c).count(),
                    },
                    "presentation": {
                        "objects": p.obj_names(),
                        "arrows": p.arrows().map(|a| format!("{}: {} -> {}", p.arrow_name(a), p.obj_name(p.dom(a)), p.obj_name(p.cod(a)))).collect::<Vec<_>>(),
                        "marked": pres.sigma_arrows().map(|a| p.arrow_name(a)).collect::<Vec<_>>(),
                    },
                    "marked_closed_under_composition": pres.sigma_closure_failure().is_none(),
                }),
            ))
        }
        Command::Localize => {
            let pres = pscolim_presentation(&functor(&job.e), &functor(&job.w), budget)?;
            let loc = localize(&pres, budget);
            let outcome = match loc.status {
                LocStatus::Exact => Outcome::Pass,
                LocStatus::Undecided { .. } => Outcome::Undecided,
            };
            Ok((outcome, to_value(&summarize_localization(&pres.p, &pres.sigma, &loc))))
        }
        Command::VerifyMain => {
            let r = verify_main_theorem(&functor(&job.e), &functor(&job.w), &category(&job.x), budget)?;
            Ok((verdict(r.passed()), to_value(&r)))
        }
        Command::Bicolim => {
            let t = build_tensor(&functor(&job.e), &functor(&job.w), budget)?;
            let tp = &t.underlying;
            let loc = localize(tp, budget);
            let relabeling = t.relabeling_failure();
            let outcome = match (&relabeling, &loc.status) {
                (Some(_), _) => Outcome::Fail,
                (None, LocStatus::Undecided { .. }) => Outcome::Undecided,
                (None, LocStatus::Exact) => Outcome::Pass,
            };
            Ok((
                outcome,
                json!({
                    "quintuples": t.quintuple_label.len(),
                    "quintuple_arrows": t.arrow_label.len(),
                    "relabeling_failure": relabeling,
                    "localization": summarize_localization(&tp.p, &tp.sigma, &loc),
                }),
            ))
        }
        Command::VerifyBicolim => {
            let r = verify_bicolimit(&functor(&job.e), &functor(&job.w), &category(&job.x), budget)?;
            Ok((verdict(r.passed()), to_value(&r)))
        }
        Command::Compare => {
            let c = comparison_functor(&functor(&job.e), &functor(&job.w), budget)?;
            Ok((verdict(c.report.passed()), to_value(&c.report)))
        }
        Command::Yoneda => {
            let e = functor(&job.e);
            let o = e.shape.find_object(job.object.as_deref().unwrap_or_default()).expect("checked at parse time");
            let (eq, _) = yoneda_equivalence(&e, o, budget)?;
            let tr = yoneda_transitions(&e, budget)?;
            Ok((verdict(eq.passed() && tr.passed()), json!({ "equivalence": eq, "transitions": tr })))
        }
        Command::ExampleIdempotent => {
            let r = example_idempotent(budget)?;
            Ok((verdict(r.separates()), to_value(&r)))
        }
        Command::ExportDot => export_dot(index, job, spec, budget, opts),
    }
}

fn export_dot(index: usize, job: &Job, spec: &Spec, budget: Budget, opts: &RunOptions) -> Result<(Outcome, Value)> {
    let mut files: Vec<(String, String)> = Vec::new();
    if let Some(t) = &job.target {
        if let Some(c) = spec.categories.get(t) {
            files.push((t.clone(), dot::category_to_dot(t, c, &[])));
        } else if let Some(k) = spec.shapes.get(t) {
            files.extend(dot::shape_to_dot(t, k));
        } else if let Some(f) = spec.functors.get(t) {
            for o in f.shape.objects() {
                let stem = format!("{t}.{}", f.shape.obj_name(o));
                files.push((stem.clone(), dot::category_to_dot(&stem, f.value(o), &[])));
            }
        }
    } else {
        let (e, w) = (job.e.as_deref().unwrap_or_default(), job.w.as_deref().unwrap_or_default());
        let pres = pscolim_presentation(&spec.functors[e], &spec.functors[w], budget)?;
        let stem = format!("{e}-{w}.presentation");
        files.push((stem.clone(), dot::category_to_dot(&stem, &pres.p, &pres.sigma)));
    }
    let mut listed = Vec::new();
    for (stem, body) in &files {
        let file = format!("{index:02}-{stem}.dot");
        if let Some(dir) = &opts.dot_dir {
            std::fs::create_dir_all(dir).map_err(|e| Error::Precondition(format!("cannot create {}: {e}", dir.display())))?;
            let path = dir.join(&file);
            std::fs::write(&path, body).map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
        }
        listed.push(json!({"file": file, "bytes": body.len(), "sha256": sha256_hex(body.as_bytes())}));
    }
    Ok((Outcome::Pass, json!({ "written": opts.dot_dir.is_some(), "files": listed })))
}

/// The normalized form of the input, as TOML.
pub fn normalized_text(spec: &Spec) -> Result<String> {
    to_toml(&normalize(spec)?)
}

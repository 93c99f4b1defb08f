use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use wcolim::budget::BUDGET_ENV;
use wcolim::cli::{parse_spec, run, Outcome, RunOptions, Spec};
use wcolim::Budget;

#[derive(Parser)]
#[command(name = "wcolim", version, about = "Weighted pseudo-colimits and bicolimits of finite pseudo-functors")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a spec file and validate every block.
    Validate { spec: PathBuf },
    /// Run the jobs of a spec file.
    Run {
        spec: PathBuf,
        /// Default enumeration budget for jobs that do not set one.
        #[arg(long, env = BUDGET_ENV)]
        budget: Option<u64>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for the files of export-dot jobs.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn load(path: &PathBuf) -> Result<(String, Spec), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let spec = parse_spec(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((text, spec))
}

fn main() -> ExitCode {
    match real_main(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn real_main(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Cmd::Validate { spec } => {
            let (_, s) = load(&spec)?;
            println!(
                "{}: valid ({} categories, {} shapes, {} functors, {} jobs)",
                spec.display(),
                s.categories.len(),
                s.shapes.len(),
                s.functors.len(),
                s.document.jobs.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Run { spec, budget, out, dot } => {
            let (text, s) = load(&spec)?;
            let opts = RunOptions {
                budget: budget.map(Budget::new).unwrap_or_default(),
                dot_dir: dot,
            };
            let report = run(&s, &text, &opts).map_err(|e| e.to_string())?;
            for j in &report.jobs {
                let tag = match j.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "FAIL",
                    Outcome::Undecided => "undecided",
                    Outcome::BudgetExceeded => "budget",
                    Outcome::Error => "ERROR",
                };
                match &j.message {
                    Some(m) => eprintln!("[{tag}] {}: {m}", j.label),
                    None => eprintln!("[{tag}] {}", j.label),
                }
            }
            for j in report.warnings() {
                eprintln!("warning: job {} ({}) did not reach a verdict", j.index, j.label);
            }
            let json = report.to_json();
            match out {
                Some(p) => std::fs::write(&p, json + "\n").map_err(|e| format!("{}: {e}", p.display()))?,
                None => println!("{json}"),
            }
            Ok(if report.is_failure() { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
    }
}

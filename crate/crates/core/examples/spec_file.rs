//! Parsing a spec document, normalizing it and running its jobs.

use wcolim::cli::{normalized_text, parse_spec, run, RunOptions};

const TEXT: &str = r#"
[categories.point]
builtin = "terminal"

[categories.arrow]
builtin = "walking-arrow"

[shapes.K]
locally_discrete = "arrow"

[functors.E]
shape = "K"
variance = "covariant"
values = { a0 = "point", a1 = "arrow" }
transitions.a.objects = { "*" = "a1" }

[functors.W]
shape = "K"
variance = "contravariant"
constant = "point"

[[jobs]]
command = "localize"
e = "E"
w = "W"

[[jobs]]
command = "verify-main"
e = "E"
w = "W"
x = "arrow"
"#;

fn main() -> wcolim::Result<()> {
    let spec = parse_spec(TEXT)?;
    println!("{}", normalized_text(&spec)?);
    let report = run(&spec, TEXT, &RunOptions::default())?;
    println!("{}", report.deterministic_json());
    Ok(())
}

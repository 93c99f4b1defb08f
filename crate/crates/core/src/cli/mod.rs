//! The spec document format, the job runner and its report.
//!
//! A spec is a TOML file with `categories`, `shapes` and `functors` tables of
//! named blocks and a `jobs` array. Parsing builds and validates every block
//! and checks every job argument before anything runs; [`run`] then executes
//! the jobs in order and returns a [`ReportDocument`].

mod doc;
mod normalize;
mod resolve;
mod run;

pub use doc::{CategoryBlock, Command, CompositorEntry, FunctorBlock, FunctorMap, Job, Row, ShapeBlock, SpecDocument};
pub use normalize::{category_block, normalize, shape_block, to_toml};
pub use resolve::{line_column, parse_spec, resolve, Spec};
pub use run::{normalized_text, run, sha256_hex, JobReport, Outcome, Provenance, ReportDocument, RunOptions};

#[cfg(test)]
mod tests;

//! The point over the idempotent 2-cell shape: the pseudo-colimit and the
//! localized tensor presentation, printed as the JSON report.

use wcolim::bicolim::example_idempotent;
use wcolim::Budget;

fn main() -> wcolim::Result<()> {
    let r = example_idempotent(Budget::default())?;
    println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
    println!("separates: {}", r.separates());
    Ok(())
}

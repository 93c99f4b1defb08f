//! Bicolimits through the tensor presentation: the pseudo-colimit of `E × W`
//! weighted by the hom bifunctor, certified against a test category.

use std::sync::Arc;
use wcolim::bicolim::{build_tensor, verify_bicolimit};
use wcolim::fincat::FinCat;
use wcolim::seeds;
use wcolim::Budget;

fn main() -> wcolim::Result<()> {
    let budget = Budget::default();
    let s = seeds::seed2();
    let t = build_tensor(&s.e, &s.w, budget)?;
    println!("tensor presentation of {}: {} quintuples", s.name, t.quintuple_label.len());
    for (i, q) in t.quintuple_label.iter().enumerate() {
        println!("  {i}: {q:?}");
    }
    println!("relabeling: {:?}", t.relabeling_failure());

    let x = Arc::new(FinCat::walking_idempotent());
    for s in [seeds::seed1(), seeds::seed2(), seeds::seed3(), seeds::seed6()] {
        let r = verify_bicolimit(&s.e, &s.w, &x, budget)?;
        println!(
            "{}: strict round trip {}, unit invertible {}, {:?}",
            s.name, r.strict_round_trip, r.unit_invertible, r.verdict
        );
    }
    Ok(())
}

//! Weighting by a representable recovers the value of the functor.

use wcolim::pscolim::{yoneda_equivalence, yoneda_transitions};
use wcolim::seeds;
use wcolim::Budget;

fn main() -> wcolim::Result<()> {
    let budget = Budget::default();
    for s in [seeds::seed1(), seeds::seed3(), seeds::seed4(), seeds::seed5()] {
        for c in s.e.shape.objects() {
            let (report, loc) = yoneda_equivalence(&s.e, c, budget)?;
            let size = loc.result.as_ref().map(|r| (r.n_objects(), r.n_arrows()));
            println!(
                "{} at {}: value has {} objects, localization {:?}, passed {}",
                s.name,
                s.e.shape.obj_name(c),
                s.e.value(c).n_objects(),
                size,
                report.passed()
            );
        }
        let t = yoneda_transitions(&s.e, budget)?;
        println!("{} transitions: passed {}", s.name, t.passed());
    }
    Ok(())
}

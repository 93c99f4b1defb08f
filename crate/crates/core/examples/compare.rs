//! The comparison functor from the tensor presentation to the
//! pseudo-colimit presentation.

use wcolim::bicolim::comparison_functor;
use wcolim::seeds;
use wcolim::Budget;

fn main() -> wcolim::Result<()> {
    for s in seeds::all_seeds() {
        let c = comparison_functor(&s.e, &s.w, Budget::default())?;
        println!(
            "{}: {} -> {} objects, {:?}",
            s.name,
            c.tensor.underlying.p.n_objects(),
            c.target.p.n_objects(),
            c.report
        );
    }
    Ok(())
}

//! Σ-inverting functors out of `π₀Δ(E, W)` against pseudo-natural
//! transformations `W ⇒ Cat(E, X)`, compared strictly for each seed and test
//! category.

use wcolim::pscolim::verify_main_theorem;
use wcolim::seeds;
use wcolim::Budget;

fn main() {
    let budget = Budget::default();
    for s in seeds::all_seeds() {
        for (name, x) in seeds::test_categories() {
            match verify_main_theorem(&s.e, &s.w, &x, budget) {
                Ok(r) => println!(
                    "{} into {name}: {} functors, {} transformations, {:?}",
                    s.name, r.sigma_functors, r.pseudo_naturals, r.verdict
                ),
                Err(e) => println!("{} into {name}: {e}", s.name),
            }
        }
    }
}

//! `π₀Δ(E, W)` with its marked arrows, and the category of elements that it
//! reduces to for a terminal weight on a locally discrete shape.

use wcolim::fincat::find_isomorphism;
use wcolim::pscolim::{conical_oracle, pscolim_presentation};
use wcolim::seeds;
use wcolim::Budget;

fn main() -> wcolim::Result<()> {
    let budget = Budget::default();
    for s in seeds::all_seeds() {
        let pres = pscolim_presentation(&s.e, &s.w, budget)?;
        let marked: Vec<&str> = pres.sigma_arrows().map(|a| pres.p.arrow_name(a)).collect();
        println!(
            "{}: {} objects, {} arrows, marked {:?}",
            s.name,
            pres.p.n_objects(),
            pres.p.n_arrows(),
            marked
        );
    }

    let s = seeds::seed3();
    let pres = pscolim_presentation(&s.e, &s.w, budget)?;
    let (elements, cartesian) = conical_oracle(&s.e, budget)?;
    println!(
        "seed3 elements: {} objects, {} arrows, {} cartesian; equal to the presentation: {}",
        elements.n_objects(),
        elements.n_arrows(),
        cartesian.iter().filter(|&&c| c).count(),
        elements == *pres.p && cartesian == pres.sigma
    );
    let iso = find_isomorphism(&pres.p, &std::sync::Arc::new(elements), budget)?;
    println!("isomorphic: {}", iso.is_some());
    Ok(())
}

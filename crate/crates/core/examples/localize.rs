//! The three localization strategies: nothing to invert, a calculus of
//! right fractions, and bounded completion of zigzag words.

use std::sync::Arc;
use wcolim::fincat::{CatBuilder, FinCat};
use wcolim::pscolim::{localize_marked, right_fractions, zigzag_closure};
use wcolim::Budget;

fn show(label: &str, p: &Arc<FinCat>, sigma: &[bool], budget: Budget) {
    let loc = localize_marked(p, sigma, budget);
    match &loc.result {
        Some(r) => println!(
            "{label}: {:?}, {} objects, {} arrows, groupoid {}",
            loc.strategy,
            r.n_objects(),
            r.n_arrows(),
            r.is_groupoid()
        ),
        None => println!("{label}: {:?} {:?}", loc.strategy, loc.status),
    }
}

fn identities(p: &FinCat) -> Vec<bool> {
    p.arrows().map(|a| p.is_identity(a)).collect()
}

fn main() -> wcolim::Result<()> {
    let budget = Budget::default();
    let arrow = Arc::new(FinCat::walking_arrow());
    let a = arrow.find_arrow("a").unwrap();
    // presentations always mark identities
    let mut mark_a = identities(&arrow);
    show("identities marked", &arrow, &mark_a, budget);
    mark_a[a] = true;
    show("a marked", &arrow, &mark_a, budget);

    // the zigzag tier on its own gives the same answer
    let z = zigzag_closure(&arrow, &mark_a, budget);
    println!("zigzag words: {:?}", z.words);

    // a span x <- z -> y with both legs marked
    let span = Arc::new(
        CatBuilder::new()
            .object("x")
            .object("y")
            .object("z")
            .arrow("s", "z", "x")
            .arrow("t", "z", "y")
            .build()?,
    );
    let mut legs = identities(&span);
    legs[span.find_arrow("s").unwrap()] = true;
    legs[span.find_arrow("t").unwrap()] = true;
    let rf = right_fractions(&span, &legs, budget)?;
    println!("span admits right fractions: {}", rf.is_some());
    show("span", &span, &legs, budget);

    // the idempotent marked: it must become an identity
    let idem = Arc::new(FinCat::walking_idempotent());
    show("idempotent marked", &idem, &[true, true], budget);

    // too small a budget leaves the answer undecided instead of guessing
    show("budget 3", &idem, &[true, true], Budget::new(3));
    Ok(())
}

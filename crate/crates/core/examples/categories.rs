//! Building finite categories by name, validating them, and enumerating
//! functors and natural transformations between them.

use std::sync::Arc;
use wcolim::fincat::{enumerate_functors, functor_category, is_filtered, CatBuilder, FinCat};
use wcolim::Budget;

fn main() -> wcolim::Result<()> {
    // a split idempotent: s;r = 1 and r;s = e
    let c = Arc::new(
        CatBuilder::new()
            .object("x")
            .object("y")
            .arrow("s", "x", "y")
            .arrow("r", "y", "x")
            .arrow("e", "y", "y")
            .compose("s", "r", "1x")
            .compose("r", "s", "e")
            .compose("e", "e", "e")
            .compose("s", "e", "s")
            .compose("e", "r", "r")
            .build()?,
    );
    println!("{c:?}");
    println!("validator: {}", c.validate());
    println!("filtered: {:?}", is_filtered(&c));

    let x = Arc::new(FinCat::walking_idempotent());
    let fs = enumerate_functors(&c, &x, Budget::default())?;
    println!("{} functors into the walking idempotent", fs.len());
    let cat = functor_category(&c, &x, Budget::default())?;
    println!(
        "functor category: {} objects, {} arrows",
        cat.cat.n_objects(),
        cat.cat.n_arrows()
    );
    Ok(())
}

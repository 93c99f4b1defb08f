//! Every validator returns the violated law together with the cells that
//! witness it. Here each structure is broken in one place.

use std::sync::Arc;
use wcolim::fincat::{CatBuilder, FinCat, Functor, NatTransf};
use wcolim::psfun::{PseudoFunctor, Variance};
use wcolim::seeds;
use wcolim::twocat::idempotent_shape;

fn main() -> wcolim::Result<()> {
    // e;e should be e in an idempotent; record it as the identity instead
    let broken = CatBuilder::new()
        .object("*")
        .arrow("e", "*", "*")
        .arrow("g", "*", "*")
        .compose("e", "e", "g")
        .compose("e", "g", "e")
        .compose("g", "e", "g")
        .compose("g", "g", "g")
        .build()?;
    println!("category: {}", broken.validate());

    // a functor out of the walking arrow that sends `a` backwards
    let arr = Arc::new(FinCat::walking_arrow());
    let iso = Arc::new(FinCat::walking_iso());
    let j = iso.find_arrow("j").unwrap();
    let f = Functor::new(arr.clone(), iso.clone(), vec![0, 1], vec![0, 1, j]);
    println!("functor: {}", f.validate());

    // a transformation between identity functors with a non-identity
    // component that breaks naturality
    let id = Functor::identity(&iso);
    let t = NatTransf::new(id.clone(), id, vec![iso.find_arrow("1k0").unwrap(), j]);
    println!("transformation: {}", t.validate());

    // the idempotent 2-cell shape with ξ∗ξ recorded as an identity, which
    // breaks interchange against ξ;1 and 1;ξ
    let mut tables = idempotent_shape().tables();
    let id_x = tables.two_cells.iter().position(|(n, _, _)| n == "1x").unwrap();
    let xi = tables.two_cells.iter().position(|(n, _, _)| n == "ξ").unwrap();
    for row in tables.hcompose2.iter_mut() {
        if (row.0, row.1) == (xi, xi) {
            row.2 = id_x;
        }
    }
    let k = wcolim::twocat::TwoCat::new(tables)?;
    println!("2-category: {}", k.validate());

    // the seed with a non-trivial compositor, with that compositor reversed
    let s = seeds::seed5();
    let mut e: PseudoFunctor = (*s.e).clone();
    let key = *e.compositor.keys().find(|(f, g)| !e.shape.is_id1(*f) && !e.shape.is_id1(*g)).unwrap();
    let c = e.compositor.get_mut(&key).unwrap();
    c.components.reverse();
    println!("pseudo-functor: {}", e.validate());

    let w = PseudoFunctor::constant(Variance::Covariant, s.w.shape.clone(), s.w.value(0).clone());
    println!("constant (valid): {}", w.validate());
    Ok(())
}

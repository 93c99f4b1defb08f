//! Small bundled instances `(E, W)` used by the examples, tests and the
//! command-line driver.

use crate::fincat::{FinCat, Functor, NatTransf};
use crate::psfun::{PseudoFunctor, Variance};
use crate::twocat::{idempotent_shape, walking_two_cell, TwoCat};
use std::sync::Arc;

/// A named pair of a covariant `E` and a contravariant `W` on one shape.
#[derive(Debug, Clone)]
pub struct Seed {
    pub name: &'static str,
    pub e: Arc<PseudoFunctor>,
    pub w: Arc<PseudoFunctor>,
}

fn arc<T>(t: T) -> Arc<T> {
    Arc::new(t)
}

fn point() -> Arc<FinCat> {
    arc(FinCat::terminal())
}

/// Trivial shape; `E` is the walking arrow and `W` is terminal.
pub fn seed1() -> Seed {
    let k = arc(TwoCat::locally_discrete(&FinCat::terminal()));
    Seed {
        name: "seed1",
        e: arc(PseudoFunctor::constant(Variance::Covariant, k.clone(), arc(FinCat::walking_arrow()))),
        w: arc(PseudoFunctor::constant(Variance::Contravariant, k, point())),
    }
}

/// The idempotent 2-cell shape with `E` and `W` both constant at `1`.
pub fn seed2() -> Seed {
    let k = arc(idempotent_shape());
    Seed {
        name: "seed2",
        e: arc(PseudoFunctor::constant(Variance::Covariant, k.clone(), point())),
        w: arc(PseudoFunctor::constant(Variance::Contravariant, k, point())),
    }
}

/// The walking arrow `a: a0 -> a1`, with `E(a0) = {p, q}` discrete,
/// `E(a1)` the walking arrow `b0 -> b1`, `a_!: p ↦ b0, q ↦ b1`, and `W` terminal.
pub fn seed3() -> Seed {
    let k = arc(TwoCat::locally_discrete(&FinCat::walking_arrow()));
    let e0 = arc(FinCat::discrete(2).relabeled(
        vec!["p".into(), "q".into()],
        vec!["1p".into(), "1q".into()],
    ));
    let e1 = arc(FinCat::walking_arrow().relabeled(
        vec!["b0".into(), "b1".into()],
        vec!["1b0".into(), "1b1".into(), "b".into()],
    ));
    let a = Functor::new(e0.clone(), e1.clone(), vec![0, 1], vec![0, 1]);
    let transition = vec![Functor::identity(&e0), Functor::identity(&e1), a];
    let cells = transition.iter().map(NatTransf::identity).collect();
    Seed {
        name: "seed3",
        e: arc(PseudoFunctor::strict(Variance::Covariant, k.clone(), vec![e0, e1], transition, cells)),
        w: arc(PseudoFunctor::constant(Variance::Contravariant, k, point())),
    }
}

/// The idempotent 2-cell shape with `E(X)` the walking idempotent `{1, e}`,
/// `x_!` the identity and `ξ_!` the transformation with component `e`.
/// `W` is the representable at `X`.
pub fn seed4() -> Seed {
    let k = arc(idempotent_shape());
    let m = arc(FinCat::walking_idempotent());
    let id = Functor::identity(&m);
    let e_arrow = m.find_arrow("e").expect("e");
    let xi = NatTransf::new(id.clone(), id.clone(), vec![e_arrow]);
    let cells = (0..k.n_two())
        .map(|a| if k.is_id2(a) { NatTransf::identity(&id) } else { xi.clone() })
        .collect();
    let e = PseudoFunctor::strict(Variance::Covariant, k.clone(), vec![m], vec![id.clone(), id], cells);
    let w = crate::psfun::representable(&k, 0).expect("representable of a valid shape");
    Seed {
        name: "seed4",
        e: arc(e),
        w: arc(w),
    }
}

/// The walking idempotent `e` as a locally discrete shape, with `E(*)` the
/// walking isomorphism, `e_!` the swap and a non-identity compositor
/// `φ_{e,e}: id ⇒ swap` with components `i` and `j`. `W` is constant at the
/// walking arrow.
pub fn seed5() -> Seed {
    let k = arc(TwoCat::locally_discrete(&FinCat::walking_idempotent()));
    let iso = arc(FinCat::walking_iso());
    let (i, j) = (iso.find_arrow("i").unwrap(), iso.find_arrow("j").unwrap());
    let id = Functor::identity(&iso);
    let swap = Functor::new(iso.clone(), iso.clone(), vec![1, 0], vec![1, 0, j, i]);
    let e1 = k.find_one("e").unwrap();
    let transition = vec![id.clone(), swap.clone()];
    let cells = transition.iter().map(NatTransf::identity).collect();
    let mut e = PseudoFunctor::strict(Variance::Covariant, k.clone(), vec![iso], transition, cells);
    let ee = swap.then(&swap).expect("endofunctor");
    e.compositor.insert((e1, e1), NatTransf::new(ee, swap, vec![i, j]));
    Seed {
        name: "seed5",
        e: arc(e),
        w: arc(PseudoFunctor::constant(Variance::Contravariant, k, arc(FinCat::walking_arrow()))),
    }
}

/// The walking 2-cell `θ: f ⇒ g: 0 -> 1` with `E(0) = 1`, `E(1)` the
/// walking arrow, `f_!` and `g_!` picking its ends and `θ_!` the arrow.
/// `W` is terminal.
pub fn seed6() -> Seed {
    let k = arc(walking_two_cell());
    let one = point();
    let arr = arc(FinCat::walking_arrow());
    let fa = Functor::constant(&one, &arr, 0);
    let ga = Functor::constant(&one, &arr, 1);
    // identities come first in builder order, then f and g
    let transition = vec![Functor::identity(&one), Functor::identity(&arr), fa.clone(), ga.clone()];
    let theta = k.find_two("θ").unwrap();
    let cells = k
        .two_cells()
        .map(|c| {
            if c == theta {
                NatTransf::new(fa.clone(), ga.clone(), vec![arr.find_arrow("a").unwrap()])
            } else {
                NatTransf::identity(&transition[k.src(c)])
            }
        })
        .collect();
    Seed {
        name: "seed6",
        e: arc(PseudoFunctor::strict(Variance::Covariant, k.clone(), vec![one, arr], transition, cells)),
        w: arc(PseudoFunctor::constant(Variance::Contravariant, k, point())),
    }
}

pub fn all_seeds() -> Vec<Seed> {
    vec![seed1(), seed2(), seed3(), seed4(), seed5(), seed6()]
}

/// Target categories used as `X` in the universal-property checks.
pub fn test_categories() -> Vec<(&'static str, Arc<FinCat>)> {
    vec![
        ("terminal", point()),
        ("walking_arrow", arc(FinCat::walking_arrow())),
        ("walking_idempotent", arc(FinCat::walking_idempotent())),
        ("walking_iso", arc(FinCat::walking_iso())),
        ("discrete2", arc(FinCat::discrete(2))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_valid() {
        for s in all_seeds() {
            let re = s.e.validate();
            assert!(re.is_valid(), "{} E: {re}", s.name);
            let rw = s.w.validate();
            assert!(rw.is_valid(), "{} W: {rw}", s.name);
        }
    }
}

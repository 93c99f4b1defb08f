use super::*;
use crate::budget::Budget;
use crate::fincat::{FinCat, IsoVerdict};
use crate::seeds::*;
use std::sync::Arc;

fn b() -> Budget {
    Budget::default()
}

#[test]
fn idempotent_tensor_objects_and_generator() {
    let s = seed2();
    let t = build_tensor(&s.e, &s.w, b()).unwrap();
    assert_eq!(t.quintuple_label, vec![(0, 0, 0, 0, 0), (0, 0, 0, 0, 1)]);
    let k = &t.shape;
    let xi = k.find_two("ξ").unwrap();
    let gen = t.one_cell_of(1, 1, (0, 0, 0, 0, xi)).expect("generator present");
    assert!(!t.underlying.delta.cartesian[gen]);
    assert!(t.underlying.delta.carrier.validate().is_valid());
}

#[test]
fn quintuple_relabeling_is_consistent() {
    for s in all_seeds() {
        let t = build_tensor(&s.e, &s.w, b()).unwrap();
        assert_eq!(t.relabeling_failure(), None, "{}", s.name);
    }
}

#[test]
fn comparison_on_every_seed() {
    for s in all_seeds() {
        let c = comparison_functor(&s.e, &s.w, b()).unwrap();
        assert!(c.report.passed(), "{}: {:?}", s.name, c.report);
    }
}

#[test]
fn comparison_collapses_idempotent_objects() {
    let s = seed2();
    let c = comparison_functor(&s.e, &s.w, b()).unwrap();
    assert_eq!(c.functor.obj_map, vec![0, 0]);
}

#[test]
fn technical_round_trip_on_seed2() {
    let s = seed2();
    let r = verify_bicolimit(&s.e, &s.w, &Arc::new(FinCat::walking_idempotent()), b()).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.verdict, IsoVerdict::EquivWithUnit);
}

#[test]
fn bicolimit_into_a_point() {
    for s in [seed1(), seed2(), seed3()] {
        let r = verify_bicolimit(&s.e, &s.w, &Arc::new(FinCat::terminal()), b()).unwrap();
        assert!(r.passed(), "{}: {r:?}", s.name);
        assert_eq!(r.weighted_naturals, 1);
    }
}

#[test]
fn bicolimit_on_locally_discrete_seed() {
    let s = seed3();
    let r = verify_bicolimit(&s.e, &s.w, &Arc::new(FinCat::walking_arrow()), b()).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn idempotent_example_runs() {
    let r = example_idempotent(b()).unwrap();
    assert!(r.pseudo.is_groupoid);
    assert_eq!(r.pseudo.arrows.len(), 1);
    assert!(!r.generator_cartesian);
}

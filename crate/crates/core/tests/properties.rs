mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;
use toml::Spanned;
use wcolim::cli::{category_block, normalize, parse_spec, shape_block, to_toml, FunctorBlock, Spec, SpecDocument};
use wcolim::fincat::{
    enumerate_functors, functor_category, is_filtered, FinCat, Functor, FunctorCategory, NatTransf,
};
use wcolim::pscolim::{
    conical_oracle, localize, phi, pscolim_presentation, right_fractions, sigma_functor_cat, zigzag_closure,
};
use wcolim::psfun::{hom_pseudo_functor, PseudoFunctor, Variance};
use wcolim::seeds;
use wcolim::twocat::pi0;
use wcolim::Budget;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn budget() -> Budget {
    Budget::default()
}

/// Small categories with varied structure: posets, their opposites, and
/// products with a one-object monoid or the walking isomorphism.
fn random_category(r: &mut ChaCha8Rng) -> FinCat {
    let p = random_poset(r, 3);
    match r.gen_range(0..5) {
        0 => p,
        1 => p.opposite(),
        2 => FinCat::product(&p, &FinCat::walking_idempotent()),
        3 => FinCat::product(&FinCat::walking_iso(), &p),
        _ => FinCat::product(&random_poset(r, 2), &random_poset(r, 2)),
    }
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn updown_instances_are_valid(seed in any::<u64>()) {
        let p = random_poset(&mut rng(seed), 4);
        let (e, w) = updown_instance(&p);
        prop_assert!(e.validate().is_valid());
        prop_assert!(w.validate().is_valid());
    }

    #[test]
    fn filteredness_matches_total_cones(seed in any::<u64>()) {
        let c = random_category(&mut rng(seed));
        prop_assert_eq!(is_filtered(&c).is_filtered(), has_total_cone(&c));
    }

    #[test]
    fn functor_enumeration_matches_brute_force(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = Arc::new(random_poset(&mut r, 3));
        let x = Arc::new(match r.gen_range(0..3) {
            0 => random_poset(&mut r, 3),
            1 => FinCat::walking_idempotent(),
            _ => FinCat::walking_iso(),
        });
        let fast: HashSet<(Vec<usize>, Vec<usize>)> = enumerate_functors(&c, &x, budget())
            .unwrap()
            .into_iter()
            .map(|f| (f.obj_map, f.arr_map))
            .collect();
        let slow: HashSet<(Vec<usize>, Vec<usize>)> =
            brute_functors(&c, &x).into_iter().map(|f| (f.obj_map, f.arr_map)).collect();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn pi0_composition_is_independent_of_representatives(seed in any::<u64>()) {
        let p = random_poset(&mut rng(seed), 3);
        let (e, w) = updown_instance(&p);
        let pres = pscolim_presentation(&e, &w, budget()).unwrap();
        let k = &pres.delta.carrier;
        let labels = pi0(k).unwrap();
        for d1 in k.one_cells() {
            let a = labels.class_of[d1];
            prop_assert_eq!(labels.quotient.dom(a), k.dom(d1));
            prop_assert_eq!(labels.quotient.cod(a), k.cod(d1));
            for d2 in k.out_ones(k.cod(d1)) {
                let lhs = labels.class_of[k.hc1(d1, d2)];
                prop_assert_eq!(lhs, labels.quotient.comp(a, labels.class_of[d2]));
            }
        }
    }

    #[test]
    fn marked_classes_are_closed_under_composition(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_poset(&mut r, 3);
        let (e, w) = updown_instance(&p);
        let e = Arc::new(times(&e, &Arc::new(FinCat::walking_iso())));
        let pres = pscolim_presentation(&e, &w, budget()).unwrap();
        prop_assert_eq!(pres.sigma_closure_failure(), None);
        for a in pres.p.objects() {
            prop_assert!(pres.sigma[pres.p.identity(a)]);
        }
    }

    #[test]
    fn conical_oracle_agrees_for_terminal_weights(seed in any::<u64>()) {
        let p = random_poset(&mut rng(seed), 3);
        let (e, _) = updown_instance(&p);
        let w = Arc::new(PseudoFunctor::constant(Variance::Contravariant, e.shape.clone(), Arc::new(FinCat::terminal())));
        let pres = pscolim_presentation(&e, &w, budget()).unwrap();
        let (oracle, sigma) = conical_oracle(&e, budget()).unwrap();
        prop_assert!(*pres.p == oracle);
        prop_assert_eq!(&pres.sigma, &sigma);
    }

    #[test]
    fn fractions_and_zigzags_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_poset(&mut r, 3);
        let (e, w) = updown_instance(&p);
        let e = if r.gen_bool(0.5) { Arc::new(times(&e, &Arc::new(FinCat::walking_arrow()))) } else { e };
        let pres = pscolim_presentation(&e, &w, budget()).unwrap();
        if let Some(frac) = right_fractions(&pres.p, &pres.sigma, budget()).unwrap() {
            let zz = zigzag_closure(&pres.p, &pres.sigma, budget());
            let (a, la) = frac.require_exact().unwrap();
            let (b, lb) = zz.require_exact().unwrap();
            prop_assert_eq!(a.n_objects(), b.n_objects());
            prop_assert_eq!(a.n_arrows(), b.n_arrows());
            // the comparison induced by the universal property is bijective
            let iso = frac.extend(lb).unwrap();
            prop_assert!(iso.validate().is_valid());
            let objs: HashSet<usize> = iso.obj_map.iter().copied().collect();
            let arrs: HashSet<usize> = iso.arr_map.iter().copied().collect();
            prop_assert_eq!(objs.len(), b.n_objects());
            prop_assert_eq!(arrs.len(), b.n_arrows());
            prop_assert!(zz.extend(la).unwrap().validate().is_valid());
            // both localization functors identify the same arrows of p
            for x in pres.p.arrows() {
                for y in pres.p.arrows() {
                    prop_assert_eq!(la.arr(x) == la.arr(y), lb.arr(x) == lb.arr(y));
                }
            }
        }
    }

    #[test]
    fn transport_preserves_validity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = &seeds::all_seeds()[r.gen_range(0..6)];
        let base = if r.gen_bool(0.5) { s.e.clone() } else { s.w.clone() };
        let f = Arc::new(times(&base, &Arc::new(FinCat::walking_iso())));
        prop_assert!(f.validate().is_valid());
        let (g, tau) = transport(&mut r, &f);
        let g = Arc::new(g);
        let rep = g.validate();
        prop_assert!(rep.is_valid(), "{}", rep);
        prop_assert!(transport_nat(&f, &g, &tau).validate().is_valid());
        prop_assert!(transport_nat_back(&f, &g, &tau).validate().is_valid());
    }

    #[test]
    fn single_cell_mutations_are_rejected(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_poset(&mut r, 3);
        let (e, w) = updown_instance(&p);
        let iso = Arc::new(FinCat::walking_iso());
        let base = Arc::new(times(if r.gen_bool(0.5) { &e } else { &w }, &iso));
        let (g, tau) = transport(&mut r, &base);
        let g = Arc::new(g);
        for m in mutate_functor(&mut r, &g) {
            let rep = m.mutant.validate();
            prop_assert!(m.laws.iter().any(|&l| rep.has(l)), "{}: {}", m.what, rep);
            prop_assert!(m.witness.iter().all(|&c| rep.mentions(c)), "{}: {}", m.what, rep);
        }
        for m in mutate_nat(&mut r, &transport_nat(&base, &g, &tau)) {
            let rep = m.mutant.validate();
            prop_assert!(m.laws.iter().any(|&l| rep.has(l)), "{}: {}", m.what, rep);
            prop_assert!(m.witness.iter().all(|&c| rep.mentions(c)), "{}: {}", m.what, rep);
        }
    }

    #[test]
    fn spec_text_round_trips_transported_functors(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_poset(&mut r, 3);
        let (e, w) = updown_instance(&p);
        let base = if r.gen_bool(0.5) { e } else { w };
        let f = times(&base, &Arc::new(FinCat::walking_iso()));
        let (g, _) = transport(&mut r, &f);
        let spec = spec_of(&g);
        let text = to_toml(&normalize(&spec).unwrap()).unwrap();
        let back = parse_spec(&text).unwrap();
        let back_f = &back.functors["F"];
        prop_assert!(back_f.validate().is_valid());
        prop_assert_eq!(by_name(back_f), by_name(&g), "{}", text);
        prop_assert_eq!(normalized(&back), text);
    }
}

/// A spec holding one functor block `F` for `g`, with its values and shape.
fn spec_of(g: &PseudoFunctor) -> Spec {
    let k = &*g.shape;
    let mut document = SpecDocument::default();
    let mut categories = BTreeMap::new();
    let mut values = BTreeMap::new();
    for o in k.objects() {
        let name = format!("V{o}");
        document.categories.insert(name.clone(), Spanned::new(0..0, category_block(g.value(o))));
        categories.insert(name.clone(), g.value(o).clone());
        values.insert(k.obj_name(o).to_string(), name);
    }
    document.shapes.insert("K".into(), Spanned::new(0..0, shape_block(k).unwrap()));
    let block = FunctorBlock {
        shape: "K".into(),
        variance: Some(g.variance),
        values,
        ..Default::default()
    };
    document.functors.insert("F".into(), Spanned::new(0..0, block));
    Spec {
        document,
        categories,
        shapes: [("K".to_string(), g.shape.clone())].into(),
        functors: [("F".to_string(), Arc::new(g.clone()))].into(),
        functor_shape: [("F".to_string(), "K".to_string())].into(),
    }
}

fn normalized(spec: &Spec) -> String {
    to_toml(&normalize(spec).unwrap()).unwrap()
}

/// The structure of `f` keyed by cell and object names, independent of
/// how the values number their arrows.
fn by_name(f: &PseudoFunctor) -> BTreeSet<String> {
    let k = &*f.shape;
    let mut out = BTreeSet::new();
    let transf = |t: &NatTransf| -> Vec<String> {
        let (s, x) = (&t.source.source, &t.source.target);
        s.objects().map(|o| format!("{}:{}", s.obj_name(o), x.arrow_name(t.at(o)))).collect()
    };
    for g in k.one_cells() {
        let t = f.tr(g);
        for a in t.source.arrows() {
            out.insert(format!("tr {} {} {}", k.one_name(g), t.source.arrow_name(a), t.target.arrow_name(t.arr(a))));
        }
    }
    for a in k.two_cells() {
        out.insert(format!("cell {} {:?}", k.two_name(a), transf(&f.cell_image[a])));
    }
    for (&(a, b), t) in &f.compositor {
        out.insert(format!("comp {} {} {:?}", k.one_name(a), k.one_name(b), transf(t)));
    }
    out
}

/// `h_*: [c, x] -> [c, x']`, post-composition with `h`.
fn post(from: &FunctorCategory, to: &FunctorCategory, h: &Functor) -> Functor {
    let obj_map = from
        .functors
        .iter()
        .map(|f| to.object_of(&f.then(h).unwrap()).unwrap())
        .collect();
    let arr_map = from
        .transfs
        .iter()
        .map(|t| to.arrow_of(&NatTransf::whisker_post(t, h).unwrap()).unwrap())
        .collect();
    Functor::new(from.cat.clone(), to.cat.clone(), obj_map, arr_map)
}

#[test]
fn phi_is_natural_in_the_target_category() {
    let mut r = rng(7);
    let targets = [
        Arc::new(FinCat::walking_arrow()),
        Arc::new(FinCat::walking_idempotent()),
        Arc::new(FinCat::walking_iso()),
    ];
    for s in [seeds::seed1(), seeds::seed3(), seeds::seed4(), seeds::seed5()] {
        let pres = pscolim_presentation(&s.e, &s.w, budget()).unwrap();
        for x in &targets {
            for y in &targets {
                let hx = hom_pseudo_functor(&s.e, x, budget()).unwrap();
                let hy = hom_pseudo_functor(&s.e, y, budget()).unwrap();
                let sigma_x = sigma_functor_cat(&pres, x, budget()).unwrap();
                let hs = enumerate_functors(x, y, budget()).unwrap();
                for _ in 0..4 {
                    let f = &sigma_x.functors[r.gen_range(0..sigma_x.functors.len())];
                    let h = &hs[r.gen_range(0..hs.len())];
                    let lhs = phi(&pres, &hy, &f.then(h).unwrap()).unwrap();
                    let rhs = phi(&pres, &hx, f).unwrap();
                    for c in s.e.shape.objects() {
                        let hc = post(&hx.categories[c], &hy.categories[c], h);
                        let moved = rhs.component[c].then(&hc).unwrap();
                        assert_eq!(lhs.component[c].obj_map, moved.obj_map, "{}", s.name);
                        assert_eq!(lhs.component[c].arr_map, moved.arr_map, "{}", s.name);
                    }
                    for g in s.e.shape.one_cells() {
                        let c = s.e.shape.dom(g);
                        let hc = post(&hx.categories[c], &hy.categories[c], h);
                        let moved: Vec<usize> = rhs.coherence[g].components.iter().map(|&a| hc.arr(a)).collect();
                        assert_eq!(lhs.coherence[g].components, moved, "{}", s.name);
                    }
                }
            }
        }
    }
}

/// `p` for seed 3 is the poset `P -> B0 -> B1 <- Q` with `P -> B1`, marked
/// at `P -> B0` and `Q -> B1`. Inverting them leaves two isomorphism classes
/// `{P, B0}` and `{Q, B1}` with exactly one arrow between any two objects
/// in order, and no way back: 4 + 4 + 4 = 12 arrows.
#[test]
fn seed3_localization_matches_hand_count_and_universal_property() {
    let s = seeds::seed3();
    let pres = pscolim_presentation(&s.e, &s.w, budget()).unwrap();
    assert_eq!((pres.p.n_objects(), pres.p.n_arrows()), (4, 8));
    let loc = localize(&pres, budget());
    let (l, lf) = loc.require_exact().unwrap();
    assert_eq!((l.n_objects(), l.n_arrows()), (4, 12));
    let mut classes = 0;
    for a in l.objects() {
        for b in l.objects() {
            assert!(l.hom(a, b).len() <= 1);
        }
        if (0..a).all(|b| l.hom(a, b).is_empty() || l.hom(b, a).is_empty()) {
            classes += 1;
        }
    }
    assert_eq!(classes, 2);
    // functors out of the localization are exactly the marked-inverting
    // functors out of p, through precomposition with the localization functor
    for (name, x) in seeds::test_categories() {
        let inverting: HashSet<(Vec<usize>, Vec<usize>)> = brute_functors(&pres.p, &x)
            .into_iter()
            .filter(|f| f.inverts(|a| pres.sigma[a]))
            .map(|f| (f.obj_map, f.arr_map))
            .collect();
        let from_l: Vec<Functor> = brute_functors(l, &x);
        let pulled: HashSet<(Vec<usize>, Vec<usize>)> = from_l
            .iter()
            .map(|g| {
                let f = lf.then(g).unwrap();
                (f.obj_map, f.arr_map)
            })
            .collect();
        assert_eq!(pulled.len(), from_l.len(), "{name}: precomposition not injective");
        assert_eq!(pulled, inverting, "{name}");
    }
}

#[test]
fn sigma_functor_category_is_the_full_subcategory_of_inverting_functors() {
    for s in seeds::all_seeds() {
        let pres = pscolim_presentation(&s.e, &s.w, budget()).unwrap();
        for (name, x) in seeds::test_categories() {
            let sub = sigma_functor_cat(&pres, &x, budget()).unwrap();
            let all = functor_category(&pres.p, &x, budget()).unwrap();
            let keep: Vec<usize> = all
                .cat
                .objects()
                .filter(|&o| all.functor(o).inverts(|a| pres.sigma[a]))
                .collect();
            let full = all.cat.full_subcategory(&keep);
            assert_eq!(sub.cat.n_objects(), full.n_objects(), "{} {name}", s.name);
            assert_eq!(sub.cat.n_arrows(), full.n_arrows(), "{} {name}", s.name);
        }
    }
}

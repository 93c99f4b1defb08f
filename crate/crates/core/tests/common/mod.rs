//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashMap;
use std::sync::Arc;
use wcolim::fincat::{ArrowId, FinCat, Functor, NatTransf, ObjId};
use wcolim::psfun::{PseudoFunctor, PseudoNat, Variance};
use wcolim::report::{CellRef, Law};
use wcolim::twocat::{OneId, TwoCat};

/// The thin category of the reflexive-transitive closure of `less` on `n`
/// objects.
pub fn poset(n: usize, less: &[(usize, usize)]) -> FinCat {
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
    }
    for &(i, j) in less {
        le[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let mut arrows = Vec::new();
    let mut index = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                let name = if i == j { format!("1o{i}") } else { format!("o{i}o{j}") };
                index.insert((i, j), arrows.len());
                arrows.push((name, i, j));
            }
        }
    }
    let ends: Vec<(usize, usize)> = arrows.iter().map(|(_, d, c)| (*d, *c)).collect();
    FinCat::from_fn(
        (0..n).map(|i| format!("o{i}")).collect(),
        arrows,
        (0..n).map(|i| index[&(i, i)]).collect(),
        |f, g| index.get(&(ends[f].0, ends[g].1)).copied(),
    )
    .expect("poset tables")
}

/// A random partial order on at most `max` objects, generated by an upper
/// triangular relation so it is always antisymmetric.
pub fn random_poset(rng: &mut impl Rng, max: usize) -> FinCat {
    let n = rng.gen_range(1..=max);
    let mut less = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                less.push((i, j));
            }
        }
    }
    poset(n, &less)
}

fn inclusion(p: &FinCat, from: &[ObjId], fc: &Arc<FinCat>, to: &[ObjId], tc: &Arc<FinCat>) -> Functor {
    let pos: HashMap<ObjId, ObjId> = to.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let obj_map: Vec<ObjId> = from.iter().map(|o| pos[o]).collect();
    let arr_map = fc
        .arrows()
        .map(|a| tc.hom(obj_map[fc.dom(a)], obj_map[fc.cod(a)])[0])
        .collect();
    debug_assert!(p.n_objects() >= from.len());
    Functor::new(fc.clone(), tc.clone(), obj_map, arr_map)
}

/// Over the poset `p` as a locally discrete shape: `E(C)` is the down-set of
/// `C` and `W(C)` the up-set, with inclusions as transitions.
pub fn updown_instance(p: &FinCat) -> (Arc<PseudoFunctor>, Arc<PseudoFunctor>) {
    let k = Arc::new(TwoCat::locally_discrete(p));
    let down: Vec<Vec<ObjId>> = p.objects().map(|c| p.objects().filter(|&x| !p.hom(x, c).is_empty()).collect()).collect();
    let up: Vec<Vec<ObjId>> = p.objects().map(|c| p.objects().filter(|&x| !p.hom(c, x).is_empty()).collect()).collect();
    let dv: Vec<Arc<FinCat>> = down.iter().map(|s| Arc::new(p.full_subcategory(s))).collect();
    let uv: Vec<Arc<FinCat>> = up.iter().map(|s| Arc::new(p.full_subcategory(s))).collect();
    let mut et = Vec::new();
    let mut wt = Vec::new();
    for f in k.one_cells() {
        let (c, d) = (k.dom(f), k.cod(f));
        et.push(inclusion(p, &down[c], &dv[c], &down[d], &dv[d]));
        wt.push(inclusion(p, &up[d], &uv[d], &up[c], &uv[c]));
    }
    let ec = k.two_cells().map(|a| NatTransf::identity(&et[k.src(a)])).collect();
    let wc = k.two_cells().map(|a| NatTransf::identity(&wt[k.src(a)])).collect();
    let e = PseudoFunctor::strict(Variance::Covariant, k.clone(), dv, et, ec);
    let w = PseudoFunctor::strict(Variance::Contravariant, k, uv, wt, wc);
    (Arc::new(e), Arc::new(w))
}

/// `F × c`: every value multiplied by `c`, every structure cell by an identity.
pub fn times(f: &PseudoFunctor, c: &Arc<FinCat>) -> PseudoFunctor {
    let k = &*f.shape;
    let id = Functor::identity(c);
    let idt = NatTransf::identity(&id);
    let values: Vec<Arc<FinCat>> = f.values.iter().map(|v| Arc::new(canonical_names(&FinCat::product(v, c)))).collect();
    let transition: Vec<Functor> = k
        .one_cells()
        .map(|g| Functor::product(&f.transition[g], &id, &values[f.vdom(g)], &values[f.vcod(g)]))
        .collect();
    let cell_image = k
        .two_cells()
        .map(|a| NatTransf::product(&f.cell_image[a], &idt, transition[k.src(a)].clone(), transition[k.tgt(a)].clone()))
        .collect();
    let compositor = f
        .compositor
        .iter()
        .map(|(&(a, b), phi)| {
            let (first, second) = if f.is_covariant() { (a, b) } else { (b, a) };
            let src = transition[first].then(&transition[second]).expect("typed");
            let tgt = transition[k.hc1(a, b)].clone();
            ((a, b), NatTransf::product(phi, &idt, src, tgt))
        })
        .collect();
    PseudoFunctor {
        variance: f.variance,
        shape: f.shape.clone(),
        values,
        transition,
        cell_image,
        compositor,
    }
}

/// A random natural isomorphism out of `f`, built by moving each image
/// object along a random isomorphism.
pub fn random_iso_from(rng: &mut impl Rng, f: &Functor) -> NatTransf {
    let x = &*f.target;
    let comps: Vec<ArrowId> = f
        .source
        .objects()
        .map(|o| {
            let fo = f.obj(o);
            let isos: Vec<ArrowId> = x
                .objects()
                .flat_map(|y| x.hom(fo, y).iter().copied())
                .filter(|&a| x.is_iso(a))
                .collect();
            *isos.choose(rng).expect("identity is an isomorphism")
        })
        .collect();
    let src = &*f.source;
    let arr_map = src
        .arrows()
        .map(|a| {
            let inv = x.inverse(comps[src.dom(a)]).expect("iso");
            x.comp_path(&[inv, f.arr(a), comps[src.cod(a)]])
        })
        .collect();
    let obj_map = comps.iter().map(|&a| x.cod(a)).collect();
    let g = Functor::new(f.source.clone(), f.target.clone(), obj_map, arr_map);
    NatTransf::new(f.clone(), g, comps)
}

/// `G` with transitions `G_f ≅ F_f` through random isomorphisms `τ_f`
/// (identities on identity 1-cells), cells and compositors conjugated so
/// that `τ` is a pseudo-natural transformation `F ⇒ G` with identity
/// components. Returns `G` and `τ`.
pub fn transport(rng: &mut impl Rng, f: &PseudoFunctor) -> (PseudoFunctor, Vec<NatTransf>) {
    let k = &*f.shape;
    let tau: Vec<NatTransf> = k
        .one_cells()
        .map(|g| {
            if k.is_id1(g) {
                NatTransf::identity(&f.transition[g])
            } else {
                random_iso_from(rng, &f.transition[g])
            }
        })
        .collect();
    let inv: Vec<NatTransf> = tau.iter().map(|t| t.inverse().expect("iso")).collect();
    let transition: Vec<Functor> = tau.iter().map(|t| t.target.clone()).collect();
    let cell_image = k
        .two_cells()
        .map(|a| {
            let t = inv[k.src(a)].vcompose(&f.cell_image[a]).expect("typed");
            t.vcompose(&tau[k.tgt(a)]).expect("typed")
        })
        .collect();
    let compositor = f
        .compositor
        .iter()
        .map(|(&(a, b), phi)| {
            let (first, second) = if f.is_covariant() { (a, b) } else { (b, a) };
            let both = NatTransf::hcompose(&tau[first], &tau[second]).expect("typed");
            let c = both.inverse().expect("iso").vcompose(phi).expect("typed");
            ((a, b), c.vcompose(&tau[k.hc1(a, b)]).expect("typed"))
        })
        .collect();
    let g = PseudoFunctor {
        variance: f.variance,
        shape: f.shape.clone(),
        values: f.values.clone(),
        transition,
        cell_image,
        compositor,
    };
    (g, tau)
}

/// The pseudo-natural transformation `F ⇒ G` with identity components and
/// coherence cells `τ`.
pub fn transport_nat(f: &Arc<PseudoFunctor>, g: &Arc<PseudoFunctor>, tau: &[NatTransf]) -> PseudoNat {
    PseudoNat {
        source: f.clone(),
        target: g.clone(),
        component: f.values.iter().map(Functor::identity).collect(),
        coherence: tau.to_vec(),
    }
}

/// Same, in the direction `G ⇒ F`.
pub fn transport_nat_back(f: &Arc<PseudoFunctor>, g: &Arc<PseudoFunctor>, tau: &[NatTransf]) -> PseudoNat {
    PseudoNat {
        source: g.clone(),
        target: f.clone(),
        component: f.values.iter().map(Functor::identity).collect(),
        coherence: tau.iter().map(|t| t.inverse().expect("iso")).collect(),
    }
}

/// An arrow of `x` whose endpoints differ from those of `a`.
pub fn mistyped(rng: &mut impl Rng, x: &FinCat, a: ArrowId) -> Option<ArrowId> {
    let ends = (x.dom(a), x.cod(a));
    let others: Vec<ArrowId> = x.arrows().filter(|&b| (x.dom(b), x.cod(b)) != ends).collect();
    others.choose(rng).copied()
}

/// A non-invertible arrow with the endpoints of `a`.
pub fn non_iso_parallel(rng: &mut impl Rng, x: &FinCat, a: ArrowId) -> Option<ArrowId> {
    let others: Vec<ArrowId> = x.hom(x.dom(a), x.cod(a)).iter().copied().filter(|&b| !x.is_iso(b)).collect();
    others.choose(rng).copied()
}

/// A single-cell change that no validator may accept, with the law and the
/// cells the rejection must name.
pub struct Mutation<T> {
    pub what: String,
    pub mutant: T,
    pub laws: Vec<Law>,
    pub witness: Vec<CellRef>,
}

/// Every available single-cell mutation of `f`, one per site kind, each
/// at a random site.
pub fn mutate_functor(rng: &mut impl Rng, f: &PseudoFunctor) -> Vec<Mutation<PseudoFunctor>> {
    let k = &*f.shape;
    let mut out = Vec::new();

    let mut ones: Vec<OneId> = k.one_cells().collect();
    ones.shuffle(rng);
    'tr: for &g in &ones {
        let t = &f.transition[g];
        let mut arrows: Vec<ArrowId> = t.source.arrows().collect();
        arrows.shuffle(rng);
        for a in arrows {
            if let Some(b) = mistyped(rng, &t.target, t.arr(a)) {
                let mut m = f.clone();
                m.transition[g].arr_map[a] = b;
                out.push(Mutation {
                    what: format!("transition of 1-cell {g} at arrow {a}"),
                    mutant: m,
                    laws: vec![Law::TransitionTyping],
                    witness: vec![CellRef::OneCell(g)],
                });
                break 'tr;
            }
        }
    }

    let mut twos: Vec<usize> = k.two_cells().collect();
    twos.shuffle(rng);
    'cell: for &a in &twos {
        let t = &f.cell_image[a];
        let x = &*t.source.target;
        for o in 0..t.components.len() {
            if let Some(b) = mistyped(rng, x, t.at(o)) {
                let mut m = f.clone();
                m.cell_image[a].components[o] = b;
                out.push(Mutation {
                    what: format!("image of 2-cell {a} at object {o}"),
                    mutant: m,
                    laws: vec![Law::CellImageTyping],
                    witness: vec![CellRef::TwoCell(a)],
                });
                break 'cell;
            }
        }
    }

    let mut keys: Vec<(OneId, OneId)> = f.compositor.keys().copied().collect();
    keys.sort();
    keys.shuffle(rng);
    let view = |(a, b): (OneId, OneId)| if f.is_covariant() { (a, b) } else { (b, a) };
    'comp: for &key in &keys {
        let t = &f.compositor[&key];
        let x = &*t.source.target;
        let (first, second) = view(key);
        for o in 0..t.components.len() {
            if let Some(b) = mistyped(rng, x, t.at(o)) {
                let mut m = f.clone();
                m.compositor.get_mut(&key).expect("key").components[o] = b;
                out.push(Mutation {
                    what: format!("compositor at ({first}, {second}) object {o}, mistyped"),
                    mutant: m,
                    laws: vec![Law::CompositorTyping],
                    witness: vec![CellRef::OneCell(first), CellRef::OneCell(second)],
                });
                break 'comp;
            }
        }
    }
    'noniso: for &key in &keys {
        let t = &f.compositor[&key];
        let x = &*t.source.target;
        let (first, second) = view(key);
        for o in 0..t.components.len() {
            if let Some(b) = non_iso_parallel(rng, x, t.at(o)) {
                let mut m = f.clone();
                m.compositor.get_mut(&key).expect("key").components[o] = b;
                out.push(Mutation {
                    what: format!("compositor at ({first}, {second}) object {o}, not invertible"),
                    mutant: m,
                    // unnatural replacements are caught before invertibility
                    laws: vec![Law::CompositorTyping, Law::NotInvertible],
                    witness: vec![CellRef::OneCell(first), CellRef::OneCell(second)],
                });
                break 'noniso;
            }
        }
    }
    out
}

/// Every available single-cell mutation of `t`.
pub fn mutate_nat(rng: &mut impl Rng, t: &PseudoNat) -> Vec<Mutation<PseudoNat>> {
    let k = &*t.source.shape;
    let mut out = Vec::new();

    let mut objs: Vec<ObjId> = k.objects().collect();
    objs.shuffle(rng);
    'comp: for &o in &objs {
        let c = &t.component[o];
        for a in c.source.arrows() {
            if let Some(b) = mistyped(rng, &c.target, c.arr(a)) {
                let mut m = t.clone();
                m.component[o].arr_map[a] = b;
                out.push(Mutation {
                    what: format!("component at object {o}, arrow {a}"),
                    mutant: m,
                    laws: vec![Law::ComponentTyping],
                    witness: vec![CellRef::Object(o)],
                });
                break 'comp;
            }
        }
    }

    let mut ones: Vec<OneId> = k.one_cells().collect();
    ones.shuffle(rng);
    'coh: for &f in &ones {
        let c = &t.coherence[f];
        let x = &*c.source.target;
        for y in 0..c.components.len() {
            if let Some(b) = mistyped(rng, x, c.at(y)) {
                let mut m = t.clone();
                m.coherence[f].components[y] = b;
                out.push(Mutation {
                    what: format!("coherence cell of 1-cell {f} at object {y}, mistyped"),
                    mutant: m,
                    laws: vec![Law::CoherenceTyping],
                    witness: vec![CellRef::OneCell(f)],
                });
                break 'coh;
            }
        }
    }
    'noniso: for &f in &ones {
        let c = &t.coherence[f];
        let x = &*c.source.target;
        for y in 0..c.components.len() {
            if let Some(b) = non_iso_parallel(rng, x, c.at(y)) {
                let mut m = t.clone();
                m.coherence[f].components[y] = b;
                out.push(Mutation {
                    what: format!("coherence cell of 1-cell {f} at object {y}, not invertible"),
                    mutant: m,
                    laws: vec![Law::CoherenceTyping, Law::NotInvertible],
                    witness: vec![CellRef::OneCell(f)],
                });
                break 'noniso;
            }
        }
    }
    out
}

/// Every functor `c -> x`: each object assignment with each arrow
/// assignment respecting endpoints, filtered through the validator.
pub fn brute_functors(c: &Arc<FinCat>, x: &Arc<FinCat>) -> Vec<Functor> {
    let mut out = Vec::new();
    for obj_map in tuples(c.n_objects(), x.n_objects()) {
        let homs: Vec<&[ArrowId]> = c.arrows().map(|a| x.hom(obj_map[c.dom(a)], obj_map[c.cod(a)])).collect();
        for pick in product_indices(&homs.iter().map(|h| h.len()).collect::<Vec<_>>()) {
            let arr_map = pick.iter().enumerate().map(|(a, &i)| homs[a][i]).collect();
            let f = Functor::new(c.clone(), x.clone(), obj_map.clone(), arr_map);
            if f.validate().is_valid() {
                out.push(f);
            }
        }
    }
    out
}

/// `c` with identities renamed `1<object>`, as the spec format expects.
pub fn canonical_names(c: &FinCat) -> FinCat {
    let mut arrows = c.arrow_names().to_vec();
    for o in c.objects() {
        arrows[c.identity(o)] = format!("1{}", c.obj_name(o));
    }
    c.relabeled(c.obj_names().to_vec(), arrows)
}

/// All sequences of length `len` over `0..base`, in lexicographic order.
pub fn tuples(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Number of component candidates [`brute_pseudo_naturals`] would try
/// before choosing coherence cells, with every arrow assignment counted.
pub fn brute_nat_candidates(f: &PseudoFunctor, g: &PseudoFunctor) -> f64 {
    let k = &*f.shape;
    let mut n = 1f64;
    for o in k.objects() {
        let (s, t) = (f.value(o), g.value(o));
        n *= (t.n_objects() as f64).powi(s.n_objects() as i32) * (t.n_arrows() as f64).powi(s.n_arrows() as i32);
    }
    for h in k.one_cells() {
        let (s, t) = (f.value(f.vdom(h)), g.value(g.vcod(h)));
        n *= (t.n_arrows() as f64).powi(s.n_objects() as i32);
    }
    n
}

/// Every pseudo-natural transformation `f ⇒ g`: all component functors
/// (by [`brute_functors`]) and every endpoint-respecting choice of
/// coherence components, kept when [`PseudoNat::validate`] accepts them.
pub fn brute_pseudo_naturals(f: &Arc<PseudoFunctor>, g: &Arc<PseudoFunctor>) -> Vec<PseudoNat> {
    let k = &*f.shape;
    let comps: Vec<Vec<Functor>> = k.objects().map(|o| brute_functors(f.value(o), g.value(o))).collect();
    let mut out = Vec::new();
    for choice in product_indices(&comps.iter().map(Vec::len).collect::<Vec<_>>()) {
        let component: Vec<Functor> = choice.iter().enumerate().map(|(o, &i)| comps[o][i].clone()).collect();
        let shells: Vec<(Functor, Functor, Vec<&[ArrowId]>)> = k
            .one_cells()
            .map(|h| {
                let (a, b) = (f.vdom(h), f.vcod(h));
                let src = f.tr(h).then(&component[b]).expect("typed");
                let tgt = component[a].then(g.tr(h)).expect("typed");
                let x = g.value(b);
                let homs = f.value(a).objects().map(|y| x.hom(src.obj(y), tgt.obj(y))).collect();
                (src, tgt, homs)
            })
            .collect();
        let per_cell: Vec<Vec<Vec<usize>>> = shells
            .iter()
            .map(|(_, _, homs)| {
                product_indices(&homs.iter().map(|h| h.len()).collect::<Vec<_>>())
                    .into_iter()
                    .map(|pick| pick.iter().enumerate().map(|(y, &i)| homs[y][i]).collect())
                    .collect()
            })
            .collect();
        for pick in product_indices(&per_cell.iter().map(Vec::len).collect::<Vec<_>>()) {
            let coherence = pick
                .iter()
                .enumerate()
                .map(|(h, &i)| NatTransf::new(shells[h].0.clone(), shells[h].1.clone(), per_cell[h][i].clone()))
                .collect();
            let t = PseudoNat {
                source: f.clone(),
                target: g.clone(),
                component: component.clone(),
                coherence,
            };
            if t.validate().is_valid() {
                out.push(t);
            }
        }
    }
    out
}

/// A comparable key for the data of `t`.
pub fn nat_key(t: &PseudoNat) -> (Vec<(Vec<usize>, Vec<usize>)>, Vec<Vec<usize>>) {
    (
        t.component.iter().map(|c| (c.obj_map.clone(), c.arr_map.clone())).collect(),
        t.coherence.iter().map(|c| c.components.clone()).collect(),
    )
}

/// All index vectors below the given bounds.
pub fn product_indices(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..b).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Whether `c` has a cone over its whole identity diagram: an object `z`
/// with legs `l_x: z -> x` such that `l_x;f = l_y` for every `f: x -> y`.
/// For a finite category this is equivalent to the span-and-equalizer form
/// of filteredness.
pub fn has_total_cone(c: &FinCat) -> bool {
    fn search(c: &FinCat, z: ObjId, legs: &mut Vec<ArrowId>) -> bool {
        let x = legs.len();
        if x == c.n_objects() {
            return c.arrows().all(|f| c.comp(legs[c.dom(f)], f) == legs[c.cod(f)]);
        }
        for &l in c.hom(z, x) {
            // arrows among already chosen legs must already commute
            let ok = c.arrows().filter(|&f| c.dom(f) <= x && c.cod(f) <= x).all(|f| {
                let leg = |o: ObjId| if o == x { l } else { legs[o] };
                c.comp(leg(c.dom(f)), f) == leg(c.cod(f))
            });
            if ok {
                legs.push(l);
                if search(c, z, legs) {
                    return true;
                }
                legs.pop();
            }
        }
        false
    }
    c.objects().any(|z| search(c, z, &mut Vec::new()))
}

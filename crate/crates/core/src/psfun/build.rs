use super::{PseudoFunctor, Variance};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{functor_category, FinCat, Functor, FunctorCategory, NatTransf};
use crate::twocat::TwoCat;
use std::collections::HashMap;
use std::sync::Arc;

/// `Cat(E, X)`: the contravariant pseudo-functor `C ↦ [E(C), X]`, together
/// with the functor categories realizing its values.
#[derive(Debug, Clone)]
pub struct HomPseudoFunctor {
    pub functor: Arc<PseudoFunctor>,
    pub categories: Vec<FunctorCategory>,
    pub e: Arc<PseudoFunctor>,
    pub x: Arc<FinCat>,
}

fn lookup<T>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Internal(format!("{what} missing from functor category")))
}

/// Builds `Cat(e, x)`. Transitions precompose with `f_!`; cells and
/// compositors are images of those of `e` under each functor.
pub fn hom_pseudo_functor(e: &Arc<PseudoFunctor>, x: &Arc<FinCat>, budget: Budget) -> Result<HomPseudoFunctor> {
    if !e.is_covariant() {
        return Err(Error::Precondition("hom pseudo-functor needs a covariant argument".into()));
    }
    let k = &e.shape;
    let categories = e
        .values
        .iter()
        .map(|v| functor_category(v, x, budget))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<Arc<FinCat>> = categories.iter().map(|c| c.cat.clone()).collect();

    // f^*: [E(D), X] -> [E(C), X] for f: C -> D
    let mut transition = Vec::with_capacity(k.n_one());
    for f in k.one_cells() {
        let (c, d) = (k.dom(f), k.cod(f));
        let (fc, fd) = (&categories[c], &categories[d]);
        let ef = e.tr(f);
        let obj_map = fd
            .functors
            .iter()
            .map(|g| lookup(fc.object_of(&ef.then(g)?), "precomposite"))
            .collect::<Result<Vec<_>>>()?;
        let arr_map = fd
            .transfs
            .iter()
            .map(|t| lookup(fc.arrow_of(&NatTransf::whisker_pre(ef, t)?), "whiskering"))
            .collect::<Result<Vec<_>>>()?;
        transition.push(Functor::new(values[d].clone(), values[c].clone(), obj_map, arr_map));
    }

    // α^* at G has components G((α_!)_X)
    let mut cell_image = Vec::with_capacity(k.n_two());
    for a in k.two_cells() {
        let (f, g) = (k.src(a), k.tgt(a));
        let (c, d) = (k.dom(f), k.cod(f));
        let ea = &e.cell_image[a];
        let comps = categories[d]
            .functors
            .iter()
            .map(|h| {
                let t = NatTransf::new(
                    e.tr(f).then(h)?,
                    e.tr(g).then(h)?,
                    ea.components.iter().map(|&u| h.arr(u)).collect(),
                );
                lookup(categories[c].arrow_of(&t), "cell image component")
            })
            .collect::<Result<Vec<_>>>()?;
        cell_image.push(NatTransf::new(transition[f].clone(), transition[g].clone(), comps));
    }

    // compositor at (f, g) and G has components G(φ_{f,g,X})
    let mut compositor = HashMap::new();
    for f in k.one_cells() {
        for g in k.out_ones(k.cod(f)) {
            let fg = k.hc1(f, g);
            let (c, b) = (k.dom(f), k.cod(g));
            let phi = e.vcompositor(f, g).ok_or_else(|| Error::Precondition("missing compositor".into()))?;
            let comps = categories[b]
                .functors
                .iter()
                .map(|h| {
                    let t = NatTransf::new(
                        e.tr(f).then(&e.tr(g).then(h)?)?,
                        e.tr(fg).then(h)?,
                        phi.components.iter().map(|&u| h.arr(u)).collect(),
                    );
                    lookup(categories[c].arrow_of(&t), "compositor component")
                })
                .collect::<Result<Vec<_>>>()?;
            let src = transition[g].then(&transition[f])?;
            compositor.insert((f, g), NatTransf::new(src, transition[fg].clone(), comps));
        }
    }
    let functor = PseudoFunctor {
        variance: Variance::Contravariant,
        shape: k.clone(),
        values,
        transition,
        cell_image,
        compositor,
    };
    Ok(HomPseudoFunctor {
        functor: Arc::new(functor),
        categories,
        e: e.clone(),
        x: x.clone(),
    })
}

/// The representable `K(-, c)`: a strict contravariant pseudo-functor whose
/// value at `b` is the hom-category `K(b, c)` as numbered by
/// [`TwoCat::hom_category`].
pub fn representable(k: &Arc<TwoCat>, c: usize) -> Result<PseudoFunctor> {
    let homs = k
        .objects()
        .map(|b| k.hom_category(b, c))
        .collect::<Result<Vec<_>>>()?;
    let pos1: Vec<HashMap<usize, usize>> = homs
        .iter()
        .map(|(_, ones, _)| ones.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    let pos2: Vec<HashMap<usize, usize>> = homs
        .iter()
        .map(|(_, _, twos)| twos.iter().enumerate().map(|(i, &a)| (a, i)).collect())
        .collect();
    let values: Vec<Arc<FinCat>> = homs.iter().map(|(cat, _, _)| Arc::new(cat.clone())).collect();
    let mut transition = Vec::new();
    for f in k.one_cells() {
        let (a, b) = (k.dom(f), k.cod(f));
        let (_, ones_b, twos_b) = &homs[b];
        let obj_map = ones_b.iter().map(|&g| pos1[a][&k.hc1(f, g)]).collect();
        let arr_map = twos_b.iter().map(|&s| pos2[a][&k.hc2(k.id2(f), s)]).collect();
        transition.push(Functor::new(values[b].clone(), values[a].clone(), obj_map, arr_map));
    }
    let mut cell_image = Vec::new();
    for al in k.two_cells() {
        let (f, g) = (k.src(al), k.tgt(al));
        let (a, b) = (k.dom(f), k.cod(f));
        let comps = homs[b]
            .1
            .iter()
            .map(|&h| pos2[a][&k.hc2(al, k.id2(h))])
            .collect();
        cell_image.push(NatTransf::new(transition[f].clone(), transition[g].clone(), comps));
    }
    Ok(PseudoFunctor::strict(
        Variance::Contravariant,
        k.clone(),
        values,
        transition,
        cell_image,
    ))
}

/// `E × W` on `K × K^op`, with value `E(c) × W(d)` at `(c, d)`.
pub fn product_bifunctor(e: &PseudoFunctor, w: &PseudoFunctor, budget: Budget) -> Result<PseudoFunctor> {
    if !e.is_covariant() || w.is_covariant() {
        return Err(Error::Precondition("product bifunctor needs covariant E and contravariant W".into()));
    }
    if *e.shape != *w.shape {
        return Err(Error::Precondition("E and W have different shapes".into()));
    }
    let k = &*e.shape;
    let p = Arc::new(TwoCat::product(k, &k.op_dual(), budget)?);
    let (n0, n1, n2) = (k.n_objects(), k.n_one(), k.n_two());
    let mut values = Vec::with_capacity(n0 * n0);
    for c in 0..n0 {
        for d in 0..n0 {
            values.push(Arc::new(FinCat::product(e.value(c), w.value(d))));
        }
    }
    let mut transition = Vec::with_capacity(n1 * n1);
    for h in 0..n1 {
        for kk in 0..n1 {
            let src = &values[p.dom(h * n1 + kk)];
            let tgt = &values[p.cod(h * n1 + kk)];
            transition.push(Functor::product(e.tr(h), w.tr(kk), src, tgt));
        }
    }
    let mut cell_image = Vec::with_capacity(n2 * n2);
    for g in 0..n2 {
        for t in 0..n2 {
            let s1 = transition[k.src(g) * n1 + k.src(t)].clone();
            let t1 = transition[k.tgt(g) * n1 + k.tgt(t)].clone();
            cell_image.push(NatTransf::product(&e.cell_image[g], &w.cell_image[t], s1, t1));
        }
    }
    let mut compositor = HashMap::new();
    for x in p.one_cells() {
        for y in p.out_ones(p.cod(x)) {
            let (h, kk) = (x / n1, x % n1);
            let (h2, k2) = (y / n1, y % n1);
            let phi_e = e.compositor.get(&(h, h2));
            // in K the composite of the second components is k2;kk
            let phi_w = w.compositor.get(&(k2, kk));
            let (Some(pe), Some(pw)) = (phi_e, phi_w) else {
                return Err(Error::Precondition("missing compositor".into()));
            };
            let src = transition[x].then(&transition[y])?;
            let tgt = transition[p.hc1(x, y)].clone();
            compositor.insert((x, y), NatTransf::product(pe, pw, src, tgt));
        }
    }
    Ok(PseudoFunctor {
        variance: Variance::Covariant,
        shape: p,
        values,
        transition,
        cell_image,
        compositor,
    })
}

/// The hom bifunctor `K(-, -)` as a strict contravariant pseudo-functor on
/// `K × K^op`: the transition at `(h, k)` sends `g` to `h;g;k`.
pub fn hom_bifunctor(k: &TwoCat, budget: Budget) -> Result<PseudoFunctor> {
    let p = Arc::new(TwoCat::product(k, &k.op_dual(), budget)?);
    let (n0, n1) = (k.n_objects(), k.n_one());
    let mut homs = Vec::with_capacity(n0 * n0);
    for c in 0..n0 {
        for d in 0..n0 {
            homs.push(k.hom_category(c, d)?);
        }
    }
    let pos1: Vec<HashMap<usize, usize>> = homs
        .iter()
        .map(|(_, ones, _)| ones.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    let pos2: Vec<HashMap<usize, usize>> = homs
        .iter()
        .map(|(_, _, twos)| twos.iter().enumerate().map(|(i, &a)| (a, i)).collect())
        .collect();
    let values: Vec<Arc<FinCat>> = homs.iter().map(|(cat, _, _)| Arc::new(cat.clone())).collect();
    let mut transition = Vec::with_capacity(n1 * n1);
    for h in 0..n1 {
        for kk in 0..n1 {
            let x = h * n1 + kk;
            let (lo, hi) = (p.dom(x), p.cod(x));
            let (_, ones, twos) = &homs[hi];
            let obj_map = ones.iter().map(|&g| pos1[lo][&k.hc1(k.hc1(h, g), kk)]).collect();
            let arr_map = twos
                .iter()
                .map(|&s| pos2[lo][&k.hc2(k.hc2(k.id2(h), s), k.id2(kk))])
                .collect();
            transition.push(Functor::new(values[hi].clone(), values[lo].clone(), obj_map, arr_map));
        }
    }
    let n2 = k.n_two();
    let mut cell_image = Vec::with_capacity(n2 * n2);
    for gm in 0..n2 {
        for th in 0..n2 {
            let x = k.src(gm) * n1 + k.src(th);
            let y = k.tgt(gm) * n1 + k.tgt(th);
            let (lo, hi) = (p.dom(x), p.cod(x));
            let comps = homs[hi]
                .1
                .iter()
                .map(|&g| pos2[lo][&k.hc2(k.hc2(gm, k.id2(g)), th)])
                .collect();
            cell_image.push(NatTransf::new(transition[x].clone(), transition[y].clone(), comps));
        }
    }
    Ok(PseudoFunctor::strict(Variance::Contravariant, p, values, transition, cell_image))
}

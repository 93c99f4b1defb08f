use super::delta::{build_delta, DeltaTwoCat};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{enumerate_functors_where, functor_category_on, ArrowId, FinCat, FunctorCategory};
use crate::psfun::PseudoFunctor;
use crate::twocat::{pi0, Pi0Result};
use std::collections::HashMap;
use std::sync::Arc;

/// A finite category with a set of marked arrows, presenting a weighted
/// pseudo-colimit as a localization.
#[derive(Debug, Clone)]
pub struct ColimitPresentation {
    pub p: Arc<FinCat>,
    /// Marked arrows: classes containing a cartesian 1-cell.
    pub sigma: Vec<bool>,
    pub labels: Pi0Result,
    pub delta: Arc<DeltaTwoCat>,
}

impl ColimitPresentation {
    pub fn sigma_arrows(&self) -> impl Iterator<Item = ArrowId> + '_ {
        self.p.arrows().filter(|&a| self.sigma[a])
    }

    /// Whether `a;b` is marked whenever `a`, `b` are marked and the composite
    /// class contains a cartesian 1-cell.
    pub fn sigma_closure_failure(&self) -> Option<(ArrowId, ArrowId)> {
        let d = &self.delta;
        for d1 in d.carrier.one_cells() {
            if !d.cartesian[d1] {
                continue;
            }
            for d2 in d.carrier.out_ones(d.carrier.cod(d1)) {
                if !d.cartesian[d2] {
                    continue;
                }
                let h = d.carrier.hc1(d1, d2);
                if !d.cartesian[h] {
                    let (a, b) = (self.labels.class_of[d1], self.labels.class_of[d2]);
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// Builds `(π₀ Δ(E,W), Σ)`.
pub fn pscolim_presentation(
    e: &Arc<PseudoFunctor>,
    w: &Arc<PseudoFunctor>,
    budget: Budget,
) -> Result<ColimitPresentation> {
    let delta = build_delta(e, w, budget)?;
    let labels = pi0(&delta.carrier)?;
    let mut sigma = vec![false; labels.quotient.n_arrows()];
    for d in delta.carrier.one_cells() {
        if delta.cartesian[d] {
            sigma[labels.class_of[d]] = true;
        }
    }
    Ok(ColimitPresentation {
        p: Arc::new(labels.quotient.clone()),
        sigma,
        labels,
        delta: Arc::new(delta),
    })
}

/// The category of elements of a pseudo-functor on a locally discrete shape
/// with its cartesian arrows, built directly. Agrees with
/// [`pscolim_presentation`] against the terminal weight.
pub fn conical_oracle(e: &PseudoFunctor, budget: Budget) -> Result<(FinCat, Vec<bool>)> {
    let k = &*e.shape;
    k.require_locally_discrete()?;
    if !e.is_covariant() {
        return Err(Error::Precondition("conical oracle needs a covariant functor".into()));
    }
    let mut meter = budget.meter("category of elements");
    let objs: Vec<(usize, usize)> = k
        .objects()
        .flat_map(|c| e.value(c).objects().map(move |x| (c, x)))
        .collect();
    let mut arrows = Vec::new();
    let mut label = Vec::new();
    for (s, &(c, x)) in objs.iter().enumerate() {
        for (t, &(d, y)) in objs.iter().enumerate() {
            for &f in k.hom(c, d) {
                for &u in e.value(d).hom(e.tr(f).obj(x), y) {
                    meter.tick()?;
                    arrows.push((format!("{}:{}", k.one_name(f), e.value(d).arrow_name(u)), s, t));
                    label.push((f, u));
                }
            }
        }
    }
    let index: HashMap<(usize, usize, usize, usize), usize> = label
        .iter()
        .zip(&arrows)
        .enumerate()
        .map(|(i, (&(f, u), (_, s, t)))| ((*s, *t, f, u), i))
        .collect();
    let identity = objs
        .iter()
        .enumerate()
        .map(|(i, &(c, x))| index[&(i, i, k.id1(c), e.value(c).identity(x))])
        .collect();
    let ends: Vec<(usize, usize)> = arrows.iter().map(|(_, s, t)| (*s, *t)).collect();
    let sigma = label
        .iter()
        .map(|&(f, u)| e.value(k.cod(f)).is_iso(u))
        .collect();
    let names = objs
        .iter()
        .map(|&(c, x)| format!("({},{})", k.obj_name(c), e.value(c).obj_name(x)))
        .collect();
    let cat = FinCat::from_fn(names, arrows, identity, |a, b| {
        let ((f, u), (g, y)) = (label[a], label[b]);
        let (s, t) = (ends[a].0, ends[b].1);
        let x = objs[s].1;
        let fg = k.hc1(f, g);
        let ed = e.value(k.cod(g));
        // (f,u);(g,y) = (f;g, φ⁻¹ ; g_!(u) ; y)
        let back = ed.inverse(e.compositor[&(f, g)].at(x))?;
        let v = ed.compose(ed.compose(back, e.tr(g).arr(u))?, y)?;
        index.get(&(s, t, fg, v)).copied()
    })?;
    Ok((cat, sigma))
}

/// Functors `p -> x` sending every marked arrow to an isomorphism, with the
/// transformations between them. Marked arrows are pruned during the search.
pub fn sigma_functor_cat(pres: &ColimitPresentation, x: &Arc<FinCat>, budget: Budget) -> Result<FunctorCategory> {
    let functors = enumerate_functors_where(&pres.p, x, budget, |a, img| !pres.sigma[a] || x.is_iso(img))?;
    functor_category_on(functors, budget)
}

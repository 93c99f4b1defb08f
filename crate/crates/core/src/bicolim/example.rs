use super::tensor::build_tensor;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{find_isomorphism, FinCat};
use crate::pscolim::{localize, pscolim_presentation, LocStatus, LocalizedCat, Strategy};
use crate::seeds::seed2;
use serde::Serialize;
use std::sync::Arc;

/// A localized category in report form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalizationSummary {
    pub presented_objects: Vec<String>,
    pub presented_arrows: Vec<String>,
    pub marked: Vec<String>,
    pub strategy: Strategy,
    pub status: LocStatus,
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
    pub is_groupoid: bool,
    /// Non-invertible endomorphisms `e` with `e;e = e`.
    pub noninvertible_idempotents: Vec<String>,
}

/// Report form of `loc`, a localization of `p` at the marked arrows.
pub fn summarize_localization(p: &FinCat, sigma: &[bool], loc: &LocalizedCat) -> LocalizationSummary {
    let render = |c: &FinCat, a: usize| format!("{}: {} -> {}", c.arrow_name(a), c.obj_name(c.dom(a)), c.obj_name(c.cod(a)));
    let mut s = LocalizationSummary {
        presented_objects: p.obj_names().to_vec(),
        presented_arrows: p.arrows().map(|a| render(p, a)).collect(),
        marked: p.arrows().filter(|&a| sigma[a]).map(|a| p.arrow_name(a).to_string()).collect(),
        strategy: loc.strategy,
        status: loc.status.clone(),
        objects: Vec::new(),
        arrows: Vec::new(),
        is_groupoid: false,
        noninvertible_idempotents: Vec::new(),
    };
    if let Some(r) = &loc.result {
        s.objects = r.obj_names().to_vec();
        s.arrows = r.arrows().map(|a| render(r, a)).collect();
        s.is_groupoid = r.is_groupoid();
        s.noninvertible_idempotents = r
            .arrows()
            .filter(|&a| r.dom(a) == r.cod(a) && r.comp(a, a) == a && !r.is_iso(a))
            .map(|a| r.arrow_name(a).to_string())
            .collect();
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// The skeleta are isomorphic.
    Equivalent,
    NotEquivalent,
    /// A localization could not be decided within budget.
    Undetermined,
}

/// The pseudo-colimit and the bicolimit of the constant point over the
/// idempotent 2-cell shape, side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub pseudo: LocalizationSummary,
    pub bi: LocalizationSummary,
    /// The tensor 1-cell `(1, 1, 1, 1, ξ)` on `(X, X, •, •, x)`.
    pub generator: String,
    pub generator_cartesian: bool,
    pub generator_class_marked: bool,
    /// Image of the generator's class in the localized tensor presentation.
    pub generator_image: Option<String>,
    pub generator_image_invertible: Option<bool>,
    pub comparison: Comparison,
}

impl CounterexampleReport {
    /// Whether the outcome separates the two colimits as expected: a
    /// groupoid on the pseudo side, a non-invertible idempotent on the bi
    /// side.
    pub fn separates(&self) -> bool {
        self.pseudo.is_groupoid
            && self.pseudo.objects.len() == 1
            && self.pseudo.arrows.len() == 1
            && !self.bi.noninvertible_idempotents.is_empty()
            && self.comparison == Comparison::NotEquivalent
    }
}

pub fn example_idempotent(budget: Budget) -> Result<CounterexampleReport> {
    let s = seed2();
    let pres = pscolim_presentation(&s.e, &s.w, budget)?;
    let ploc = localize(&pres, budget);
    let tensor = build_tensor(&s.e, &s.w, budget)?;
    let tp = &tensor.underlying;
    let bloc = localize(tp, budget);

    let k = &*tensor.shape;
    let x = k.find_one("x").ok_or_else(|| Error::Internal("shape has no x".into()))?;
    let xi = k.find_two("ξ").ok_or_else(|| Error::Internal("shape has no ξ".into()))?;
    let id = k.id1(0);
    let obj = tensor
        .object_of((0, 0, 0, 0, x))
        .ok_or_else(|| Error::Internal("object (X,X,•,•,x) missing".into()))?;
    let gen = tensor
        .one_cell_of(obj, obj, (id, id, 0, 0, xi))
        .ok_or_else(|| Error::Internal("generator 1-cell missing".into()))?;
    let cls = tp.labels.class_of[gen];
    let (generator_image, generator_image_invertible) = match (&bloc.result, &bloc.localization_functor) {
        (Some(r), Some(l)) => (Some(r.arrow_name(l.arr(cls)).to_string()), Some(r.is_iso(l.arr(cls)))),
        _ => (None, None),
    };
    let pseudo = summarize_localization(&pres.p, &pres.sigma, &ploc);
    let bi = summarize_localization(&tp.p, &tp.sigma, &bloc);
    let comparison = match (&ploc.result, &bloc.result) {
        (Some(a), Some(b)) => {
            let (sa, sb) = (Arc::new(a.skeleton()), Arc::new(b.skeleton()));
            if find_isomorphism(&sa, &sb, budget)?.is_some() {
                Comparison::Equivalent
            } else {
                Comparison::NotEquivalent
            }
        }
        _ => Comparison::Undetermined,
    };
    Ok(CounterexampleReport {
        pseudo,
        bi,
        generator: tensor.underlying.delta.carrier.one_name(gen).to_string(),
        generator_cartesian: tp.delta.cartesian[gen],
        generator_class_marked: tp.sigma[cls],
        generator_image,
        generator_image_invertible,
        comparison,
    })
}

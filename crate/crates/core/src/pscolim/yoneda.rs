use super::localize::{localize, LocalizedCat};
use super::presentation::{pscolim_presentation, ColimitPresentation};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{check_equivalence, ArrowId, Functor, IsoVerdict, NatTransf, ObjId};
use crate::psfun::{representable, PseudoFunctor};
use crate::twocat::{OneId, TwoCat, TwoId};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;

/// Position tables of the hom-categories `K(B, C)` for a fixed `C`.
struct HomTables {
    ones: Vec<Vec<OneId>>,
    twos: Vec<Vec<TwoId>>,
    pos1: Vec<HashMap<OneId, ObjId>>,
    pos2: Vec<HashMap<TwoId, ArrowId>>,
}

impl HomTables {
    fn new(k: &TwoCat, c: ObjId) -> Result<HomTables> {
        let mut t = HomTables {
            ones: Vec::new(),
            twos: Vec::new(),
            pos1: Vec::new(),
            pos2: Vec::new(),
        };
        for b in k.objects() {
            let (_, ones, twos) = k.hom_category(b, c)?;
            t.pos1.push(ones.iter().enumerate().map(|(i, &f)| (f, i)).collect());
            t.pos2.push(twos.iter().enumerate().map(|(i, &a)| (a, i)).collect());
            t.ones.push(ones);
            t.twos.push(twos);
        }
        Ok(t)
    }
}

/// Presentation of `E ⋆ K(-, C)` with the functors comparing it to `E(C)`
/// at the level of `p`.
struct YonedaData {
    pres: ColimitPresentation,
    tables: HomTables,
    /// `X ↦ (C, X, 1_C)` into `p`.
    f_p: Functor,
    /// `(B, X, g) ↦ g_!X` out of `p`.
    g_p: Functor,
}

fn yoneda_data(e: &Arc<PseudoFunctor>, c: ObjId, budget: Budget) -> Result<YonedaData> {
    let k = &e.shape;
    let w = Arc::new(representable(k, c)?);
    let pres = pscolim_presentation(e, &w, budget)?;
    let tables = HomTables::new(k, c)?;
    let d = &pres.delta;
    let ec = e.value(c);
    let id_c = k.id1(c);
    let one_pos = tables.pos1[c][&id_c];
    let id_cell = w.value(c).identity(one_pos);
    let obj = |x: ObjId| d.object(c, x, one_pos).expect("Δ object");
    let f_obj = ec.objects().map(obj).collect();
    let f_arr = ec
        .arrows()
        .map(|u| pres.class(obj(ec.dom(u)), obj(ec.cod(u)), id_c, u, id_cell))
        .collect::<Result<Vec<_>>>()?;
    let f_p = Functor::new(ec.clone(), pres.p.clone(), f_obj, f_arr);

    let g_obj = d
        .obj_label
        .iter()
        .map(|&(b, x, g)| e.tr(tables.ones[b][g]).obj(x))
        .collect();
    let mut g_arr: Vec<Option<ArrowId>> = vec![None; pres.p.n_arrows()];
    for one in d.carrier.one_cells() {
        let (h, u, theta) = d.mor_label[one];
        let (b, x, _) = d.obj_label[d.carrier.dom(one)];
        let (b2, _, g2) = d.obj_label[d.carrier.cod(one)];
        let g2 = tables.ones[b2][g2];
        // (θ_!)_X ; φ⁻¹_{h,g',X} ; g'_!(u)
        let val = ec.comp_path(&[
            e.cell_at(tables.twos[b][theta], x),
            e.comp_inv_at(h, g2, x),
            e.tr(g2).arr(u),
        ]);
        let cls = pres.labels.class_of[one];
        match g_arr[cls] {
            None => g_arr[cls] = Some(val),
            Some(prev) if prev != val => {
                return Err(Error::Internal(format!(
                    "G depends on the representative of {}",
                    pres.p.arrow_name(cls)
                )))
            }
            _ => {}
        }
    }
    let g_arr = g_arr
        .into_iter()
        .map(|a| a.ok_or_else(|| Error::Internal("empty π₀ class".into())))
        .collect::<Result<Vec<_>>>()?;
    let g_p = Functor::new(pres.p.clone(), ec.clone(), g_obj, g_arr);
    Ok(YonedaData { pres, tables, f_p, g_p })
}

/// Outcome of [`yoneda_equivalence`].
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub objects: usize,
    pub arrows: usize,
    /// `G` agrees on all representatives of every class.
    pub g_well_defined: bool,
    /// `F;G` is the identity of `E(C)` on the nose.
    pub gf_identity: bool,
    /// Every unit component is the class of a cartesian 1-cell.
    pub unit_cartesian: bool,
    /// Every `(f, 1, 1)` is cartesian with marked class.
    pub coherence_cartesian: bool,
    pub verdict: IsoVerdict,
    pub witness: Option<String>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.g_well_defined
            && self.gf_identity
            && self.unit_cartesian
            && self.coherence_cartesian
            && self.verdict == IsoVerdict::EquivWithUnit
    }
}

/// Checks `E ⋆ K(-, C) ≃ E(C)` on the materialized localization.
pub fn yoneda_equivalence(e: &Arc<PseudoFunctor>, c: ObjId, budget: Budget) -> Result<(EquivalenceReport, LocalizedCat)> {
    let data = yoneda_data(e, c, budget)?;
    let YonedaData { pres, tables, f_p, g_p } = &data;
    let loc = localize(pres, budget);
    let (result, l) = loc.require_exact()?;
    let d = &pres.delta;
    let k = &*e.shape;
    let mut report = EquivalenceReport {
        objects: result.n_objects(),
        arrows: result.n_arrows(),
        g_well_defined: g_p.validate().is_valid(),
        gf_identity: false,
        unit_cartesian: true,
        coherence_cartesian: true,
        verdict: IsoVerdict::Fail,
        witness: None,
    };
    if !report.g_well_defined {
        report.witness = Some("G is not a functor on p".into());
        return Ok((report, loc));
    }
    if let Some(a) = pres.sigma_arrows().find(|&a| !e.value(c).is_iso(g_p.arr(a))) {
        report.g_well_defined = false;
        report.witness = Some(format!("G sends marked {} to a non-isomorphism", pres.p.arrow_name(a)));
        return Ok((report, loc));
    }
    let f = f_p.then(l)?;
    let g = loc.extend(g_p)?;
    report.gf_identity = f.then(&g)? == Functor::identity(e.value(c));

    // unit at (B,X,g): the class of (g, 1, 1_g): (B,X,g) -> (C, g_!X, 1_C)
    let id_pos = tables.pos1[c][&k.id1(c)];
    let mut unit = Vec::with_capacity(d.obj_label.len());
    for (o, &(b, x, gp)) in d.obj_label.iter().enumerate() {
        let g1 = tables.ones[b][gp];
        let gx = e.tr(g1).obj(x);
        let tgt = d.object(c, gx, id_pos).expect("Δ object");
        let v = d.w.value(b).identity(gp);
        let one = d
            .one_cell(o, tgt, g1, e.value(c).identity(gx), v)
            .ok_or_else(|| Error::Internal("unit 1-cell missing".into()))?;
        if !d.cartesian[one] || !pres.sigma[pres.labels.class_of[one]] {
            report.unit_cartesian = false;
        }
        unit.push(l.arr(pres.labels.class_of[one]));
    }
    // (f, 1, 1): (B, X, f;g') -> (B', f_!X, g')
    for one in d.carrier.one_cells() {
        let (h, u, v) = d.mor_label[one];
        if d.w.value(d.obj_label[d.carrier.dom(one)].0).is_identity(v)
            && e.value(d.obj_label[d.carrier.cod(one)].0).is_identity(u)
            && !(d.cartesian[one] && pres.sigma[pres.labels.class_of[one]])
        {
            report.coherence_cartesian = false;
            report.witness = Some(format!("coherence span at {} is not marked", k.one_name(h)));
        }
    }
    let eta = NatTransf::new(Functor::identity(result), g.then(&f)?, unit);
    let Some(counit) = eta.inverse() else {
        report.witness = Some("unit is not invertible".into());
        return Ok((report, loc));
    };
    let unit_gf = NatTransf::identity(&f.then(&g)?);
    let check = check_equivalence(&f, &g, &unit_gf, &counit);
    report.verdict = check.verdict;
    if report.witness.is_none() {
        report.witness = check.witness.map(|(cell, why)| format!("{cell}: {why}"));
    }
    Ok((report, loc))
}

/// Outcome of [`yoneda_transitions`].
#[derive(Debug, Clone, Serialize)]
pub struct TransitionReport {
    /// Every `T_f` is a functor preserving marked arrows.
    pub functorial: bool,
    /// `T_f;T_g = T_{f;g}` on the nose.
    pub strict: bool,
    /// `F_C;T_f;G_D = f_!` on the nose.
    pub recovers_transition: bool,
    pub witness: Option<String>,
}

impl TransitionReport {
    pub fn passed(&self) -> bool {
        self.functorial && self.strict && self.recovers_transition
    }
}

/// The transitions `(B,X,g) ↦ (B,X,g;f)` between the presentations of
/// `E ⋆ K(-, C)` for varying `C`, checked to compose strictly and to recover
/// the transitions of `E` through the comparison functors.
pub fn yoneda_transitions(e: &Arc<PseudoFunctor>, budget: Budget) -> Result<TransitionReport> {
    let k = &*e.shape;
    let data = k
        .objects()
        .map(|c| yoneda_data(e, c, budget))
        .collect::<Result<Vec<_>>>()?;
    let mut report = TransitionReport {
        functorial: true,
        strict: true,
        recovers_transition: true,
        witness: None,
    };
    let mut trans: Vec<Functor> = Vec::with_capacity(k.n_one());
    for f in k.one_cells() {
        let (c, c2) = (k.dom(f), k.cod(f));
        let (src, tgt) = (&data[c], &data[c2]);
        let (ds, dt) = (&src.pres.delta, &tgt.pres.delta);
        let obj_map = ds
            .obj_label
            .iter()
            .map(|&(b, x, g)| {
                let gf = k.hc1(src.tables.ones[b][g], f);
                dt.object(b, x, tgt.tables.pos1[b][&gf]).expect("Δ object")
            })
            .collect::<Vec<_>>();
        let mut arr_map: Vec<Option<ArrowId>> = vec![None; src.pres.p.n_arrows()];
        for one in ds.carrier.one_cells() {
            let (h, u, theta) = ds.mor_label[one];
            let b = ds.obj_label[ds.carrier.dom(one)].0;
            let cell = k.hc2(src.tables.twos[b][theta], k.id2(f));
            let v = tgt.tables.pos2[b][&cell];
            let (s, t) = (obj_map[ds.carrier.dom(one)], obj_map[ds.carrier.cod(one)]);
            let cls = tgt.pres.class(s, t, h, u, v)?;
            let here = src.pres.labels.class_of[one];
            match arr_map[here] {
                None => arr_map[here] = Some(cls),
                Some(prev) if prev != cls => {
                    report.functorial = false;
                    report.witness = Some(format!("T_{} is not well defined on classes", k.one_name(f)));
                }
                _ => {}
            }
        }
        let arr_map = arr_map.into_iter().map(|a| a.unwrap_or(0)).collect();
        let t = Functor::new(src.pres.p.clone(), tgt.pres.p.clone(), obj_map, arr_map);
        if !t.validate().is_valid() || src.pres.sigma_arrows().any(|a| !tgt.pres.sigma[t.arr(a)]) {
            report.functorial = false;
            report.witness.get_or_insert_with(|| format!("T_{} is not a marked functor", k.one_name(f)));
        }
        if src.f_p.then(&t)?.then(&tgt.g_p)? != *e.tr(f) {
            report.recovers_transition = false;
            report.witness.get_or_insert_with(|| format!("T_{} does not recover the transition", k.one_name(f)));
        }
        trans.push(t);
    }
    for f in k.one_cells() {
        for g in k.out_ones(k.cod(f)) {
            if trans[f].then(&trans[g])? != trans[k.hc1(f, g)] {
                report.strict = false;
                report
                    .witness
                    .get_or_insert_with(|| format!("T_{};T_{} differs from the composite", k.one_name(f), k.one_name(g)));
            }
        }
    }
    Ok(report)
}

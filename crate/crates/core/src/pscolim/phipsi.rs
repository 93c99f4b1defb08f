use super::localize::LocalizedCat;
use super::presentation::{pscolim_presentation, sigma_functor_cat, ColimitPresentation};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{check_isomorphism, ArrowId, FinCat, Functor, IsoVerdict, NatTransf, ObjId};
use crate::psfun::{hom_pseudo_functor, pseudo_nat_category, HomPseudoFunctor, Modification, PseudoFunctor, PseudoNat};
use crate::twocat::OneId;
use serde::Serialize;
use std::sync::Arc;

impl ColimitPresentation {
    /// Class in `p` of the Δ 1-cell `(f, u, v)` from `s` to `t`.
    pub fn class(&self, s: ObjId, t: ObjId, f: OneId, u: ArrowId, v: ArrowId) -> Result<ArrowId> {
        self.delta
            .one_cell(s, t, f, u, v)
            .map(|d| self.labels.class_of[d])
            .ok_or_else(|| Error::Internal("Δ 1-cell not found".into()))
    }

    fn obj(&self, c: ObjId, x: ObjId, y: ObjId) -> Result<ObjId> {
        self.delta
            .object(c, x, y)
            .ok_or_else(|| Error::Internal("Δ object not found".into()))
    }
}

fn found<T>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Internal(format!("{what} not found among enumerated data")))
}

/// The functor `θ_C(Y): E(C) -> X` determined by `f`.
fn fiber_functor(pres: &ColimitPresentation, hom: &HomPseudoFunctor, f: &Functor, c: ObjId, y: ObjId) -> Result<Functor> {
    let ec = hom.e.value(c);
    let wc = pres.delta.w.value(c);
    let id_c = pres.delta.e.shape.id1(c);
    let obj_map = ec
        .objects()
        .map(|x| Ok(f.obj(pres.obj(c, x, y)?)))
        .collect::<Result<Vec<_>>>()?;
    let arr_map = ec
        .arrows()
        .map(|u| {
            let (s, t) = (pres.obj(c, ec.dom(u), y)?, pres.obj(c, ec.cod(u), y)?);
            Ok(f.arr(pres.class(s, t, id_c, u, wc.identity(y))?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Functor::new(ec.clone(), hom.x.clone(), obj_map, arr_map))
}

/// `Φ(F)`: the pseudo-natural transformation `W ⇒ Cat(E, X)` with
/// `Φ(F)_C(Y)(X) = F(C,X,Y)`. Coherence cells are the images of the classes
/// of `(f, 1, 1)`.
pub fn phi(pres: &ColimitPresentation, hom: &HomPseudoFunctor, f: &Functor) -> Result<PseudoNat> {
    let (e, w) = (&pres.delta.e, &pres.delta.w);
    let k = &*e.shape;
    let h = &hom.functor;
    let mut component = Vec::with_capacity(k.n_objects());
    for c in k.objects() {
        let (wc, cat) = (w.value(c), &hom.categories[c]);
        let id_c = k.id1(c);
        let ec = e.value(c);
        let obj_map = wc
            .objects()
            .map(|y| found(cat.object_of(&fiber_functor(pres, hom, f, c, y)?), "fiber functor"))
            .collect::<Result<Vec<_>>>()?;
        let arr_map = wc
            .arrows()
            .map(|v| {
                let (y, y2) = (wc.dom(v), wc.cod(v));
                let comps = ec
                    .objects()
                    .map(|x| Ok(f.arr(pres.class(pres.obj(c, x, y)?, pres.obj(c, x, y2)?, id_c, ec.identity(x), v)?)))
                    .collect::<Result<Vec<_>>>()?;
                let t = NatTransf::new(cat.functor(obj_map[y]).clone(), cat.functor(obj_map[y2]).clone(), comps);
                found(cat.arrow_of(&t), "fiber transformation")
            })
            .collect::<Result<Vec<_>>>()?;
        component.push(Functor::new(wc.clone(), cat.cat.clone(), obj_map, arr_map));
    }
    let mut coherence = Vec::with_capacity(k.n_one());
    for g in k.one_cells() {
        // in the view g runs D -> C
        let (c, d) = (k.dom(g), k.cod(g));
        let (ec, ed) = (e.value(c), e.value(d));
        let cat = &hom.categories[c];
        let src = w.tr(g).then(&component[c])?;
        let tgt = component[d].then(h.tr(g))?;
        let comps = w
            .value(d)
            .objects()
            .map(|v| {
                let gv = w.tr(g).obj(v);
                let cs = ec
                    .objects()
                    .map(|x| {
                        let gx = e.tr(g).obj(x);
                        let cls = pres.class(
                            pres.obj(c, x, gv)?,
                            pres.obj(d, gx, v)?,
                            g,
                            ed.identity(gx),
                            w.value(c).identity(gv),
                        )?;
                        Ok(f.arr(cls))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let t = NatTransf::new(cat.functor(src.obj(v)).clone(), cat.functor(tgt.obj(v)).clone(), cs);
                found(cat.arrow_of(&t), "coherence component")
            })
            .collect::<Result<Vec<_>>>()?;
        coherence.push(NatTransf::new(src, tgt, comps));
    }
    Ok(PseudoNat {
        source: w.clone(),
        target: h.clone(),
        component,
        coherence,
    })
}

/// `Φ(α)` with `Φ(α)_{C,Y,X} = α_{(C,X,Y)}`.
pub fn phi_arrow(
    pres: &ColimitPresentation,
    hom: &HomPseudoFunctor,
    alpha: &NatTransf,
    source: &Arc<PseudoNat>,
    target: &Arc<PseudoNat>,
) -> Result<Modification> {
    let k = &*pres.delta.e.shape;
    let mut component = Vec::with_capacity(k.n_objects());
    for c in k.objects() {
        let cat = &hom.categories[c];
        let (s, t) = (&source.component[c], &target.component[c]);
        let comps = pres
            .delta
            .w
            .value(c)
            .objects()
            .map(|y| {
                let cs = hom
                    .e
                    .value(c)
                    .objects()
                    .map(|x| Ok(alpha.at(pres.obj(c, x, y)?)))
                    .collect::<Result<Vec<_>>>()?;
                let tr = NatTransf::new(cat.functor(s.obj(y)).clone(), cat.functor(t.obj(y)).clone(), cs);
                found(cat.arrow_of(&tr), "modification component")
            })
            .collect::<Result<Vec<_>>>()?;
        component.push(NatTransf::new(s.clone(), t.clone(), comps));
    }
    Ok(Modification {
        source: source.clone(),
        target: target.clone(),
        component,
    })
}

/// `Ψ(θ)`: `(C,X,Y) ↦ θ_C(Y)(X)`, and on a class with representative
/// `(f,u,v)` the composite `θ_C(v)_X ; θ_{f,B,X} ; θ_D(B)(u)`. Every
/// representative is evaluated; disagreement or a marked arrow sent to a
/// non-isomorphism is an error.
pub fn psi(pres: &ColimitPresentation, hom: &HomPseudoFunctor, t: &PseudoNat) -> Result<Functor> {
    let d = &pres.delta;
    let x = &hom.x;
    let cats = &hom.categories;
    let obj_map = d
        .obj_label
        .iter()
        .map(|&(c, xx, y)| cats[c].functor(t.component[c].obj(y)).obj(xx))
        .collect::<Vec<_>>();
    let mut arr_map: Vec<Option<ArrowId>> = vec![None; pres.p.n_arrows()];
    for one in d.carrier.one_cells() {
        let (f, u, v) = d.mor_label[one];
        let (c, xx, _) = d.obj_label[d.carrier.dom(one)];
        let (dd, _, b) = d.obj_label[d.carrier.cod(one)];
        let e1 = cats[c].transf(t.component[c].arr(v)).at(xx);
        let e2 = cats[c].transf(t.coh_at(f, b)).at(xx);
        let e3 = cats[dd].functor(t.component[dd].obj(b)).arr(u);
        let val = x.comp_path(&[e1, e2, e3]);
        let cls = pres.labels.class_of[one];
        match arr_map[cls] {
            None => arr_map[cls] = Some(val),
            Some(prev) if prev != val => {
                return Err(Error::Internal(format!(
                    "Ψ depends on the representative of {}",
                    pres.p.arrow_name(cls)
                )))
            }
            _ => {}
        }
    }
    let arr_map = arr_map
        .into_iter()
        .map(|a| a.ok_or_else(|| Error::Internal("empty π₀ class".into())))
        .collect::<Result<Vec<_>>>()?;
    let out = Functor::new(pres.p.clone(), x.clone(), obj_map, arr_map);
    if let Some(a) = pres.sigma_arrows().find(|&a| !x.is_iso(out.arr(a))) {
        return Err(Error::Internal(format!(
            "Ψ sends marked arrow {} to a non-isomorphism",
            pres.p.arrow_name(a)
        )));
    }
    Ok(out)
}

/// `Ψ(m)` with components `m_C(Y)_X` at `(C,X,Y)`.
pub fn psi_arrow(pres: &ColimitPresentation, hom: &HomPseudoFunctor, m: &Modification, source: &Functor, target: &Functor) -> NatTransf {
    let comps = pres
        .delta
        .obj_label
        .iter()
        .map(|&(c, x, y)| hom.categories[c].transf(m.component[c].at(y)).at(x))
        .collect();
    NatTransf::new(source.clone(), target.clone(), comps)
}

/// Outcome of [`verify_main_theorem`].
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub sigma_functors: usize,
    pub sigma_transformations: usize,
    pub pseudo_naturals: usize,
    pub modifications: usize,
    pub verdict: IsoVerdict,
    /// First failing check, if any.
    pub witness: Option<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.verdict == IsoVerdict::Iso
    }
}

/// Checks that `Φ` and `Ψ` are mutually inverse between Σ-inverting functors
/// `π₀Δ(E,W) -> X` and pseudo-natural transformations `W ⇒ Cat(E, X)`.
/// Both sides are enumerated independently and compared strictly.
pub fn verify_main_theorem(
    e: &Arc<PseudoFunctor>,
    w: &Arc<PseudoFunctor>,
    x: &Arc<FinCat>,
    budget: Budget,
) -> Result<TheoremReport> {
    let pres = pscolim_presentation(e, w, budget)?;
    let sfc = sigma_functor_cat(&pres, x, budget)?;
    let hom = hom_pseudo_functor(e, x, budget)?;
    let mc = pseudo_nat_category(w, &hom.functor, budget)?;
    let mut report = TheoremReport {
        sigma_functors: sfc.functors.len(),
        sigma_transformations: sfc.transfs.len(),
        pseudo_naturals: mc.nats.len(),
        modifications: mc.mods.len(),
        verdict: IsoVerdict::Fail,
        witness: None,
    };
    let fail = |mut r: TheoremReport, why: String| {
        r.witness = Some(why);
        Ok(r)
    };

    let mut phi_obj = Vec::with_capacity(sfc.functors.len());
    for (i, f) in sfc.functors.iter().enumerate() {
        let t = phi(&pres, &hom, f)?;
        if let Some(v) = t.validate().first() {
            return fail(report, format!("Φ(F{i}) is not pseudo-natural: {v}"));
        }
        match mc.object_of(&t) {
            Some(o) => phi_obj.push(o),
            None => return fail(report, format!("Φ(F{i}) missing from the enumeration")),
        }
    }
    let mut phi_arr = Vec::with_capacity(sfc.transfs.len());
    for (i, a) in sfc.transfs.iter().enumerate() {
        let (s, t) = (sfc.cat.dom(i), sfc.cat.cod(i));
        let m = phi_arrow(&pres, &hom, a, &mc.nats[phi_obj[s]], &mc.nats[phi_obj[t]])?;
        if let Some(v) = m.validate().first() {
            return fail(report, format!("Φ(t{i}) is not a modification: {v}"));
        }
        match mc.arrow_of(&m) {
            Some(o) => phi_arr.push(o),
            None => return fail(report, format!("Φ(t{i}) missing from the enumeration")),
        }
    }
    let mut psi_obj = Vec::with_capacity(mc.nats.len());
    for (i, t) in mc.nats.iter().enumerate() {
        let f = match psi(&pres, &hom, t) {
            Ok(f) => f,
            Err(err) => return fail(report, format!("Ψ(N{i}): {err}")),
        };
        if let Some(v) = f.validate().first() {
            return fail(report, format!("Ψ(N{i}) is not a functor: {v}"));
        }
        match sfc.object_of(&f) {
            Some(o) => psi_obj.push(o),
            None => return fail(report, format!("Ψ(N{i}) missing from the enumeration")),
        }
    }
    let mut psi_arr = Vec::with_capacity(mc.mods.len());
    for (i, m) in mc.mods.iter().enumerate() {
        let (s, t) = (mc.cat.dom(i), mc.cat.cod(i));
        let a = psi_arrow(&pres, &hom, m, sfc.functor(psi_obj[s]), sfc.functor(psi_obj[t]));
        if let Some(v) = a.validate().first() {
            return fail(report, format!("Ψ(m{i}) is not natural: {v}"));
        }
        match sfc.arrow_of(&a) {
            Some(o) => psi_arr.push(o),
            None => return fail(report, format!("Ψ(m{i}) missing from the enumeration")),
        }
    }
    let phi_f = Functor::new(sfc.cat.clone(), mc.cat.clone(), phi_obj, phi_arr);
    let psi_f = Functor::new(mc.cat.clone(), sfc.cat.clone(), psi_obj, psi_arr);
    for (name, g) in [("Φ", &phi_f), ("Ψ", &psi_f)] {
        if let Some(v) = g.validate().first() {
            return fail(report, format!("{name} is not a functor: {v}"));
        }
    }
    let iso = check_isomorphism(&phi_f, &psi_f);
    report.verdict = iso.verdict;
    report.witness = iso.witness.map(|(c, why)| format!("{c}: {why}"));
    Ok(report)
}

/// The universal pseudo-cocone `W ⇒ Cat(E, p[Σ⁻¹])`, built directly from the
/// localization functor.
pub fn canonical_cocone(
    pres: &ColimitPresentation,
    loc: &LocalizedCat,
    budget: Budget,
) -> Result<(PseudoNat, HomPseudoFunctor)> {
    let (result, l) = loc.require_exact()?;
    let hom = hom_pseudo_functor(&pres.delta.e, result, budget)?;
    let t = phi(pres, &hom, l)?;
    if let Some(v) = t.validate().first() {
        return Err(Error::Internal(format!("canonical cocone is not pseudo-natural: {v}")));
    }
    for (g, coh) in t.coherence.iter().enumerate() {
        if !coh.is_invertible() {
            return Err(Error::Internal(format!("coherence at 1-cell {g} is not invertible")));
        }
    }
    Ok((t, hom))
}

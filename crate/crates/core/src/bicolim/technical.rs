use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{check_equivalence, FinCat, Functor, IsoVerdict, NatTransf, ObjId};
use crate::pscolim::{verify_main_theorem, TheoremReport};
use crate::psfun::{
    hom_bifunctor, hom_pseudo_functor, product_bifunctor, pseudo_nat_category, HomPseudoFunctor, Modification,
    PseudoFunctor, PseudoNat,
};
use crate::twocat::{OneId, TwoCat};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;

/// The data relating pseudo-natural transformations `K(-,-) ⇒ Cat(E×W, A)`
/// to pseudo-natural transformations `W ⇒ Cat(E, A)`.
pub struct Technical {
    pub shape: Arc<TwoCat>,
    pub e: Arc<PseudoFunctor>,
    pub w: Arc<PseudoFunctor>,
    /// `E × W` on `K × K^op`.
    pub product: Arc<PseudoFunctor>,
    /// `K(-,-)` on `K × K^op`.
    pub hom_weight: Arc<PseudoFunctor>,
    /// `Cat(E × W, A)`.
    pub big: HomPseudoFunctor,
    /// `Cat(E, A)`.
    pub small: HomPseudoFunctor,
    /// Position of each 1-cell in its hom-category, per object pair.
    pos1: Vec<HashMap<OneId, ObjId>>,
}

fn found<T>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Internal(format!("{what} not found among enumerated data")))
}

impl Technical {
    pub fn new(e: &Arc<PseudoFunctor>, w: &Arc<PseudoFunctor>, a: &Arc<FinCat>, budget: Budget) -> Result<Technical> {
        let k = e.shape.clone();
        let product = Arc::new(product_bifunctor(e, w, budget)?);
        let hom_weight = Arc::new(hom_bifunctor(&k, budget)?);
        let big = hom_pseudo_functor(&product, a, budget)?;
        let small = hom_pseudo_functor(e, a, budget)?;
        let n0 = k.n_objects();
        let pos1 = (0..n0 * n0)
            .map(|i| {
                k.hom(i / n0, i % n0)
                    .iter()
                    .enumerate()
                    .map(|(p, &f)| (f, p))
                    .collect()
            })
            .collect();
        Ok(Technical {
            shape: k,
            e: e.clone(),
            w: w.clone(),
            product,
            hom_weight,
            big,
            small,
            pos1,
        })
    }

    fn pair(&self, c: ObjId, d: ObjId) -> ObjId {
        c * self.shape.n_objects() + d
    }

    fn cell(&self, h: OneId, k: OneId) -> OneId {
        h * self.shape.n_one() + k
    }

    fn pos(&self, f: OneId) -> ObjId {
        self.pos1[self.pair(self.shape.dom(f), self.shape.cod(f))][&f]
    }

    /// Object `(X, Y)` of `E(C) × W(D)`.
    fn xy(&self, d: ObjId, x: ObjId, y: ObjId) -> ObjId {
        x * self.w.value(d).n_objects() + y
    }

    /// Arrow `(u, v)` of `E(C) × W(D)`.
    fn uv(&self, d: ObjId, u: usize, v: usize) -> usize {
        u * self.w.value(d).n_arrows() + v
    }

    /// The functor `a_{C,C}(1_C): E(C) × W(C) -> A`.
    fn diagonal(&self, a: &PseudoNat, c: ObjId) -> &Functor {
        let cc = self.pair(c, c);
        let one = self.pos(self.shape.id1(c));
        self.big.categories[cc].functor(a.component[cc].obj(one))
    }

    /// Component at `(X, Y)` of the coherence cell of `a` at `(h, k)`,
    /// evaluated at the 1-cell `g`.
    fn big_coh(&self, a: &PseudoNat, h: OneId, k: OneId, g: OneId, x: ObjId, y: ObjId) -> usize {
        let s = &*self.shape;
        let src = self.pair(s.dom(h), s.cod(k));
        self.big.categories[src]
            .transf(a.coh_at(self.cell(h, k), self.pos(g)))
            .at(self.xy(s.cod(k), x, y))
    }

    /// `θ_C(Y)(X) = a_{C,C}(1_C)(X, Y)`; the coherence at `f: C -> D` is
    /// the inverse of the cell at `(1_C, f)` followed by the cell at `(f, 1_D)`.
    pub fn tech_phi(&self, a: &PseudoNat) -> Result<PseudoNat> {
        let (k, e, w) = (&*self.shape, &*self.e, &*self.w);
        let x = &self.small.x;
        let mut component = Vec::with_capacity(k.n_objects());
        for c in k.objects() {
            let g = self.diagonal(a, c);
            let (ec, wc) = (e.value(c), w.value(c));
            let cat = &self.small.categories[c];
            let fiber = |y: ObjId| {
                Functor::new(
                    ec.clone(),
                    x.clone(),
                    ec.objects().map(|xx| g.obj(self.xy(c, xx, y))).collect(),
                    ec.arrows().map(|u| g.arr(self.uv(c, u, wc.identity(y)))).collect(),
                )
            };
            let obj_map = wc
                .objects()
                .map(|y| found(cat.object_of(&fiber(y)), "fiber functor"))
                .collect::<Result<Vec<_>>>()?;
            let arr_map = wc
                .arrows()
                .map(|v| {
                    let comps = ec.objects().map(|xx| g.arr(self.uv(c, ec.identity(xx), v))).collect();
                    let t = NatTransf::new(fiber(wc.dom(v)), fiber(wc.cod(v)), comps);
                    found(cat.arrow_of(&t), "fiber transformation")
                })
                .collect::<Result<Vec<_>>>()?;
            component.push(Functor::new(wc.clone(), cat.cat.clone(), obj_map, arr_map));
        }
        let mut coherence = Vec::with_capacity(k.n_one());
        for f in k.one_cells() {
            let (c, d) = (k.dom(f), k.cod(f));
            let cat = &self.small.categories[c];
            let src = w.tr(f).then(&component[c])?;
            let tgt = component[d].then(self.small.functor.tr(f))?;
            let comps = w
                .value(d)
                .objects()
                .map(|v| {
                    let cs = e
                        .value(c)
                        .objects()
                        .map(|xx| {
                            let first = self.big_coh(a, k.id1(c), f, k.id1(c), xx, v);
                            let second = self.big_coh(a, f, k.id1(d), k.id1(d), xx, v);
                            let back = found(x.inverse(first), "inverse coherence")?;
                            Ok(x.comp(back, second))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let t = NatTransf::new(cat.functor(src.obj(v)).clone(), cat.functor(tgt.obj(v)).clone(), cs);
                    found(cat.arrow_of(&t), "coherence component")
                })
                .collect::<Result<Vec<_>>>()?;
            coherence.push(NatTransf::new(src, tgt, comps));
        }
        Ok(PseudoNat {
            source: self.w.clone(),
            target: self.small.functor.clone(),
            component,
            coherence,
        })
    }

    /// Modification components `m_{C,C}(1_C)` at `(X, Y)`.
    pub fn tech_phi_arrow(&self, m: &Modification, source: &Arc<PseudoNat>, target: &Arc<PseudoNat>) -> Result<Modification> {
        let (k, e, w) = (&*self.shape, &*self.e, &*self.w);
        let mut component = Vec::with_capacity(k.n_objects());
        for c in k.objects() {
            let cc = self.pair(c, c);
            let one = self.pos(k.id1(c));
            let mc = self.big.categories[cc].transf(m.component[cc].at(one));
            let cat = &self.small.categories[c];
            let (s, t) = (&source.component[c], &target.component[c]);
            let comps = w
                .value(c)
                .objects()
                .map(|y| {
                    let cs = e.value(c).objects().map(|xx| mc.at(self.xy(c, xx, y))).collect();
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

    /// `θ_D(Y)` as a functor `E(D) -> A`.
    fn fiber<'a>(&'a self, t: &PseudoNat, d: ObjId, y: ObjId) -> &'a Functor {
        self.small.categories[d].functor(t.component[d].obj(y))
    }

    /// The functor `(X, Y) ↦ θ_D(Y)(f_!X)`, with `(u, v) ↦ θ_D(v)_{f_!X} ; θ_D(Y')(f_!u)`.
    fn extended(&self, t: &PseudoNat, f: OneId) -> Functor {
        let (k, e, w) = (&*self.shape, &*self.e, &*self.w);
        let (c, d) = (k.dom(f), k.cod(f));
        let (ec, wd) = (e.value(c), w.value(d));
        let x = &self.small.x;
        let ef = e.tr(f);
        let cd = self.pair(c, d);
        let src = self.product.value(cd).clone();
        let mut obj_map = vec![0; src.n_objects()];
        for xx in ec.objects() {
            for y in wd.objects() {
                obj_map[self.xy(d, xx, y)] = self.fiber(t, d, y).obj(ef.obj(xx));
            }
        }
        let mut arr_map = vec![0; src.n_arrows()];
        for u in ec.arrows() {
            for v in wd.arrows() {
                let nat = self.small.categories[d].transf(t.component[d].arr(v));
                let first = nat.at(ef.obj(ec.dom(u)));
                let second = self.fiber(t, d, wd.cod(v)).arr(ef.arr(u));
                arr_map[self.uv(d, u, v)] = x.comp(first, second);
            }
        }
        Functor::new(src, x.clone(), obj_map, arr_map)
    }

    /// `Ψ(θ)_{C,D}(f)(X, Y) = θ_D(Y)(f_!X)`; 2-cells `σ` go to
    /// `θ_D(Y)((σ_!)_X)`; the coherence at `(h, k)` uses the compositors of
    /// `E` bracketed from the left and the inverse coherence of `θ` at `k`.
    pub fn tech_psi(&self, t: &PseudoNat) -> Result<PseudoNat> {
        let (k, e) = (&*self.shape, &*self.e);
        let wp = &*self.hom_weight;
        let x = &self.small.x;
        let n0 = k.n_objects();
        let mut component = Vec::with_capacity(n0 * n0);
        for cd in 0..n0 * n0 {
            let (c, d) = (cd / n0, cd % n0);
            let cat = &self.big.categories[cd];
            let ones = k.hom(c, d);
            let twos = k.hom_category(c, d)?.2;
            let obj_map = ones
                .iter()
                .map(|&f| found(cat.object_of(&self.extended(t, f)), "extended functor"))
                .collect::<Result<Vec<_>>>()?;
            let arr_map = twos
                .iter()
                .map(|&s| {
                    let (f, g) = (k.src(s), k.tgt(s));
                    let (sf, tg) = (self.extended(t, f), self.extended(t, g));
                    let mut comps = vec![0; sf.source.n_objects()];
                    for xx in e.value(c).objects() {
                        for y in self.w.value(d).objects() {
                            comps[self.xy(d, xx, y)] = self.fiber(t, d, y).arr(e.cell_at(s, xx));
                        }
                    }
                    found(cat.arrow_of(&NatTransf::new(sf, tg, comps)), "2-cell image")
                })
                .collect::<Result<Vec<_>>>()?;
            component.push(Functor::new(wp.value(cd).clone(), cat.cat.clone(), obj_map, arr_map));
        }
        let mut coherence = Vec::with_capacity(wp.shape.n_one());
        for p in wp.shape.one_cells() {
            let (h, kk) = (p / k.n_one(), p % k.n_one());
            let (c, d) = (k.dom(h), k.cod(kk));
            let (c2, d2) = (k.cod(h), k.dom(kk));
            let cd = self.pair(c, d);
            let cat = &self.big.categories[cd];
            let src = wp.tr(p).then(&component[cd])?;
            let tgt = component[self.pair(c2, d2)].then(self.big.functor.tr(p))?;
            let comps = k
                .hom(c2, d2)
                .iter()
                .enumerate()
                .map(|(gi, &g)| {
                    let hg = k.hc1(h, g);
                    let mut cs = vec![0; self.product.value(cd).n_objects()];
                    for xx in e.value(c).objects() {
                        let inner = e.value(d).comp(e.comp_inv_at(hg, kk, xx), e.tr(kk).arr(e.comp_inv_at(h, g, xx)));
                        let z = e.tr(g).obj(e.tr(h).obj(xx));
                        for y in self.w.value(d).objects() {
                            let coh = self.small.categories[d2].transf(t.coh_at(kk, y)).at(z);
                            let back = found(x.inverse(coh), "inverse coherence")?;
                            cs[self.xy(d, xx, y)] = x.comp(self.fiber(t, d, y).arr(inner), back);
                        }
                    }
                    let nat = NatTransf::new(cat.functor(src.obj(gi)).clone(), cat.functor(tgt.obj(gi)).clone(), cs);
                    found(cat.arrow_of(&nat), "coherence component")
                })
                .collect::<Result<Vec<_>>>()?;
            coherence.push(NatTransf::new(src, tgt, comps));
        }
        Ok(PseudoNat {
            source: self.hom_weight.clone(),
            target: self.big.functor.clone(),
            component,
            coherence,
        })
    }

    /// Modification components `m_D(Y)` at `f_!X`.
    pub fn tech_psi_arrow(&self, m: &Modification, source: &Arc<PseudoNat>, target: &Arc<PseudoNat>) -> Result<Modification> {
        let k = &*self.shape;
        let n0 = k.n_objects();
        let mut component = Vec::with_capacity(n0 * n0);
        for cd in 0..n0 * n0 {
            let (c, d) = (cd / n0, cd % n0);
            let cat = &self.big.categories[cd];
            let (s, t) = (&source.component[cd], &target.component[cd]);
            let comps = k
                .hom(c, d)
                .iter()
                .enumerate()
                .map(|(fi, &f)| {
                    let mut cs = vec![0; self.product.value(cd).n_objects()];
                    for xx in self.e.value(c).objects() {
                        let fx = self.e.tr(f).obj(xx);
                        for y in self.w.value(d).objects() {
                            cs[self.xy(d, xx, y)] = self.small.categories[d].transf(m.component[d].at(y)).at(fx);
                        }
                    }
                    let nat = NatTransf::new(cat.functor(s.obj(fi)).clone(), cat.functor(t.obj(fi)).clone(), cs);
                    found(cat.arrow_of(&nat), "modification component")
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

    /// The invertible modification `a ⇛ Ψ(Φ(a))` whose component at `f`
    /// and `(X, Y)` is the coherence cell of `a` at `(f, 1_D)`.
    pub fn unit(&self, a: &Arc<PseudoNat>, round: &Arc<PseudoNat>) -> Result<Modification> {
        let k = &*self.shape;
        let n0 = k.n_objects();
        let mut component = Vec::with_capacity(n0 * n0);
        for cd in 0..n0 * n0 {
            let (c, d) = (cd / n0, cd % n0);
            let cat = &self.big.categories[cd];
            let (s, t) = (&a.component[cd], &round.component[cd]);
            let comps = k
                .hom(c, d)
                .iter()
                .enumerate()
                .map(|(fi, &f)| {
                    let mut cs = vec![0; self.product.value(cd).n_objects()];
                    for xx in self.e.value(c).objects() {
                        for y in self.w.value(d).objects() {
                            cs[self.xy(d, xx, y)] = self.big_coh(a, f, k.id1(d), k.id1(d), xx, y);
                        }
                    }
                    let nat = NatTransf::new(cat.functor(s.obj(fi)).clone(), cat.functor(t.obj(fi)).clone(), cs);
                    found(cat.arrow_of(&nat), "unit component")
                })
                .collect::<Result<Vec<_>>>()?;
            component.push(NatTransf::new(s.clone(), t.clone(), comps));
        }
        Ok(Modification {
            source: a.clone(),
            target: round.clone(),
            component,
        })
    }
}

/// Outcome of [`verify_bicolimit`].
#[derive(Debug, Clone, Serialize)]
pub struct BicolimReport {
    /// The universal property of the tensor presentation.
    pub tensor: TheoremReport,
    pub hom_weighted_naturals: usize,
    pub hom_weighted_modifications: usize,
    pub weighted_naturals: usize,
    pub weighted_modifications: usize,
    /// `Ψ` then `Φ` is the identity on the nose.
    pub strict_round_trip: bool,
    /// Every unit modification is invertible.
    pub unit_invertible: bool,
    pub verdict: IsoVerdict,
    pub witness: Option<String>,
}

impl BicolimReport {
    pub fn passed(&self) -> bool {
        self.tensor.passed() && self.strict_round_trip && self.unit_invertible && self.verdict == IsoVerdict::EquivWithUnit
    }
}

/// Certifies that the tensor presentation is a bicolimit of `E` weighted by
/// `W`, with values tested in `a`.
pub fn verify_bicolimit(
    e: &Arc<PseudoFunctor>,
    w: &Arc<PseudoFunctor>,
    a: &Arc<FinCat>,
    budget: Budget,
) -> Result<BicolimReport> {
    let tech = Technical::new(e, w, a, budget)?;
    let tensor = verify_main_theorem(&tech.product, &tech.hom_weight, a, budget)?;
    let big = pseudo_nat_category(&tech.hom_weight, &tech.big.functor, budget)?;
    let small = pseudo_nat_category(w, &tech.small.functor, budget)?;
    let mut report = BicolimReport {
        tensor,
        hom_weighted_naturals: big.nats.len(),
        hom_weighted_modifications: big.mods.len(),
        weighted_naturals: small.nats.len(),
        weighted_modifications: small.mods.len(),
        strict_round_trip: false,
        unit_invertible: false,
        verdict: IsoVerdict::Fail,
        witness: None,
    };
    let fail = |mut r: BicolimReport, why: String| {
        r.witness = Some(why);
        Ok(r)
    };

    let mut phi_obj = Vec::new();
    for (i, n) in big.nats.iter().enumerate() {
        let t = tech.tech_phi(n)?;
        if let Some(v) = t.validate().first() {
            return fail(report, format!("Φ(N{i}) is not pseudo-natural: {v}"));
        }
        phi_obj.push(found(small.object_of(&t), "Φ image")?);
    }
    let mut phi_arr = Vec::new();
    for (i, m) in big.mods.iter().enumerate() {
        let (s, t) = (big.cat.dom(i), big.cat.cod(i));
        let img = tech.tech_phi_arrow(m, &small.nats[phi_obj[s]], &small.nats[phi_obj[t]])?;
        phi_arr.push(found(small.arrow_of(&img), "Φ image of a modification")?);
    }
    let mut psi_obj = Vec::new();
    for (i, n) in small.nats.iter().enumerate() {
        let t = tech.tech_psi(n)?;
        if let Some(v) = t.validate().first() {
            return fail(report, format!("Ψ(N{i}) is not pseudo-natural: {v}"));
        }
        psi_obj.push(found(big.object_of(&t), "Ψ image")?);
    }
    let mut psi_arr = Vec::new();
    for (i, m) in small.mods.iter().enumerate() {
        let (s, t) = (small.cat.dom(i), small.cat.cod(i));
        let img = tech.tech_psi_arrow(m, &big.nats[psi_obj[s]], &big.nats[psi_obj[t]])?;
        psi_arr.push(found(big.arrow_of(&img), "Ψ image of a modification")?);
    }
    let phi_f = Functor::new(big.cat.clone(), small.cat.clone(), phi_obj, phi_arr);
    let psi_f = Functor::new(small.cat.clone(), big.cat.clone(), psi_obj, psi_arr);
    for (name, g) in [("Φ", &phi_f), ("Ψ", &psi_f)] {
        if let Some(v) = g.validate().first() {
            return fail(report, format!("{name} is not a functor: {v}"));
        }
    }
    let round = psi_f.then(&phi_f)?;
    report.strict_round_trip = round == Functor::identity(&small.cat);

    let back = phi_f.then(&psi_f)?;
    let mut unit = Vec::with_capacity(big.nats.len());
    report.unit_invertible = true;
    for (i, n) in big.nats.iter().enumerate() {
        let target = &big.nats[back.obj(i)];
        let m = tech.unit(n, target)?;
        if let Some(v) = m.validate().first() {
            return fail(report, format!("unit at N{i} is not a modification: {v}"));
        }
        if !m.component.iter().all(|c| c.is_invertible()) {
            report.unit_invertible = false;
        }
        unit.push(found(big.arrow_of(&m), "unit modification")?);
    }
    let eta = NatTransf::new(Functor::identity(&big.cat), back, unit);
    let counit = NatTransf::identity(&round);
    let check = check_equivalence(&phi_f, &psi_f, &eta, &counit);
    report.verdict = check.verdict;
    report.witness = check.witness.map(|(c, why)| format!("{c}: {why}"));
    Ok(report)
}

use super::{ArrowId, FinCat, ObjId};
use crate::error::{Error, Result};
use crate::report::{CellRef, Law, ValidationReport};
use std::sync::Arc;

/// A functor between finite categories, stored as object and arrow maps.
#[derive(Debug, Clone)]
pub struct Functor {
    pub source: Arc<FinCat>,
    pub target: Arc<FinCat>,
    pub obj_map: Vec<ObjId>,
    pub arr_map: Vec<ArrowId>,
}

fn same_cat(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.arr_map == other.arr_map
            && same_cat(&self.source, &other.source)
            && same_cat(&self.target, &other.target)
    }
}

impl Eq for Functor {}

impl Functor {
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        obj_map: Vec<ObjId>,
        arr_map: Vec<ArrowId>,
    ) -> Functor {
        Functor {
            source,
            target,
            obj_map,
            arr_map,
        }
    }

    pub fn identity(c: &Arc<FinCat>) -> Functor {
        Functor::new(c.clone(), c.clone(), c.objects().collect(), c.arrows().collect())
    }

    /// The functor from `c` picking a single object of `x`, constant on arrows.
    pub fn constant(c: &Arc<FinCat>, x: &Arc<FinCat>, o: ObjId) -> Functor {
        let id = x.identity(o);
        Functor::new(
            c.clone(),
            x.clone(),
            vec![o; c.n_objects()],
            vec![id; c.n_arrows()],
        )
    }

    pub fn obj(&self, o: ObjId) -> ObjId {
        self.obj_map[o]
    }

    pub fn arr(&self, a: ArrowId) -> ArrowId {
        self.arr_map[a]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if !same_cat(&self.target, &other.source) {
            return Err(Error::Precondition(
                "functors are not composable".into(),
            ));
        }
        Ok(Functor::new(
            self.source.clone(),
            other.target.clone(),
            self.obj_map.iter().map(|&o| other.obj(o)).collect(),
            self.arr_map.iter().map(|&a| other.arr(a)).collect(),
        ))
    }

    pub fn validate(&self) -> ValidationReport {
        let (s, t) = (&*self.source, &*self.target);
        let mut report = ValidationReport::new();
        if self.obj_map.len() != s.n_objects() || self.arr_map.len() != s.n_arrows() {
            report.push(
                Law::FunctorTyping,
                vec![],
                "map lengths do not match the source".into(),
            );
            return report;
        }
        for (o, &fo) in self.obj_map.iter().enumerate() {
            if fo >= t.n_objects() {
                report.push(
                    Law::FunctorTyping,
                    vec![CellRef::Object(o)],
                    "object image out of range".into(),
                );
            }
        }
        for (a, &fa) in self.arr_map.iter().enumerate() {
            if fa >= t.n_arrows() {
                report.push(
                    Law::FunctorTyping,
                    vec![CellRef::Arrow(a)],
                    "arrow image out of range".into(),
                );
            }
        }
        if !report.is_valid() {
            return report;
        }
        for a in s.arrows() {
            let fa = self.arr(a);
            if t.dom(fa) != self.obj(s.dom(a)) || t.cod(fa) != self.obj(s.cod(a)) {
                report.push(
                    Law::FunctorTyping,
                    vec![CellRef::Arrow(a)],
                    format!(
                        "image of {} is {}: {} -> {}, expected {} -> {}",
                        s.arrow_name(a),
                        t.arrow_name(fa),
                        t.obj_name(t.dom(fa)),
                        t.obj_name(t.cod(fa)),
                        t.obj_name(self.obj(s.dom(a))),
                        t.obj_name(self.obj(s.cod(a)))
                    ),
                );
            }
        }
        for o in s.objects() {
            if self.arr(s.identity(o)) != t.identity(self.obj(o)) {
                report.push(
                    Law::FunctorIdentity,
                    vec![CellRef::Object(o)],
                    format!("identity of {} not preserved", s.obj_name(o)),
                );
            }
        }
        if !report.is_valid() {
            return report;
        }
        for f in s.arrows() {
            for g in s.hom_out(s.cod(f)) {
                let Some(h) = s.compose(f, g) else { continue };
                if t.compose(self.arr(f), self.arr(g)) != Some(self.arr(h)) {
                    report.push(
                        Law::FunctorComposition,
                        vec![CellRef::Arrow(f), CellRef::Arrow(g)],
                        format!(
                            "F({}) != F({});F({})",
                            s.arrow_name(h),
                            s.arrow_name(f),
                            s.arrow_name(g)
                        ),
                    );
                }
            }
        }
        report
    }

    /// `f × g` between the given product categories, indexed as in
    /// [`FinCat::product`].
    pub fn product(f: &Functor, g: &Functor, source: &Arc<FinCat>, target: &Arc<FinCat>) -> Functor {
        let (gs, gt) = (&*g.source, &*g.target);
        let obj_map = f
            .obj_map
            .iter()
            .flat_map(|&a| g.obj_map.iter().map(move |&b| a * gt.n_objects() + b))
            .collect();
        let arr_map = f
            .arr_map
            .iter()
            .flat_map(|&a| g.arr_map.iter().map(move |&b| a * gt.n_arrows() + b))
            .collect();
        debug_assert_eq!(source.n_objects(), f.obj_map.len() * gs.n_objects());
        Functor::new(source.clone(), target.clone(), obj_map, arr_map)
    }

    /// Whether this functor sends every arrow satisfying `pick` to an isomorphism.
    pub fn inverts(&self, mut pick: impl FnMut(ArrowId) -> bool) -> bool {
        self.source
            .arrows()
            .filter(|&a| pick(a))
            .all(|a| self.target.is_iso(self.arr(a)))
    }
}

/// A natural transformation `source ⇒ target`; `components[o]` is an arrow
/// `source(o) -> target(o)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransf {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<ArrowId>,
}

impl NatTransf {
    pub fn new(source: Functor, target: Functor, components: Vec<ArrowId>) -> NatTransf {
        NatTransf {
            source,
            target,
            components,
        }
    }

    pub fn identity(f: &Functor) -> NatTransf {
        let comps = f
            .source
            .objects()
            .map(|o| f.target.identity(f.obj(o)))
            .collect();
        NatTransf::new(f.clone(), f.clone(), comps)
    }

    pub fn at(&self, o: ObjId) -> ArrowId {
        self.components[o]
    }

    fn cat(&self) -> &FinCat {
        &self.source.target
    }

    /// `self` then `other`.
    pub fn vcompose(&self, other: &NatTransf) -> Result<NatTransf> {
        if self.target != other.source {
            return Err(Error::Precondition(
                "natural transformations are not vertically composable".into(),
            ));
        }
        let x = self.cat();
        let comps = (0..self.components.len())
            .map(|o| x.comp(self.at(o), other.at(o)))
            .collect();
        Ok(NatTransf::new(
            self.source.clone(),
            other.target.clone(),
            comps,
        ))
    }

    /// `F;self` for `F` into the source category of `self`.
    pub fn whisker_pre(f: &Functor, tau: &NatTransf) -> Result<NatTransf> {
        Ok(NatTransf::new(
            f.then(&tau.source)?,
            f.then(&tau.target)?,
            f.obj_map.iter().map(|&o| tau.at(o)).collect(),
        ))
    }

    /// `self;K` for `K` out of the target category of `self`.
    pub fn whisker_post(tau: &NatTransf, k: &Functor) -> Result<NatTransf> {
        Ok(NatTransf::new(
            tau.source.then(k)?,
            tau.target.then(k)?,
            tau.components.iter().map(|&a| k.arr(a)).collect(),
        ))
    }

    /// Horizontal composite of `tau: F ⇒ G` (A→B) and `sigma: H ⇒ K` (B→C),
    /// a transformation `F;H ⇒ G;K` with components `H(tau_x);sigma_{Gx}`.
    pub fn hcompose(tau: &NatTransf, sigma: &NatTransf) -> Result<NatTransf> {
        let c = &sigma.source.target;
        let comps = (0..tau.components.len())
            .map(|x| {
                c.compose(
                    sigma.source.arr(tau.at(x)),
                    sigma.at(tau.target.obj(x)),
                )
                .ok_or_else(|| Error::Precondition("horizontal composite ill-typed".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NatTransf::new(
            tau.source.then(&sigma.source)?,
            tau.target.then(&sigma.target)?,
            comps,
        ))
    }

    /// `a × b` between product functors built by [`Functor::product`].
    pub fn product(a: &NatTransf, b: &NatTransf, source: Functor, target: Functor) -> NatTransf {
        let nb = b.cat().n_arrows();
        let comps = a
            .components
            .iter()
            .flat_map(|&x| b.components.iter().map(move |&y| x * nb + y))
            .collect();
        NatTransf::new(source, target, comps)
    }

    pub fn is_invertible(&self) -> bool {
        let x = self.cat();
        self.components.iter().all(|&a| x.is_iso(a))
    }

    pub fn inverse(&self) -> Option<NatTransf> {
        let x = self.cat();
        let comps = self
            .components
            .iter()
            .map(|&a| x.inverse(a))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTransf::new(
            self.target.clone(),
            self.source.clone(),
            comps,
        ))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let (f, g) = (&self.source, &self.target);
        if !same_cat(&f.source, &g.source) || !same_cat(&f.target, &g.target) {
            report.push(Law::NotParallel, vec![], "functors are not parallel".into());
            return report;
        }
        let (c, x) = (&*f.source, &*f.target);
        if self.components.len() != c.n_objects() {
            report.push(
                Law::ComponentTyping,
                vec![],
                "component count does not match objects".into(),
            );
            return report;
        }
        for o in c.objects() {
            let a = self.at(o);
            if a >= x.n_arrows() || x.dom(a) != f.obj(o) || x.cod(a) != g.obj(o) {
                report.push(
                    Law::ComponentTyping,
                    vec![CellRef::Object(o)],
                    format!("component at {} has wrong type", c.obj_name(o)),
                );
            }
        }
        if !report.is_valid() {
            return report;
        }
        for a in c.arrows() {
            let lhs = x.compose(self.at(c.dom(a)), g.arr(a));
            let rhs = x.compose(f.arr(a), self.at(c.cod(a)));
            if lhs.is_none() || lhs != rhs {
                report.push(
                    Law::Naturality,
                    vec![CellRef::Arrow(a)],
                    format!("square at {} does not commute", c.arrow_name(a)),
                );
            }
        }
        report
    }
}

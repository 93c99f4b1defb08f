use super::{ArrowId, FinCat, Functor, NatTransf, ObjId};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

/// All functors `c -> x`, ordered lexicographically by `(obj_map, arr_map)`.
pub fn enumerate_functors(c: &Arc<FinCat>, x: &Arc<FinCat>, budget: Budget) -> Result<Vec<Functor>> {
    enumerate_functors_where(c, x, budget, |_, _| true)
}

/// Functors `c -> x` whose arrow map satisfies `allow(a, image)` for every
/// arrow. The predicate is applied while searching, so it prunes.
pub fn enumerate_functors_where(
    c: &Arc<FinCat>,
    x: &Arc<FinCat>,
    budget: Budget,
    allow: impl Fn(ArrowId, ArrowId) -> bool,
) -> Result<Vec<Functor>> {
    let mut search = FunctorSearch::new(c, x, budget, allow);
    search.objects(0)?;
    Ok(search.out)
}

struct FunctorSearch<'a, P> {
    c: &'a Arc<FinCat>,
    x: &'a Arc<FinCat>,
    allow: P,
    meter: Meter,
    obj_map: Vec<ObjId>,
    arr_map: Vec<ArrowId>,
    // non-identity arrows in index order
    free: Vec<ArrowId>,
    // composition triples, keyed by the position in `free` of their last-assigned arrow
    checks: Vec<Vec<(ArrowId, ArrowId, ArrowId)>>,
    // non-identity arrows whose endpoints are both at most the key
    typed_by: Vec<Vec<ArrowId>>,
    out: Vec<Functor>,
}

impl<'a, P: Fn(ArrowId, ArrowId) -> bool> FunctorSearch<'a, P> {
    fn new(c: &'a Arc<FinCat>, x: &'a Arc<FinCat>, budget: Budget, allow: P) -> Self {
        let free: Vec<ArrowId> = c.arrows().filter(|&a| !c.is_identity(a)).collect();
        let mut rank = vec![None; c.n_arrows()];
        for (k, &a) in free.iter().enumerate() {
            rank[a] = Some(k);
        }
        let mut checks = vec![Vec::new(); free.len()];
        for f in c.arrows() {
            for g in c.hom_out(c.cod(f)) {
                if let Some(h) = c.compose(f, g) {
                    // all-identity triples hold once identities are preserved
                    if let Some(k) = rank[f].max(rank[g]).max(rank[h]) {
                        checks[k].push((f, g, h));
                    }
                }
            }
        }
        let mut typed_by = vec![Vec::new(); c.n_objects()];
        for &a in &free {
            typed_by[c.dom(a).max(c.cod(a))].push(a);
        }
        FunctorSearch {
            c,
            x,
            allow,
            meter: budget.meter("functor enumeration"),
            obj_map: vec![0; c.n_objects()],
            arr_map: vec![usize::MAX; c.n_arrows()],
            free,
            checks,
            typed_by,
            out: Vec::new(),
        }
    }

    fn objects(&mut self, o: ObjId) -> Result<()> {
        if o == self.c.n_objects() {
            for p in self.c.objects() {
                let id = self.x.identity(self.obj_map[p]);
                if !(self.allow)(self.c.identity(p), id) {
                    return Ok(());
                }
                self.arr_map[self.c.identity(p)] = id;
            }
            return self.arrows(0);
        }
        for t in self.x.objects() {
            self.meter.tick()?;
            self.obj_map[o] = t;
            let viable = self.typed_by[o].iter().all(|&a| {
                !self
                    .x
                    .hom(self.obj_map[self.c.dom(a)], self.obj_map[self.c.cod(a)])
                    .is_empty()
            });
            if viable {
                self.objects(o + 1)?;
            }
        }
        Ok(())
    }

    fn consistent(&self, k: usize) -> bool {
        self.checks[k].iter().all(|&(f, g, h)| {
            self.x.compose(self.arr_map[f], self.arr_map[g]) == Some(self.arr_map[h])
        })
    }

    fn arrows(&mut self, k: usize) -> Result<()> {
        if k == self.free.len() {
            self.out.push(Functor::new(
                self.c.clone(),
                self.x.clone(),
                self.obj_map.clone(),
                self.arr_map.clone(),
            ));
            return Ok(());
        }
        let a = self.free[k];
        let (d, e) = (self.obj_map[self.c.dom(a)], self.obj_map[self.c.cod(a)]);
        let x = self.x.clone();
        for &t in x.hom(d, e) {
            self.meter.tick()?;
            if !(self.allow)(a, t) {
                continue;
            }
            self.arr_map[a] = t;
            if self.consistent(k) {
                self.arrows(k + 1)?;
            }
        }
        self.arr_map[a] = usize::MAX;
        Ok(())
    }
}

/// All natural transformations `f ⇒ g`, ordered lexicographically by components.
pub fn enumerate_nat_transfs(f: &Functor, g: &Functor, budget: Budget) -> Result<Vec<NatTransf>> {
    nat_search(f, g, budget, false)
}

/// All natural isomorphisms `f ⇒ g`.
pub fn enumerate_nat_isos(f: &Functor, g: &Functor, budget: Budget) -> Result<Vec<NatTransf>> {
    nat_search(f, g, budget, true)
}

fn nat_search(f: &Functor, g: &Functor, budget: Budget, isos: bool) -> Result<Vec<NatTransf>> {
    let c = &*f.source;
    let mut meter = budget.meter("natural transformation enumeration");
    let mut by_obj = vec![Vec::new(); c.n_objects()];
    for a in c.arrows() {
        by_obj[c.dom(a).max(c.cod(a))].push(a);
    }
    let mut comps = vec![0; c.n_objects()];
    let mut out = Vec::new();
    fn go(
        o: ObjId,
        f: &Functor,
        g: &Functor,
        isos: bool,
        by_obj: &[Vec<ArrowId>],
        comps: &mut Vec<ArrowId>,
        meter: &mut Meter,
        out: &mut Vec<NatTransf>,
    ) -> Result<()> {
        let c = &*f.source;
        let x = &*f.target;
        if o == c.n_objects() {
            out.push(NatTransf::new(f.clone(), g.clone(), comps.clone()));
            return Ok(());
        }
        for &t in x.hom(f.obj(o), g.obj(o)) {
            meter.tick()?;
            if isos && !x.is_iso(t) {
                continue;
            }
            comps[o] = t;
            let natural = by_obj[o].iter().all(|&a| {
                x.compose(comps[c.dom(a)], g.arr(a)) == x.compose(f.arr(a), comps[c.cod(a)])
            });
            if natural {
                go(o + 1, f, g, isos, by_obj, comps, meter, out)?;
            }
        }
        Ok(())
    }
    go(0, f, g, isos, &by_obj, &mut comps, &mut meter, &mut out)?;
    Ok(out)
}

/// The functor category `[c, x]` as a finite category, together with the
/// functors and transformations its objects and arrows stand for.
///
/// Objects follow [`enumerate_functors`]; arrows are grouped by
/// `(source, target)` pair in lexicographic order, each group in the order of
/// [`enumerate_nat_transfs`].
#[derive(Debug, Clone)]
pub struct FunctorCategory {
    pub cat: Arc<FinCat>,
    pub functors: Vec<Functor>,
    pub transfs: Vec<NatTransf>,
    obj_index: HashMap<(Vec<ObjId>, Vec<ArrowId>), ObjId>,
    arr_index: HashMap<(ObjId, ObjId, Vec<ArrowId>), ArrowId>,
}

impl FunctorCategory {
    /// Object standing for `f`, if `f` is among the enumerated functors.
    pub fn object_of(&self, f: &Functor) -> Option<ObjId> {
        self.obj_index
            .get(&(f.obj_map.clone(), f.arr_map.clone()))
            .copied()
    }

    /// Arrow standing for `tau`.
    pub fn arrow_of(&self, tau: &NatTransf) -> Option<ArrowId> {
        let s = self.object_of(&tau.source)?;
        let t = self.object_of(&tau.target)?;
        self.arr_index
            .get(&(s, t, tau.components.clone()))
            .copied()
    }

    pub fn functor(&self, o: ObjId) -> &Functor {
        &self.functors[o]
    }

    pub fn transf(&self, a: ArrowId) -> &NatTransf {
        &self.transfs[a]
    }
}

/// Builds `[c, x]`.
pub fn functor_category(c: &Arc<FinCat>, x: &Arc<FinCat>, budget: Budget) -> Result<FunctorCategory> {
    let functors = enumerate_functors(c, x, budget)?;
    functor_category_on(functors, budget)
}

/// The full subcategory of `[c, x]` on the given functors, kept in the given order.
pub fn functor_category_on(functors: Vec<Functor>, budget: Budget) -> Result<FunctorCategory> {
    let mut meter = budget.meter("functor category");
    let mut transfs = Vec::new();
    let mut arrows = Vec::new();
    let mut arr_index = HashMap::new();
    let mut identity = vec![0; functors.len()];
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for tau in enumerate_nat_transfs(f, g, budget)? {
                meter.tick()?;
                let id = transfs.len();
                if i == j && tau == NatTransf::identity(f) {
                    identity[i] = id;
                }
                arr_index.insert((i, j, tau.components.clone()), id);
                arrows.push((format!("t{id}"), i, j));
                transfs.push(tau);
            }
        }
    }
    // The composition table is dense, so its size is charged up front.
    let table = (arrows.len() as u64).saturating_mul(arrows.len() as u64);
    if table > budget.limit {
        return Err(Error::Budget {
            what: format!("functor category table ({} arrows)", arrows.len()),
            limit: budget.limit,
        });
    }
    let obj_index: HashMap<_, _> = functors
        .iter()
        .enumerate()
        .map(|(i, f)| ((f.obj_map.clone(), f.arr_map.clone()), i))
        .collect();
    let obj_names = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let cat = FinCat::from_fn(obj_names, arrows, identity, |p, q| {
        let (s, t) = (&transfs[p], &transfs[q]);
        let comp = s.vcompose(t).ok()?;
        let i = obj_index[&(comp.source.obj_map.clone(), comp.source.arr_map.clone())];
        let j = obj_index[&(comp.target.obj_map.clone(), comp.target.arr_map.clone())];
        arr_index.get(&(i, j, comp.components)).copied()
    })?;
    Ok(FunctorCategory {
        cat: Arc::new(cat),
        functors,
        transfs,
        obj_index,
        arr_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(c: FinCat) -> Arc<FinCat> {
        Arc::new(c)
    }

    #[test]
    fn functors_from_walking_arrow_are_arrows() {
        for x in [FinCat::walking_idempotent(), FinCat::walking_iso(), FinCat::walking_arrow()] {
            let x = arc(x);
            let fs = enumerate_functors(&arc(FinCat::walking_arrow()), &x, Budget::default()).unwrap();
            assert_eq!(fs.len(), x.n_arrows());
            assert!(fs.iter().all(|f| f.validate().is_valid()));
        }
    }

    #[test]
    fn idempotent_endofunctors() {
        // monoid maps {1,e} -> {1,e}: e -> 1 or e -> e
        let e = arc(FinCat::walking_idempotent());
        let fs = enumerate_functors(&e, &e, Budget::default()).unwrap();
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn functor_category_of_terminal_is_target() {
        let x = arc(FinCat::walking_arrow());
        let fc = functor_category(&arc(FinCat::terminal()), &x, Budget::default()).unwrap();
        assert!(fc.cat.validate().is_valid());
        assert_eq!(fc.cat.n_objects(), 2);
        assert_eq!(fc.cat.n_arrows(), 3);
    }

    #[test]
    fn budget_is_enforced() {
        let x = arc(FinCat::discrete(6));
        let c = arc(FinCat::discrete(6));
        let err = enumerate_functors(&c, &x, Budget::new(100)).unwrap_err();
        assert!(matches!(err, crate::error::Error::Budget { .. }));
    }

    #[test]
    fn nat_isos_subset() {
        let x = arc(FinCat::walking_arrow());
        let t = arc(FinCat::terminal());
        let f = Functor::constant(&t, &x, 0);
        let g = Functor::constant(&t, &x, 1);
        assert_eq!(enumerate_nat_transfs(&f, &g, Budget::default()).unwrap().len(), 1);
        assert!(enumerate_nat_isos(&f, &g, Budget::default()).unwrap().is_empty());
    }
}

/// An isomorphism `a -> b`, if one exists: the first enumerated functor that
/// is bijective on objects and arrows.
pub fn find_isomorphism(a: &Arc<FinCat>, b: &Arc<FinCat>, budget: Budget) -> Result<Option<Functor>> {
    if a.n_objects() != b.n_objects() || a.n_arrows() != b.n_arrows() {
        return Ok(None);
    }
    let bijective = |f: &Functor| {
        let mut seen = vec![false; b.n_arrows()];
        f.arr_map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    };
    Ok(enumerate_functors(a, b, budget)?.into_iter().find(|f| bijective(f)))
}

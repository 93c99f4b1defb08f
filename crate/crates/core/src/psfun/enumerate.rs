use super::nat::{modification_failure, pn1_failure, pn2_failure};
use super::{Modification, PseudoFunctor, PseudoNat};
use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::fincat::{enumerate_functors, enumerate_nat_isos, enumerate_nat_transfs, FinCat, Functor, NatTransf};
use std::collections::HashMap;
use std::sync::Arc;

/// All pseudo-natural transformations `f ⇒ g`, ordered lexicographically by
/// component functors and then by coherence cells in 1-cell order.
///
/// Coherence cells range over invertible transformations; each assignment
/// is checked against the 2-cell condition before the composable-pair one.
pub fn enumerate_pseudo_naturals(
    f: &Arc<PseudoFunctor>,
    g: &Arc<PseudoFunctor>,
    budget: Budget,
) -> Result<Vec<PseudoNat>> {
    let k = &*f.shape;
    let candidates = k
        .objects()
        .map(|o| enumerate_functors(f.value(o), g.value(o), budget))
        .collect::<Result<Vec<_>>>()?;
    let free: Vec<usize> = k.one_cells().filter(|&c| !k.is_id1(c)).collect();
    let mut rank = vec![None; k.n_one()];
    for (i, &c) in free.iter().enumerate() {
        rank[c] = Some(i);
    }
    // checks keyed by the position of the last-assigned 1-cell
    let mut pn2_checks = vec![Vec::new(); free.len()];
    for t in k.two_cells() {
        if let Some(i) = rank[k.src(t)].max(rank[k.tgt(t)]) {
            pn2_checks[i].push(t);
        }
    }
    let mut pn1_checks = vec![Vec::new(); free.len()];
    for a in k.one_cells() {
        for b in f.vout(f.vcod(a)) {
            let ab = f.vhc1(a, b).expect("valid shape");
            if let Some(i) = rank[a].max(rank[b]).max(rank[ab]) {
                pn1_checks[i].push((a, b));
            }
        }
    }
    let mut s = NatSearch {
        f,
        g,
        candidates,
        free,
        pn1_checks,
        pn2_checks,
        meter: budget.meter("pseudo-natural enumeration"),
        budget,
        component: Vec::new(),
        coherence: Vec::new(),
        out: Vec::new(),
    };
    s.components(0)?;
    Ok(s.out)
}

struct NatSearch<'a> {
    f: &'a Arc<PseudoFunctor>,
    g: &'a Arc<PseudoFunctor>,
    candidates: Vec<Vec<Functor>>,
    free: Vec<usize>,
    pn1_checks: Vec<Vec<(usize, usize)>>,
    pn2_checks: Vec<Vec<usize>>,
    meter: Meter,
    budget: Budget,
    component: Vec<Functor>,
    coherence: Vec<NatTransf>,
    out: Vec<PseudoNat>,
}

impl NatSearch<'_> {
    fn components(&mut self, o: usize) -> Result<()> {
        let k = &*self.f.shape;
        if o == k.n_objects() {
            // identity 1-cells get identity coherence; the rest are placeholders
            self.coherence = k
                .one_cells()
                .map(|c| {
                    let a = self.f.vdom(c);
                    NatTransf::identity(&self.component[a])
                })
                .collect();
            return self.coherences(0);
        }
        for i in 0..self.candidates[o].len() {
            self.meter.tick()?;
            let c = self.candidates[o][i].clone();
            self.component.push(c);
            self.components(o + 1)?;
            self.component.pop();
        }
        Ok(())
    }

    fn coherences(&mut self, i: usize) -> Result<()> {
        if i == self.free.len() {
            self.out.push(PseudoNat {
                source: self.f.clone(),
                target: self.g.clone(),
                component: self.component.clone(),
                coherence: self.coherence.clone(),
            });
            return Ok(());
        }
        let c = self.free[i];
        let (a, b) = (self.f.vdom(c), self.f.vcod(c));
        let src = self.f.tr(c).then(&self.component[b])?;
        let tgt = self.component[a].then(self.g.tr(c))?;
        for t in enumerate_nat_isos(&src, &tgt, self.budget)? {
            self.meter.tick()?;
            self.coherence[c] = t;
            let ok2 = self.pn2_checks[i]
                .iter()
                .all(|&th| pn2_failure(self.f, self.g, &self.component, &self.coherence, th).is_none());
            let ok = ok2
                && self.pn1_checks[i]
                    .iter()
                    .all(|&(x, y)| pn1_failure(self.f, self.g, &self.component, &self.coherence, x, y).is_none());
            if ok {
                self.coherences(i + 1)?;
            }
        }
        Ok(())
    }
}

/// All modifications `s ⇛ t`, ordered lexicographically by components.
pub fn enumerate_modifications(s: &Arc<PseudoNat>, t: &Arc<PseudoNat>, budget: Budget) -> Result<Vec<Modification>> {
    let fs = &*s.source;
    let k = &*fs.shape;
    let mut meter = budget.meter("modification enumeration");
    let candidates = k
        .objects()
        .map(|o| enumerate_nat_transfs(&s.component[o], &t.component[o], budget))
        .collect::<Result<Vec<_>>>()?;
    let mut checks = vec![Vec::new(); k.n_objects()];
    for c in k.one_cells() {
        checks[fs.vdom(c).max(fs.vcod(c))].push(c);
    }
    let mut comps: Vec<NatTransf> = Vec::new();
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        o: usize,
        s: &Arc<PseudoNat>,
        t: &Arc<PseudoNat>,
        candidates: &[Vec<NatTransf>],
        checks: &[Vec<usize>],
        comps: &mut Vec<NatTransf>,
        meter: &mut Meter,
        out: &mut Vec<Modification>,
    ) -> Result<()> {
        if o == candidates.len() {
            out.push(Modification {
                source: s.clone(),
                target: t.clone(),
                component: comps.clone(),
            });
            return Ok(());
        }
        for m in &candidates[o] {
            meter.tick()?;
            comps.push(m.clone());
            if checks[o].iter().all(|&c| modification_failure(s, t, comps, c).is_none()) {
                go(o + 1, s, t, candidates, checks, comps, meter, out)?;
            }
            comps.pop();
        }
        Ok(())
    }
    go(0, s, t, &candidates, &checks, &mut comps, &mut meter, &mut out)?;
    Ok(out)
}

/// The category of pseudo-natural transformations `f ⇒ g` and modifications.
///
/// Arrows are grouped by `(source, target)` in lexicographic order, each
/// group in the order of [`enumerate_modifications`].
#[derive(Debug, Clone)]
pub struct ModificationCategory {
    pub cat: Arc<FinCat>,
    pub nats: Vec<Arc<PseudoNat>>,
    pub mods: Vec<Modification>,
    index: HashMap<(usize, usize, Vec<Vec<usize>>), usize>,
}

impl ModificationCategory {
    /// Object standing for `t`.
    pub fn object_of(&self, t: &PseudoNat) -> Option<usize> {
        self.nats.iter().position(|n| **n == *t)
    }

    /// Arrow standing for `m`.
    pub fn arrow_of(&self, m: &Modification) -> Option<usize> {
        let s = self.object_of(&m.source)?;
        let t = self.object_of(&m.target)?;
        self.index.get(&(s, t, key(m))).copied()
    }
}

fn key(m: &Modification) -> Vec<Vec<usize>> {
    m.component.iter().map(|c| c.components.clone()).collect()
}

/// Builds the category of pseudo-natural transformations `f ⇒ g`.
pub fn pseudo_nat_category(
    f: &Arc<PseudoFunctor>,
    g: &Arc<PseudoFunctor>,
    budget: Budget,
) -> Result<ModificationCategory> {
    let nats: Vec<Arc<PseudoNat>> = enumerate_pseudo_naturals(f, g, budget)?
        .into_iter()
        .map(Arc::new)
        .collect();
    let mut mods = Vec::new();
    let mut arrows = Vec::new();
    let mut index = HashMap::new();
    let mut identity = vec![0; nats.len()];
    for (i, s) in nats.iter().enumerate() {
        for (j, t) in nats.iter().enumerate() {
            for m in enumerate_modifications(s, t, budget)? {
                let id = mods.len();
                if i == j && m == Modification::identity(s) {
                    identity[i] = id;
                }
                index.insert((i, j, key(&m)), id);
                arrows.push((format!("m{id}"), i, j));
                mods.push(m);
            }
        }
    }
    let ends: Vec<(usize, usize)> = arrows.iter().map(|(_, s, t)| (*s, *t)).collect();
    let names = (0..nats.len()).map(|i| format!("N{i}")).collect();
    let cat = FinCat::from_fn(names, arrows, identity, |p, q| {
        let m = mods[p].vcompose(&mods[q])?;
        index.get(&(ends[p].0, ends[q].1, key(&m))).copied()
    })?;
    Ok(ModificationCategory {
        cat: Arc::new(cat),
        nats,
        mods,
        index,
    })
}

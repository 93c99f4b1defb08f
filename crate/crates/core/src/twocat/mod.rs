//! Finite strict 2-categories with stored composition tables.
//!
//! `vcompose(a, b)` is `a` then `b`; `hcompose1(f, g)` is `f` then `g`;
//! `hcompose2(a, b)` for `a: f ⇒ g` in `K(A,B)` and `b: h ⇒ k` in `K(B,C)`
//! is a 2-cell `f;h ⇒ g;k`. Whiskerings are the entries with an identity 2-cell.

mod builder;
mod pi0;

pub use builder::TwoCatBuilder;
pub use pi0::{pi0, Pi0Result};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::report::{CellRef, Law, ValidationReport};
use std::collections::HashMap;

pub type OneId = usize;
pub type TwoId = usize;

/// A finite strict 2-category.
#[derive(Clone)]
pub struct TwoCat {
    obj_names: Vec<String>,
    one_names: Vec<String>,
    one_dom: Vec<usize>,
    one_cod: Vec<usize>,
    two_names: Vec<String>,
    two_src: Vec<OneId>,
    two_tgt: Vec<OneId>,
    id1: Vec<OneId>,
    id2: Vec<TwoId>,
    vcomp: HashMap<(TwoId, TwoId), TwoId>,
    hcomp1: HashMap<(OneId, OneId), OneId>,
    hcomp2: HashMap<(TwoId, TwoId), TwoId>,
    hom1: Vec<Vec<OneId>>,
    cells: HashMap<(OneId, OneId), Vec<TwoId>>,
}

/// Raw tables for [`TwoCat::new`].
#[derive(Debug, Clone, Default)]
pub struct TwoCatTables {
    pub objects: Vec<String>,
    /// `(name, dom, cod)`
    pub one_cells: Vec<(String, usize, usize)>,
    /// `(name, source 1-cell, target 1-cell)`
    pub two_cells: Vec<(String, OneId, OneId)>,
    pub id1: Vec<OneId>,
    pub id2: Vec<TwoId>,
    pub vcompose: Vec<(TwoId, TwoId, TwoId)>,
    pub hcompose1: Vec<(OneId, OneId, OneId)>,
    pub hcompose2: Vec<(TwoId, TwoId, TwoId)>,
}

impl TwoCat {
    /// Builds a 2-category from raw tables, checking only index ranges.
    pub fn new(t: TwoCatTables) -> Result<TwoCat> {
        let n0 = t.objects.len();
        let n1 = t.one_cells.len();
        let n2 = t.two_cells.len();
        let range = |what: &str, i: usize, n: usize| {
            if i < n {
                Ok(i)
            } else {
                Err(Error::Precondition(format!("{what} index {i} out of range")))
            }
        };
        for (_, d, c) in &t.one_cells {
            range("object", *d, n0)?;
            range("object", *c, n0)?;
        }
        for (_, s, g) in &t.two_cells {
            range("1-cell", *s, n1)?;
            range("1-cell", *g, n1)?;
        }
        if t.id1.len() != n0 || t.id2.len() != n1 {
            return Err(Error::Precondition("identity tables have wrong length".into()));
        }
        for &i in &t.id1 {
            range("1-cell", i, n1)?;
        }
        for &i in &t.id2 {
            range("2-cell", i, n2)?;
        }
        let mut vcomp = HashMap::new();
        for &(a, b, c) in &t.vcompose {
            vcomp.insert((range("2-cell", a, n2)?, range("2-cell", b, n2)?), range("2-cell", c, n2)?);
        }
        let mut hcomp1 = HashMap::new();
        for &(a, b, c) in &t.hcompose1 {
            hcomp1.insert((range("1-cell", a, n1)?, range("1-cell", b, n1)?), range("1-cell", c, n1)?);
        }
        let mut hcomp2 = HashMap::new();
        for &(a, b, c) in &t.hcompose2 {
            hcomp2.insert((range("2-cell", a, n2)?, range("2-cell", b, n2)?), range("2-cell", c, n2)?);
        }
        let mut hom1 = vec![Vec::new(); n0 * n0];
        for (f, (_, d, c)) in t.one_cells.iter().enumerate() {
            hom1[d * n0 + c].push(f);
        }
        let mut cells: HashMap<(OneId, OneId), Vec<TwoId>> = HashMap::new();
        for (a, (_, s, g)) in t.two_cells.iter().enumerate() {
            cells.entry((*s, *g)).or_default().push(a);
        }
        let (one_names, one_dom, one_cod) = split3(t.one_cells);
        let (two_names, two_src, two_tgt) = split3(t.two_cells);
        Ok(TwoCat {
            obj_names: t.objects,
            one_names,
            one_dom,
            one_cod,
            two_names,
            two_src,
            two_tgt,
            id1: t.id1,
            id2: t.id2,
            vcomp,
            hcomp1,
            hcomp2,
            hom1,
            cells,
        })
    }

    /// The raw tables, sorted, such that `TwoCat::new(k.tables())` rebuilds `k`.
    pub fn tables(&self) -> TwoCatTables {
        let sorted = |m: &HashMap<(usize, usize), usize>| {
            let mut v: Vec<_> = m.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
            v.sort_unstable();
            v
        };
        TwoCatTables {
            objects: self.obj_names.clone(),
            one_cells: (0..self.n_one())
                .map(|f| (self.one_names[f].clone(), self.one_dom[f], self.one_cod[f]))
                .collect(),
            two_cells: (0..self.n_two())
                .map(|a| (self.two_names[a].clone(), self.two_src[a], self.two_tgt[a]))
                .collect(),
            id1: self.id1.clone(),
            id2: self.id2.clone(),
            vcompose: sorted(&self.vcomp),
            hcompose1: sorted(&self.hcomp1),
            hcompose2: sorted(&self.hcomp2),
        }
    }

    pub fn n_objects(&self) -> usize {
        self.obj_names.len()
    }

    pub fn n_one(&self) -> usize {
        self.one_dom.len()
    }

    pub fn n_two(&self) -> usize {
        self.two_src.len()
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.n_objects()
    }

    pub fn one_cells(&self) -> std::ops::Range<OneId> {
        0..self.n_one()
    }

    pub fn two_cells(&self) -> std::ops::Range<TwoId> {
        0..self.n_two()
    }

    pub fn dom(&self, f: OneId) -> usize {
        self.one_dom[f]
    }

    pub fn cod(&self, f: OneId) -> usize {
        self.one_cod[f]
    }

    pub fn src(&self, a: TwoId) -> OneId {
        self.two_src[a]
    }

    pub fn tgt(&self, a: TwoId) -> OneId {
        self.two_tgt[a]
    }

    pub fn id1(&self, o: usize) -> OneId {
        self.id1[o]
    }

    pub fn id2(&self, f: OneId) -> TwoId {
        self.id2[f]
    }

    pub fn is_id1(&self, f: OneId) -> bool {
        self.id1[self.one_dom[f]] == f
    }

    pub fn is_id2(&self, a: TwoId) -> bool {
        self.id2[self.two_src[a]] == a
    }

    pub fn vcompose(&self, a: TwoId, b: TwoId) -> Option<TwoId> {
        self.vcomp.get(&(a, b)).copied()
    }

    pub fn hcompose1(&self, f: OneId, g: OneId) -> Option<OneId> {
        self.hcomp1.get(&(f, g)).copied()
    }

    pub fn hcompose2(&self, a: TwoId, b: TwoId) -> Option<TwoId> {
        self.hcomp2.get(&(a, b)).copied()
    }

    /// `a` then `b`; panics if undefined.
    pub fn vc(&self, a: TwoId, b: TwoId) -> TwoId {
        self.vcompose(a, b)
            .unwrap_or_else(|| panic!("no vertical composite ({}, {})", self.two_names[a], self.two_names[b]))
    }

    /// `f` then `g`; panics if undefined.
    pub fn hc1(&self, f: OneId, g: OneId) -> OneId {
        self.hcompose1(f, g)
            .unwrap_or_else(|| panic!("no composite ({}, {})", self.one_names[f], self.one_names[g]))
    }

    /// Horizontal composite; panics if undefined.
    pub fn hc2(&self, a: TwoId, b: TwoId) -> TwoId {
        self.hcompose2(a, b)
            .unwrap_or_else(|| panic!("no horizontal composite ({}, {})", self.two_names[a], self.two_names[b]))
    }

    /// 1-cells `a -> b` in index order.
    pub fn hom(&self, a: usize, b: usize) -> &[OneId] {
        &self.hom1[a * self.n_objects() + b]
    }

    /// 2-cells `f ⇒ g` in index order.
    pub fn cells(&self, f: OneId, g: OneId) -> &[TwoId] {
        self.cells.get(&(f, g)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn obj_name(&self, o: usize) -> &str {
        &self.obj_names[o]
    }

    pub fn one_name(&self, f: OneId) -> &str {
        &self.one_names[f]
    }

    pub fn two_name(&self, a: TwoId) -> &str {
        &self.two_names[a]
    }

    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.obj_names.iter().position(|n| n == name)
    }

    pub fn find_one(&self, name: &str) -> Option<OneId> {
        self.one_names.iter().position(|n| n == name)
    }

    pub fn find_two(&self, name: &str) -> Option<TwoId> {
        self.two_names.iter().position(|n| n == name)
    }

    pub fn is_locally_discrete(&self) -> bool {
        self.two_cells().all(|a| self.is_id2(a))
    }

    /// First non-identity 2-cell, if any.
    pub fn require_locally_discrete(&self) -> Result<()> {
        match self.two_cells().find(|&a| !self.is_id2(a)) {
            Some(a) => Err(Error::NotLocallyDiscrete(a)),
            None => Ok(()),
        }
    }

    /// The hom-category `K(a, b)` with objects the 1-cells and arrows the
    /// 2-cells, numbered by position in [`TwoCat::hom`] and in the returned
    /// 2-cell list respectively.
    pub fn hom_category(&self, a: usize, b: usize) -> Result<(FinCat, Vec<OneId>, Vec<TwoId>)> {
        let ones = self.hom(a, b).to_vec();
        let pos1: HashMap<OneId, usize> = ones.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let twos: Vec<TwoId> = self
            .two_cells()
            .filter(|&x| pos1.contains_key(&self.two_src[x]))
            .collect();
        let pos2: HashMap<TwoId, usize> = twos.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let arrows = twos
            .iter()
            .map(|&x| {
                (
                    self.two_names[x].clone(),
                    pos1[&self.two_src[x]],
                    *pos1.get(&self.two_tgt[x]).unwrap_or(&pos1[&self.two_src[x]]),
                )
            })
            .collect();
        let identity = ones.iter().map(|&f| pos2[&self.id2[f]]).collect();
        let cat = FinCat::from_fn(
            ones.iter().map(|&f| self.one_names[f].clone()).collect(),
            arrows,
            identity,
            |p, q| pos2.get(&self.vcompose(twos[p], twos[q])?).copied(),
        )?;
        Ok((cat, ones, twos))
    }

    /// The underlying 1-category obtained by forgetting 2-cells.
    pub fn underlying(&self) -> Result<FinCat> {
        FinCat::from_fn(
            self.obj_names.clone(),
            self.one_cells()
                .map(|f| (self.one_names[f].clone(), self.one_dom[f], self.one_cod[f]))
                .collect(),
            self.id1.clone(),
            |f, g| self.hcompose1(f, g),
        )
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        self.check_typing(&mut r);
        if !r.is_valid() {
            return r;
        }
        self.check_vertical(&mut r);
        self.check_horizontal1(&mut r);
        if !r.is_valid() {
            return r;
        }
        self.check_horizontal2(&mut r);
        if !r.is_valid() {
            return r;
        }
        self.check_interchange(&mut r);
        r
    }

    fn check_typing(&self, r: &mut ValidationReport) {
        for o in self.objects() {
            let i = self.id1[o];
            if self.one_dom[i] != o || self.one_cod[i] != o {
                r.push(Law::IdentityTyping, vec![CellRef::Object(o)], "1-cell identity mistyped".into());
            }
        }
        for f in self.one_cells() {
            let i = self.id2[f];
            if self.two_src[i] != f || self.two_tgt[i] != f {
                r.push(Law::IdentityTyping, vec![CellRef::OneCell(f)], "2-cell identity mistyped".into());
            }
        }
        for a in self.two_cells() {
            let (s, t) = (self.two_src[a], self.two_tgt[a]);
            if self.one_dom[s] != self.one_dom[t] || self.one_cod[s] != self.one_cod[t] {
                r.push(
                    Law::HomSlice,
                    vec![CellRef::TwoCell(a)],
                    format!("2-cell {} joins non-parallel 1-cells", self.two_names[a]),
                );
            }
        }
    }

    fn check_vertical(&self, r: &mut ValidationReport) {
        for a in self.two_cells() {
            let t = self.two_tgt[a];
            let s = self.two_src[a];
            if self.vcompose(self.id2[s], a) != Some(a) || self.vcompose(a, self.id2[t]) != Some(a) {
                r.push(Law::UnitLaw, vec![CellRef::TwoCell(a)], "vertical unit law".into());
            }
            for h in self.one_cells().filter(|&h| self.one_dom[h] == self.one_dom[t] && self.one_cod[h] == self.one_cod[t]) {
                for &b in self.cells(t, h) {
                    match self.vcompose(a, b) {
                        None => r.push(
                            Law::MissingComposite,
                            vec![CellRef::TwoCell(a), CellRef::TwoCell(b)],
                            "vertical composite missing".into(),
                        ),
                        Some(c) if self.two_src[c] != s || self.two_tgt[c] != h => r.push(
                            Law::CompositeTyping,
                            vec![CellRef::TwoCell(a), CellRef::TwoCell(b), CellRef::TwoCell(c)],
                            "vertical composite mistyped".into(),
                        ),
                        Some(_) => {}
                    }
                }
            }
        }
        if !r.is_valid() {
            return;
        }
        for a in self.two_cells() {
            for b in self.out_cells(self.two_tgt[a]) {
                let ab = self.vc(a, b);
                for c in self.out_cells(self.two_tgt[b]) {
                    if self.vc(ab, c) != self.vc(a, self.vc(b, c)) {
                        r.push(
                            Law::Associativity,
                            vec![CellRef::TwoCell(a), CellRef::TwoCell(b), CellRef::TwoCell(c)],
                            "vertical associativity".into(),
                        );
                    }
                }
            }
        }
    }

    /// 2-cells with source `f`, in index order of target then cell.
    pub fn out_cells(&self, f: OneId) -> impl Iterator<Item = TwoId> + '_ {
        self.hom(self.one_dom[f], self.one_cod[f])
            .iter()
            .flat_map(move |&g| self.cells(f, g).iter().copied())
    }

    fn check_horizontal1(&self, r: &mut ValidationReport) {
        for f in self.one_cells() {
            let (d, c) = (self.one_dom[f], self.one_cod[f]);
            if self.hcompose1(self.id1[d], f) != Some(f) || self.hcompose1(f, self.id1[c]) != Some(f) {
                r.push(Law::HorizontalUnit, vec![CellRef::OneCell(f)], "1-cell unit law".into());
            }
            for e in self.objects() {
                for &g in self.hom(c, e) {
                    match self.hcompose1(f, g) {
                        None => r.push(
                            Law::MissingComposite,
                            vec![CellRef::OneCell(f), CellRef::OneCell(g)],
                            "1-cell composite missing".into(),
                        ),
                        Some(h) if self.one_dom[h] != d || self.one_cod[h] != e => r.push(
                            Law::CompositeTyping,
                            vec![CellRef::OneCell(f), CellRef::OneCell(g)],
                            "1-cell composite mistyped".into(),
                        ),
                        Some(_) => {}
                    }
                }
            }
        }
        if !r.is_valid() {
            return;
        }
        for f in self.one_cells() {
            for g in self.out_ones(self.one_cod[f]) {
                let fg = self.hc1(f, g);
                for h in self.out_ones(self.one_cod[g]) {
                    if self.hc1(fg, h) != self.hc1(f, self.hc1(g, h)) {
                        r.push(
                            Law::HorizontalAssociativity,
                            vec![CellRef::OneCell(f), CellRef::OneCell(g), CellRef::OneCell(h)],
                            "1-cell associativity".into(),
                        );
                    }
                }
            }
        }
    }

    /// 1-cells with domain `o`.
    pub fn out_ones(&self, o: usize) -> impl Iterator<Item = OneId> + '_ {
        self.objects().flat_map(move |b| self.hom(o, b).iter().copied())
    }

    /// 2-cells whose 1-cells have domain `o`.
    fn out_twos(&self, o: usize) -> impl Iterator<Item = TwoId> + '_ {
        self.out_ones(o).flat_map(move |f| self.out_cells(f))
    }

    fn check_horizontal2(&self, r: &mut ValidationReport) {
        for a in self.two_cells() {
            let b_obj = self.one_cod[self.two_src[a]];
            for b in self.out_twos(b_obj) {
                let want_s = self.hc1(self.two_src[a], self.two_src[b]);
                let want_t = self.hc1(self.two_tgt[a], self.two_tgt[b]);
                match self.hcompose2(a, b) {
                    None => r.push(
                        Law::MissingComposite,
                        vec![CellRef::TwoCell(a), CellRef::TwoCell(b)],
                        "horizontal composite missing".into(),
                    ),
                    Some(c) if self.two_src[c] != want_s || self.two_tgt[c] != want_t => r.push(
                        Law::HorizontalTyping,
                        vec![CellRef::TwoCell(a), CellRef::TwoCell(b)],
                        "horizontal composite mistyped".into(),
                    ),
                    Some(_) => {}
                }
            }
        }
        if !r.is_valid() {
            return;
        }
        for a in self.two_cells() {
            let s = self.two_src[a];
            let (d, c) = (self.one_dom[s], self.one_cod[s]);
            let (ia, ib) = (self.id2[self.id1[d]], self.id2[self.id1[c]]);
            if self.hc2(ia, a) != a || self.hc2(a, ib) != a {
                r.push(Law::HorizontalUnit, vec![CellRef::TwoCell(a)], "2-cell unit law".into());
            }
        }
        for f in self.one_cells() {
            for g in self.out_ones(self.one_cod[f]) {
                if self.hc2(self.id2[f], self.id2[g]) != self.id2[self.hc1(f, g)] {
                    r.push(
                        Law::Whiskering,
                        vec![CellRef::OneCell(f), CellRef::OneCell(g)],
                        "identity 2-cells do not compose horizontally to an identity".into(),
                    );
                }
            }
        }
        for a in self.two_cells() {
            for b in self.out_twos(self.one_cod[self.two_src[a]]) {
                let ab = self.hc2(a, b);
                for c in self.out_twos(self.one_cod[self.two_src[b]]) {
                    if self.hc2(ab, c) != self.hc2(a, self.hc2(b, c)) {
                        r.push(
                            Law::HorizontalAssociativity,
                            vec![CellRef::TwoCell(a), CellRef::TwoCell(b), CellRef::TwoCell(c)],
                            "2-cell associativity".into(),
                        );
                    }
                }
            }
        }
    }

    fn check_interchange(&self, r: &mut ValidationReport) {
        // (a;a') * (b;b') = (a*b);(a'*b')
        for a in self.two_cells() {
            let mid = self.one_cod[self.two_src[a]];
            for a2 in self.out_cells(self.two_tgt[a]) {
                let aa = self.vc(a, a2);
                for b in self.out_twos(mid) {
                    for b2 in self.out_cells(self.two_tgt[b]) {
                        let lhs = self.hc2(aa, self.vc(b, b2));
                        let rhs = self.vc(self.hc2(a, b), self.hc2(a2, b2));
                        if lhs != rhs {
                            r.push(
                                Law::Interchange,
                                vec![
                                    CellRef::TwoCell(a),
                                    CellRef::TwoCell(a2),
                                    CellRef::TwoCell(b),
                                    CellRef::TwoCell(b2),
                                ],
                                format!(
                                    "({};{})*({};{})",
                                    self.two_names[a], self.two_names[a2], self.two_names[b], self.two_names[b2]
                                ),
                            );
                        }
                    }
                }
            }
        }
    }

    /// Reverses 1-cells; indices are kept.
    pub fn op_dual(&self) -> TwoCat {
        let mut k = self.clone();
        std::mem::swap(&mut k.one_dom, &mut k.one_cod);
        k.hcomp1 = self.hcomp1.iter().map(|(&(f, g), &h)| ((g, f), h)).collect();
        k.hcomp2 = self.hcomp2.iter().map(|(&(a, b), &c)| ((b, a), c)).collect();
        k.reindex();
        k
    }

    /// Reverses 2-cells; indices are kept.
    pub fn co_dual(&self) -> TwoCat {
        let mut k = self.clone();
        std::mem::swap(&mut k.two_src, &mut k.two_tgt);
        k.vcomp = self.vcomp.iter().map(|(&(a, b), &c)| ((b, a), c)).collect();
        k.reindex();
        k
    }

    fn reindex(&mut self) {
        let n0 = self.n_objects();
        self.hom1 = vec![Vec::new(); n0 * n0];
        for f in 0..self.n_one() {
            self.hom1[self.one_dom[f] * n0 + self.one_cod[f]].push(f);
        }
        self.cells.clear();
        for a in 0..self.n_two() {
            self.cells.entry((self.two_src[a], self.two_tgt[a])).or_default().push(a);
        }
    }

    /// Cartesian product. Object `(a, b)` has index `a * |L0| + b`, and
    /// likewise for 1-cells and 2-cells.
    pub fn product(k: &TwoCat, l: &TwoCat, budget: Budget) -> Result<TwoCat> {
        let (l0, l1, l2) = (l.n_objects(), l.n_one(), l.n_two());
        let size = (k.n_two() as u64) * (l2 as u64);
        if size > budget.limit {
            return Err(Error::Budget {
                what: "2-category product".into(),
                limit: budget.limit,
            });
        }
        let pair_name = |a: &str, b: &str| format!("({a},{b})");
        let mut t = TwoCatTables::default();
        for a in k.objects() {
            for b in l.objects() {
                t.objects.push(pair_name(&k.obj_names[a], &l.obj_names[b]));
                t.id1.push(k.id1[a] * l1 + l.id1[b]);
            }
        }
        for f in k.one_cells() {
            for g in l.one_cells() {
                t.one_cells.push((
                    pair_name(&k.one_names[f], &l.one_names[g]),
                    k.one_dom[f] * l0 + l.one_dom[g],
                    k.one_cod[f] * l0 + l.one_cod[g],
                ));
                t.id2.push(k.id2[f] * l2 + l.id2[g]);
            }
        }
        for a in k.two_cells() {
            for b in l.two_cells() {
                t.two_cells.push((
                    pair_name(&k.two_names[a], &l.two_names[b]),
                    k.two_src[a] * l1 + l.two_src[b],
                    k.two_tgt[a] * l1 + l.two_tgt[b],
                ));
            }
        }
        let combine = |km: &HashMap<(usize, usize), usize>, lm: &HashMap<(usize, usize), usize>, n: usize| {
            let mut out = Vec::with_capacity(km.len() * lm.len());
            for (&(a, b), &c) in km {
                for (&(x, y), &z) in lm {
                    out.push((a * n + x, b * n + y, c * n + z));
                }
            }
            out.sort_unstable();
            out
        };
        t.vcompose = combine(&k.vcomp, &l.vcomp, l2);
        t.hcompose1 = combine(&k.hcomp1, &l.hcomp1, l1);
        t.hcompose2 = combine(&k.hcomp2, &l.hcomp2, l2);
        TwoCat::new(t)
    }

    /// A 1-category viewed as a 2-category with identity 2-cells only.
    /// 1-cells and 2-cells share the arrow indices of `c`.
    pub fn locally_discrete(c: &FinCat) -> TwoCat {
        let mut t = TwoCatTables {
            objects: c.obj_names().to_vec(),
            id1: c.objects().map(|o| c.identity(o)).collect(),
            id2: c.arrows().collect(),
            ..Default::default()
        };
        for a in c.arrows() {
            t.one_cells.push((c.arrow_name(a).to_string(), c.dom(a), c.cod(a)));
            t.two_cells.push((format!("1{}", c.arrow_name(a)), a, a));
            t.vcompose.push((a, a, a));
            for b in c.hom_out(c.cod(a)) {
                let ab = c.comp(a, b);
                t.hcompose1.push((a, b, ab));
                t.hcompose2.push((a, b, ab));
            }
        }
        TwoCat::new(t).expect("tables of a finite category are in range")
    }

    /// Same structure with new labels.
    pub fn relabeled(&self, objects: Vec<String>, ones: Vec<String>, twos: Vec<String>) -> TwoCat {
        assert_eq!(objects.len(), self.n_objects());
        assert_eq!(ones.len(), self.n_one());
        assert_eq!(twos.len(), self.n_two());
        TwoCat {
            obj_names: objects,
            one_names: ones,
            two_names: twos,
            ..self.clone()
        }
    }

    pub fn obj_names(&self) -> &[String] {
        &self.obj_names
    }

    pub fn one_names(&self) -> &[String] {
        &self.one_names
    }

    pub fn two_names(&self) -> &[String] {
        &self.two_names
    }
}

fn split3<A, B, C>(v: Vec<(A, B, C)>) -> (Vec<A>, Vec<B>, Vec<C>) {
    let mut a = Vec::with_capacity(v.len());
    let mut b = Vec::with_capacity(v.len());
    let mut c = Vec::with_capacity(v.len());
    for (x, y, z) in v {
        a.push(x);
        b.push(y);
        c.push(z);
    }
    (a, b, c)
}

/// Structural equality: names are ignored.
impl PartialEq for TwoCat {
    fn eq(&self, other: &Self) -> bool {
        self.n_objects() == other.n_objects()
            && self.one_dom == other.one_dom
            && self.one_cod == other.one_cod
            && self.two_src == other.two_src
            && self.two_tgt == other.two_tgt
            && self.id1 == other.id1
            && self.id2 == other.id2
            && self.vcomp == other.vcomp
            && self.hcomp1 == other.hcomp1
            && self.hcomp2 == other.hcomp2
    }
}

impl Eq for TwoCat {}

impl std::fmt::Debug for TwoCat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TwoCat")
            .field("objects", &self.obj_names)
            .field("one_cells", &self.one_names)
            .field("two_cells", &self.two_names)
            .finish()
    }
}

/// The 2-category with one object `X`, one idempotent 1-cell `x` and one
/// idempotent 2-cell `ξ: x ⇒ x` whose whiskerings by `x` are `ξ` itself.
pub fn idempotent_shape() -> TwoCat {
    TwoCatBuilder::new()
        .object("X")
        .one_cell("x", "X", "X")
        .two_cell("ξ", "x", "x")
        .hcompose1("x", "x", "x")
        .vcompose("ξ", "ξ", "ξ")
        .hcompose2("ξ", "1x", "ξ")
        .hcompose2("1x", "ξ", "ξ")
        .hcompose2("ξ", "ξ", "ξ")
        .build()
        .expect("fixed tables")
}

/// `0 ⇉ 1` with 1-cells `f, g` and a single non-identity 2-cell `θ: f ⇒ g`.
pub fn walking_two_cell() -> TwoCat {
    TwoCatBuilder::new()
        .object("0")
        .object("1")
        .one_cell("f", "0", "1")
        .one_cell("g", "0", "1")
        .two_cell("θ", "f", "g")
        .build()
        .expect("fixed tables")
}

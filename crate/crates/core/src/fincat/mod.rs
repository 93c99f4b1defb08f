//! Finite 1-categories given by explicit composition tables, together with
//! functors and natural transformations between them.
//!
//! Composition is written diagrammatically throughout: `compose(f, g)` is
//! "`f` then `g`" and is only defined when `cod f = dom g`.

mod enumerate;
mod functor;
mod predicates;

pub use enumerate::{
    enumerate_functors, enumerate_functors_where, enumerate_nat_isos, enumerate_nat_transfs, find_isomorphism,
    functor_category, functor_category_on, FunctorCategory,
};
pub use functor::{Functor, NatTransf};
pub use predicates::{
    check_equivalence, check_isomorphism, is_filtered, CatIsoReport, FilteredReport, IsoVerdict,
};

use crate::error::{Error, Result};
use crate::report::{CellRef, Law, ValidationReport};
use std::collections::HashMap;
use std::fmt;

pub type ObjId = usize;
pub type ArrowId = usize;

const NONE: u32 = u32::MAX;

/// A finite category with a dense composition table.
///
/// Construction only checks that indices are in range and that composites
/// are recorded on composable pairs; the category axioms are checked by
/// [`FinCat::validate`].
#[derive(Clone)]
pub struct FinCat {
    obj_names: Vec<String>,
    arrow_names: Vec<String>,
    dom: Vec<ObjId>,
    cod: Vec<ObjId>,
    identity: Vec<ArrowId>,
    table: Vec<u32>,
    hom: Vec<Vec<ArrowId>>,
    inverse: Vec<Option<ArrowId>>,
}

impl FinCat {
    /// Builds a category from raw tables.
    ///
    /// `arrows` lists `(name, dom, cod)`; `identity[o]` is the identity arrow
    /// at object `o`; `composites` lists `(f, g, f;g)` triples.
    pub fn new(
        obj_names: Vec<String>,
        arrows: Vec<(String, ObjId, ObjId)>,
        identity: Vec<ArrowId>,
        composites: impl IntoIterator<Item = (ArrowId, ArrowId, ArrowId)>,
    ) -> Result<FinCat> {
        let n_obj = obj_names.len();
        let n_arr = arrows.len();
        if n_arr >= NONE as usize {
            return Err(Error::Precondition("too many arrows".into()));
        }
        if identity.len() != n_obj {
            return Err(Error::Precondition(format!(
                "identity list has {} entries for {} objects",
                identity.len(),
                n_obj
            )));
        }
        let mut dom = Vec::with_capacity(n_arr);
        let mut cod = Vec::with_capacity(n_arr);
        let mut arrow_names = Vec::with_capacity(n_arr);
        for (name, d, c) in arrows {
            if d >= n_obj || c >= n_obj {
                return Err(Error::Precondition(format!(
                    "arrow `{name}` has endpoint out of range"
                )));
            }
            dom.push(d);
            cod.push(c);
            arrow_names.push(name);
        }
        if let Some(&bad) = identity.iter().find(|&&a| a >= n_arr) {
            return Err(Error::Precondition(format!(
                "identity arrow index {bad} out of range"
            )));
        }
        let mut table = vec![NONE; n_arr * n_arr];
        for (f, g, h) in composites {
            if f >= n_arr || g >= n_arr || h >= n_arr {
                return Err(Error::Precondition(format!(
                    "composite ({f}, {g}, {h}) out of range"
                )));
            }
            if cod[f] != dom[g] {
                return Err(Error::Precondition(format!(
                    "composite recorded on non-composable pair ({}, {})",
                    arrow_names[f], arrow_names[g]
                )));
            }
            table[f * n_arr + g] = h as u32;
        }
        Ok(Self::assemble(obj_names, arrow_names, dom, cod, identity, table))
    }

    /// Builds a category whose composites are given by a function on
    /// composable pairs.
    pub fn from_fn(
        obj_names: Vec<String>,
        arrows: Vec<(String, ObjId, ObjId)>,
        identity: Vec<ArrowId>,
        mut compose: impl FnMut(ArrowId, ArrowId) -> Option<ArrowId>,
    ) -> Result<FinCat> {
        let ends: Vec<(ObjId, ObjId)> = arrows.iter().map(|(_, d, c)| (*d, *c)).collect();
        let mut triples = Vec::new();
        for f in 0..ends.len() {
            for g in 0..ends.len() {
                if ends[f].1 == ends[g].0 {
                    if let Some(h) = compose(f, g) {
                        triples.push((f, g, h));
                    }
                }
            }
        }
        FinCat::new(obj_names, arrows, identity, triples)
    }

    fn assemble(
        obj_names: Vec<String>,
        arrow_names: Vec<String>,
        dom: Vec<ObjId>,
        cod: Vec<ObjId>,
        identity: Vec<ArrowId>,
        table: Vec<u32>,
    ) -> FinCat {
        let n_obj = obj_names.len();
        let n_arr = dom.len();
        let mut hom = vec![Vec::new(); n_obj * n_obj];
        for a in 0..n_arr {
            hom[dom[a] * n_obj + cod[a]].push(a);
        }
        let mut cat = FinCat {
            obj_names,
            arrow_names,
            dom,
            cod,
            identity,
            table,
            hom,
            inverse: vec![None; n_arr],
        };
        for a in 0..n_arr {
            let (d, c) = (cat.dom[a], cat.cod[a]);
            cat.inverse[a] = cat.hom(c, d).iter().copied().find(|&b| {
                cat.compose(a, b) == Some(cat.identity[d]) && cat.compose(b, a) == Some(cat.identity[c])
            });
        }
        cat
    }

    pub fn n_objects(&self) -> usize {
        self.obj_names.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.dom.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.n_objects()
    }

    pub fn arrows(&self) -> std::ops::Range<ArrowId> {
        0..self.n_arrows()
    }

    pub fn dom(&self, a: ArrowId) -> ObjId {
        self.dom[a]
    }

    pub fn cod(&self, a: ArrowId) -> ObjId {
        self.cod[a]
    }

    pub fn identity(&self, o: ObjId) -> ArrowId {
        self.identity[o]
    }

    pub fn is_identity(&self, a: ArrowId) -> bool {
        self.identity[self.dom[a]] == a
    }

    /// `f` then `g`, if recorded.
    pub fn compose(&self, f: ArrowId, g: ArrowId) -> Option<ArrowId> {
        if self.cod[f] != self.dom[g] {
            return None;
        }
        match self.table[f * self.n_arrows() + g] {
            NONE => None,
            h => Some(h as ArrowId),
        }
    }

    /// `f` then `g`; panics when the pair has no recorded composite.
    pub fn comp(&self, f: ArrowId, g: ArrowId) -> ArrowId {
        self.compose(f, g).unwrap_or_else(|| {
            panic!(
                "no composite for ({}, {})",
                self.arrow_names[f], self.arrow_names[g]
            )
        })
    }

    /// Composite of a composable path, left to right.
    pub fn comp_path(&self, path: &[ArrowId]) -> ArrowId {
        let mut it = path.iter().copied();
        let first = it.next().expect("empty path");
        it.fold(first, |acc, a| self.comp(acc, a))
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &[ArrowId] {
        &self.hom[a * self.n_objects() + b]
    }

    pub fn inverse(&self, a: ArrowId) -> Option<ArrowId> {
        self.inverse[a]
    }

    pub fn is_iso(&self, a: ArrowId) -> bool {
        self.inverse[a].is_some()
    }

    pub fn is_groupoid(&self) -> bool {
        self.inverse.iter().all(Option::is_some)
    }

    pub fn obj_name(&self, o: ObjId) -> &str {
        &self.obj_names[o]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrow_names[a]
    }

    pub fn obj_names(&self) -> &[String] {
        &self.obj_names
    }

    pub fn arrow_names(&self) -> &[String] {
        &self.arrow_names
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.obj_names.iter().position(|n| n == name)
    }

    pub fn find_arrow(&self, name: &str) -> Option<ArrowId> {
        self.arrow_names.iter().position(|n| n == name)
    }

    /// Same structure with new labels.
    pub fn relabeled(&self, obj_names: Vec<String>, arrow_names: Vec<String>) -> FinCat {
        assert_eq!(obj_names.len(), self.n_objects());
        assert_eq!(arrow_names.len(), self.n_arrows());
        FinCat {
            obj_names,
            arrow_names,
            ..self.clone()
        }
    }

    /// Exhaustive check of the category axioms.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for o in self.objects() {
            let i = self.identity[o];
            if self.dom[i] != o || self.cod[i] != o {
                report.push(
                    Law::IdentityTyping,
                    vec![CellRef::Object(o), CellRef::Arrow(i)],
                    format!("identity of {} is not an endo-arrow on it", self.obj_names[o]),
                );
            }
        }
        let n = self.n_arrows();
        for f in 0..n {
            for g in self.hom_out(self.cod[f]) {
                match self.compose(f, g) {
                    None => report.push(
                        Law::MissingComposite,
                        vec![CellRef::Arrow(f), CellRef::Arrow(g)],
                        format!("({}, {})", self.arrow_names[f], self.arrow_names[g]),
                    ),
                    Some(h) => {
                        if self.dom[h] != self.dom[f] || self.cod[h] != self.cod[g] {
                            report.push(
                                Law::CompositeTyping,
                                vec![CellRef::Arrow(f), CellRef::Arrow(g), CellRef::Arrow(h)],
                                format!(
                                    "{};{} = {} has wrong endpoints",
                                    self.arrow_names[f], self.arrow_names[g], self.arrow_names[h]
                                ),
                            );
                        }
                    }
                }
            }
        }
        for f in 0..n {
            let (d, c) = (self.dom[f], self.cod[f]);
            if self.compose(self.identity[d], f) != Some(f) {
                report.push(
                    Law::UnitLaw,
                    vec![CellRef::Arrow(self.identity[d]), CellRef::Arrow(f)],
                    format!("id;{} != {}", self.arrow_names[f], self.arrow_names[f]),
                );
            }
            if self.compose(f, self.identity[c]) != Some(f) {
                report.push(
                    Law::UnitLaw,
                    vec![CellRef::Arrow(f), CellRef::Arrow(self.identity[c])],
                    format!("{};id != {}", self.arrow_names[f], self.arrow_names[f]),
                );
            }
        }
        if !report.is_valid() {
            // associativity is meaningless on an ill-typed table
            return report;
        }
        for f in 0..n {
            for g in self.hom_out(self.cod[f]) {
                let fg = self.comp(f, g);
                for h in self.hom_out(self.cod[g]) {
                    if self.comp(fg, h) != self.comp(f, self.comp(g, h)) {
                        report.push(
                            Law::Associativity,
                            vec![CellRef::Arrow(f), CellRef::Arrow(g), CellRef::Arrow(h)],
                            format!(
                                "({0};{1});{2} != {0};({1};{2})",
                                self.arrow_names[f], self.arrow_names[g], self.arrow_names[h]
                            ),
                        );
                    }
                }
            }
        }
        report
    }

    /// All arrows with domain `o`, in index order.
    pub fn hom_out(&self, o: ObjId) -> impl Iterator<Item = ArrowId> + '_ {
        self.objects().flat_map(move |b| self.hom(o, b).iter().copied())
    }

    pub fn terminal() -> FinCat {
        CatBuilder::new().object("*").build().unwrap()
    }

    pub fn empty() -> FinCat {
        FinCat::new(vec![], vec![], vec![], []).unwrap()
    }

    /// `n` objects and only identities.
    pub fn discrete(n: usize) -> FinCat {
        let mut b = CatBuilder::new();
        for i in 0..n {
            b = b.object(&format!("d{i}"));
        }
        b.build().unwrap()
    }

    /// `a0 --a--> a1`.
    pub fn walking_arrow() -> FinCat {
        CatBuilder::new()
            .object("a0")
            .object("a1")
            .arrow("a", "a0", "a1")
            .build()
            .unwrap()
    }

    /// One object with an idempotent `e;e = e`.
    pub fn walking_idempotent() -> FinCat {
        CatBuilder::new()
            .object("*")
            .arrow("e", "*", "*")
            .compose("e", "e", "e")
            .build()
            .unwrap()
    }

    /// Two objects with mutually inverse arrows `i`, `j`.
    pub fn walking_iso() -> FinCat {
        CatBuilder::new()
            .object("k0")
            .object("k1")
            .arrow("i", "k0", "k1")
            .arrow("j", "k1", "k0")
            .compose("i", "j", "1k0")
            .compose("j", "i", "1k1")
            .build()
            .unwrap()
    }

    /// Cartesian product; object `(a, b)` has index `a * |B| + b` and arrow
    /// `(f, g)` has index `f * |arr B| + g`.
    pub fn product(a: &FinCat, b: &FinCat) -> FinCat {
        let (nbo, nba) = (b.n_objects(), b.n_arrows());
        let mut obj_names = Vec::new();
        for x in a.objects() {
            for y in b.objects() {
                obj_names.push(format!("({},{})", a.obj_names[x], b.obj_names[y]));
            }
        }
        let mut arrows = Vec::new();
        for f in a.arrows() {
            for g in b.arrows() {
                arrows.push((
                    format!("({},{})", a.arrow_names[f], b.arrow_names[g]),
                    a.dom[f] * nbo + b.dom[g],
                    a.cod[f] * nbo + b.cod[g],
                ));
            }
        }
        let identity = a
            .objects()
            .flat_map(|x| b.objects().map(move |y| (x, y)))
            .map(|(x, y)| a.identity[x] * nba + b.identity[y])
            .collect();
        FinCat::from_fn(obj_names, arrows, identity, |p, q| {
            let (f1, g1) = (p / nba, p % nba);
            let (f2, g2) = (q / nba, q % nba);
            Some(a.compose(f1, f2)? * nba + b.compose(g1, g2)?)
        })
        .expect("product of in-range tables is in range")
    }

    /// The opposite category; indices are kept.
    pub fn opposite(&self) -> FinCat {
        let n = self.n_arrows();
        let mut table = vec![NONE; n * n];
        for f in 0..n {
            for g in 0..n {
                let h = self.table[f * n + g];
                if h != NONE {
                    table[g * n + f] = h;
                }
            }
        }
        FinCat::assemble(
            self.obj_names.clone(),
            self.arrow_names.clone(),
            self.cod.clone(),
            self.dom.clone(),
            self.identity.clone(),
            table,
        )
    }

    /// The full subcategory on `objs`, numbered in the given order.
    pub fn full_subcategory(&self, objs: &[ObjId]) -> FinCat {
        let pos: HashMap<ObjId, ObjId> = objs.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let kept: Vec<ArrowId> = self
            .arrows()
            .filter(|&a| pos.contains_key(&self.dom[a]) && pos.contains_key(&self.cod[a]))
            .collect();
        let apos: HashMap<ArrowId, ArrowId> = kept.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        FinCat::from_fn(
            objs.iter().map(|&o| self.obj_names[o].clone()).collect(),
            kept.iter()
                .map(|&a| (self.arrow_names[a].clone(), pos[&self.dom[a]], pos[&self.cod[a]]))
                .collect(),
            objs.iter().map(|&o| apos[&self.identity[o]]).collect(),
            |f, g| apos.get(&self.compose(kept[f], kept[g])?).copied(),
        )
        .expect("full subcategory of a valid table")
    }

    /// A skeleton: the full subcategory on the least object of each
    /// isomorphism class. Equivalent categories have isomorphic skeleta.
    pub fn skeleton(&self) -> FinCat {
        let reps: Vec<ObjId> = self
            .objects()
            .filter(|&o| (0..o).all(|p| !self.hom(p, o).iter().any(|&a| self.is_iso(a))))
            .collect();
        self.full_subcategory(&reps)
    }

    /// Renders `g∘f` style for the diagrammatic composite `f;g`.
    pub fn render_composite(&self, f: ArrowId, g: ArrowId) -> String {
        format!("{}∘{}", self.arrow_names[g], self.arrow_names[f])
    }
}

/// Structural equality: names are ignored.
impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.n_objects() == other.n_objects()
            && self.dom == other.dom
            && self.cod == other.cod
            && self.identity == other.identity
            && self.table == other.table
    }
}

impl Eq for FinCat {}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCat")
            .field("objects", &self.obj_names)
            .field(
                "arrows",
                &self
                    .arrows()
                    .map(|a| {
                        format!(
                            "{}: {} -> {}",
                            self.arrow_names[a], self.obj_names[self.dom[a]], self.obj_names[self.cod[a]]
                        )
                    })
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Name-based builder. Identities `1<obj>` are created automatically and
/// composites with identities follow the unit law unless stated explicitly.
#[derive(Debug, Default, Clone)]
pub struct CatBuilder {
    objects: Vec<String>,
    arrows: Vec<(String, String, String)>,
    composites: Vec<(String, String, String)>,
}

impl CatBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(mut self, name: &str) -> Self {
        self.objects.push(name.to_string());
        self
    }

    pub fn arrow(mut self, name: &str, dom: &str, cod: &str) -> Self {
        self.arrows
            .push((name.to_string(), dom.to_string(), cod.to_string()));
        self
    }

    pub fn compose(mut self, f: &str, g: &str, h: &str) -> Self {
        self.composites
            .push((f.to_string(), g.to_string(), h.to_string()));
        self
    }

    pub fn build(self) -> Result<FinCat> {
        let obj_index: HashMap<&str, usize> = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut arrows: Vec<(String, ObjId, ObjId)> = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, n)| (format!("1{n}"), i, i))
            .collect();
        let identity: Vec<ArrowId> = (0..self.objects.len()).collect();
        for (name, d, c) in &self.arrows {
            let look = |o: &str| {
                obj_index.get(o).copied().ok_or_else(|| Error::Unresolved {
                    name: o.to_string(),
                    context: format!("arrow `{name}`"),
                })
            };
            arrows.push((name.clone(), look(d)?, look(c)?));
        }
        let arr_index: HashMap<String, usize> = arrows
            .iter()
            .enumerate()
            .map(|(i, (n, _, _))| (n.clone(), i))
            .collect();
        let mut table: HashMap<(usize, usize), usize> = HashMap::new();
        for (a, (_, d, c)) in arrows.iter().enumerate() {
            table.insert((identity[*d], a), a);
            table.insert((a, identity[*c]), a);
        }
        for (f, g, h) in &self.composites {
            let look = |n: &str| {
                arr_index.get(n).copied().ok_or_else(|| Error::Unresolved {
                    name: n.to_string(),
                    context: "composition table".into(),
                })
            };
            table.insert((look(f)?, look(g)?), look(h)?);
        }
        let mut triples: Vec<_> = table.into_iter().map(|((f, g), h)| (f, g, h)).collect();
        triples.sort_unstable();
        FinCat::new(self.objects, arrows, identity, triples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_is_valid() {
        let t = FinCat::terminal();
        assert!(t.validate().is_valid());
        assert_eq!((t.n_objects(), t.n_arrows()), (1, 1));
    }

    #[test]
    fn unit_law_violation_is_listed() {
        // f;id recorded as id
        let c = FinCat::new(
            vec!["a".into()],
            vec![("1a".into(), 0, 0), ("f".into(), 0, 0)],
            vec![0],
            [(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1)],
        )
        .unwrap();
        let r = c.validate();
        assert!(r.has(Law::UnitLaw));
        assert!(r.mentions(CellRef::Arrow(1)));
    }

    #[test]
    fn walking_idempotent_is_valid() {
        let c = FinCat::walking_idempotent();
        // all 8 composable triples over {1, e} associate
        assert!(c.validate().is_valid());
        assert_eq!(c.n_arrows(), 2);
    }

    #[test]
    fn missing_composite_is_reported() {
        let c = FinCat::new(
            vec!["a".into()],
            vec![("1a".into(), 0, 0), ("e".into(), 0, 0)],
            vec![0],
            [(0, 0, 0), (0, 1, 1), (1, 0, 1)],
        )
        .unwrap();
        assert!(c.validate().has(Law::MissingComposite));
    }

    #[test]
    fn associativity_failure_is_reported() {
        // (a;b);a = b;a = a but a;(b;a) = a;a = b
        let c = CatBuilder::new()
            .object("*")
            .arrow("a", "*", "*")
            .arrow("b", "*", "*")
            .compose("a", "a", "b")
            .compose("b", "a", "a")
            .compose("a", "b", "b")
            .compose("b", "b", "b")
            .build()
            .unwrap();
        assert!(c.validate().has(Law::Associativity));
    }

    #[test]
    fn inverses_are_detected() {
        let c = FinCat::walking_iso();
        assert!(c.validate().is_valid());
        assert!(c.is_groupoid());
        let i = c.find_arrow("i").unwrap();
        assert_eq!(c.inverse(i), c.find_arrow("j"));
        assert!(!FinCat::walking_idempotent().is_groupoid());
    }

    #[test]
    fn product_counts_multiply() {
        let p = FinCat::product(&FinCat::walking_arrow(), &FinCat::walking_iso());
        assert!(p.validate().is_valid());
        assert_eq!(p.n_objects(), 4);
        assert_eq!(p.n_arrows(), 3 * 4);
    }

    #[test]
    fn opposite_is_valid_and_involutive() {
        let c = FinCat::walking_arrow();
        let op = c.opposite();
        assert!(op.validate().is_valid());
        assert_eq!(op.opposite(), c);
    }
}

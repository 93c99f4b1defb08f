//! Normalized pseudo-functors into finite categories, pseudo-natural
//! transformations and modifications.
//!
//! Contravariant pseudo-functors are stored against the same shape as
//! covariant ones, with a variance flag. Every check is carried out in the
//! covariant view: the shape itself for covariant functors, its 1-dual with
//! unchanged indices for contravariant ones. In that view a compositor at a
//! composable pair `(f, g)` is a transformation `Ff;Fg ⇒ F(f;g)`.

mod build;
mod enumerate;
mod nat;

pub use build::{hom_bifunctor, hom_pseudo_functor, product_bifunctor, representable, HomPseudoFunctor};
pub use enumerate::{enumerate_modifications, enumerate_pseudo_naturals, ModificationCategory, pseudo_nat_category};
pub use nat::{Modification, PseudoNat};

use crate::fincat::{FinCat, Functor, NatTransf, ObjId};
use crate::report::{CellRef, Law, ValidationReport};
use crate::twocat::{OneId, TwoCat, TwoId};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// A normalized pseudo-functor `shape -> Cat` (or `shape^op -> Cat`).
///
/// For a covariant functor, `transition[f]` for `f: C -> D` is `f_!: E(C) -> E(D)`
/// and `compositor[(f, g)]` is `f_!;g_! ⇒ (f;g)_!`. For a contravariant one,
/// `transition[f]` is `f^*: W(D) -> W(C)` and `compositor[(f, g)]` is
/// `g^*;f^* ⇒ (f;g)^*`. In both cases `cell_image[α]` for `α: f ⇒ g` is a
/// transformation from the image of `f` to the image of `g`.
#[derive(Debug, Clone)]
pub struct PseudoFunctor {
    pub variance: Variance,
    pub shape: Arc<TwoCat>,
    pub values: Vec<Arc<FinCat>>,
    pub transition: Vec<Functor>,
    pub cell_image: Vec<NatTransf>,
    pub compositor: HashMap<(OneId, OneId), NatTransf>,
}

impl PartialEq for PseudoFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.variance == other.variance
            && *self.shape == *other.shape
            && self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| **a == **b)
            && self.transition == other.transition
            && self.cell_image == other.cell_image
            && self.compositor == other.compositor
    }
}

impl PseudoFunctor {
    /// Fills every compositor with an identity, giving a 2-functor when the
    /// transitions compose strictly.
    pub fn strict(
        variance: Variance,
        shape: Arc<TwoCat>,
        values: Vec<Arc<FinCat>>,
        transition: Vec<Functor>,
        cell_image: Vec<NatTransf>,
    ) -> PseudoFunctor {
        let mut pf = PseudoFunctor {
            variance,
            shape,
            values,
            transition,
            cell_image,
            compositor: HashMap::new(),
        };
        pf.compositor = pf.identity_compositors();
        pf
    }

    /// Identity transformations at every composable pair, targeting the
    /// stored image of the composite.
    pub fn identity_compositors(&self) -> HashMap<(OneId, OneId), NatTransf> {
        let k = &*self.shape;
        let mut out = HashMap::new();
        for f in k.one_cells() {
            for g in k.out_ones(k.cod(f)) {
                let (a, b) = self.view_pair(f, g);
                let Ok(src) = self.transition[a].then(&self.transition[b]) else { continue };
                let mut id = NatTransf::identity(&src);
                id.target = self.transition[k.hc1(f, g)].clone();
                out.insert((f, g), id);
            }
        }
        out
    }

    /// The constant pseudo-functor at `cat`.
    pub fn constant(variance: Variance, shape: Arc<TwoCat>, cat: Arc<FinCat>) -> PseudoFunctor {
        let id = Functor::identity(&cat);
        let n0 = shape.n_objects();
        let n1 = shape.n_one();
        let n2 = shape.n_two();
        PseudoFunctor::strict(
            variance,
            shape,
            vec![cat; n0],
            vec![id.clone(); n1],
            vec![NatTransf::identity(&id); n2],
        )
    }

    pub fn is_covariant(&self) -> bool {
        self.variance == Variance::Covariant
    }

    pub fn value(&self, o: ObjId) -> &Arc<FinCat> {
        &self.values[o]
    }

    /// Domain of `f` in the covariant view.
    pub fn vdom(&self, f: OneId) -> ObjId {
        if self.is_covariant() {
            self.shape.dom(f)
        } else {
            self.shape.cod(f)
        }
    }

    /// Codomain of `f` in the covariant view.
    pub fn vcod(&self, f: OneId) -> ObjId {
        if self.is_covariant() {
            self.shape.cod(f)
        } else {
            self.shape.dom(f)
        }
    }

    /// Reorders a view-composable pair into shape order, or back.
    fn view_pair(&self, f: OneId, g: OneId) -> (OneId, OneId) {
        if self.is_covariant() {
            (f, g)
        } else {
            (g, f)
        }
    }

    /// `f` then `g` in the covariant view.
    pub fn vhc1(&self, f: OneId, g: OneId) -> Option<OneId> {
        let (a, b) = self.view_pair(f, g);
        self.shape.hcompose1(a, b)
    }

    /// Horizontal composite in the covariant view.
    pub fn vhc2(&self, a: TwoId, b: TwoId) -> Option<TwoId> {
        let (x, y) = self.view_pair(a, b);
        self.shape.hcompose2(x, y)
    }

    /// Compositor `Ff;Fg ⇒ F(f;g)` for a view-composable pair.
    pub fn vcompositor(&self, f: OneId, g: OneId) -> Option<&NatTransf> {
        self.compositor.get(&self.view_pair(f, g))
    }

    /// 1-cells with view domain `o`, in index order.
    pub fn vout(&self, o: ObjId) -> impl Iterator<Item = OneId> + '_ {
        self.shape.one_cells().filter(move |&f| self.vdom(f) == o)
    }

    /// Transition of `f`.
    pub fn tr(&self, f: OneId) -> &Functor {
        &self.transition[f]
    }

    /// Component of the cell image of `a` at object `x`.
    pub fn cell_at(&self, a: TwoId, x: ObjId) -> usize {
        self.cell_image[a].at(x)
    }

    /// Component of the compositor of a view-composable pair at `x`.
    pub fn comp_at(&self, f: OneId, g: OneId, x: ObjId) -> usize {
        self.vcompositor(f, g).expect("compositor present").at(x)
    }

    /// Inverse of [`PseudoFunctor::comp_at`].
    pub fn comp_inv_at(&self, f: OneId, g: OneId, x: ObjId) -> usize {
        let c = self.value(self.vcod(self.vhc1(f, g).expect("composable")));
        c.inverse(self.comp_at(f, g, x)).expect("compositor invertible")
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let k = &*self.shape;
        r.absorb("shape", k.validate());
        if !r.is_valid() {
            return r;
        }
        if self.values.len() != k.n_objects()
            || self.transition.len() != k.n_one()
            || self.cell_image.len() != k.n_two()
        {
            r.push(Law::Typing, vec![], "table sizes do not match the shape".into());
            return r;
        }
        for (o, v) in self.values.iter().enumerate() {
            let sub = v.validate();
            if !sub.is_valid() {
                r.push(Law::Typing, vec![CellRef::Object(o)], format!("value is not a category: {sub}"));
            }
        }
        if !r.is_valid() {
            return r;
        }
        self.check_transitions(&mut r);
        if !r.is_valid() {
            return r;
        }
        self.check_cells(&mut r);
        self.check_compositors(&mut r);
        if !r.is_valid() {
            return r;
        }
        self.check_horizontal(&mut r);
        self.check_associativity(&mut r);
        r
    }

    fn check_transitions(&self, r: &mut ValidationReport) {
        let k = &*self.shape;
        for f in k.one_cells() {
            let t = &self.transition[f];
            if *t.source != *self.values[self.vdom(f)] || *t.target != *self.values[self.vcod(f)] {
                r.push(Law::TransitionTyping, vec![CellRef::OneCell(f)], "transition has wrong endpoints".into());
                continue;
            }
            let sub = t.validate();
            if !sub.is_valid() {
                r.push(Law::TransitionTyping, vec![CellRef::OneCell(f)], format!("transition is not a functor: {sub}"));
            }
        }
        for o in k.objects() {
            let i = k.id1(o);
            if self.transition[i] != Functor::identity(&self.values[o]) {
                r.push(Law::Normalization, vec![CellRef::OneCell(i)], "identity 1-cell not sent to identity".into());
            }
        }
    }

    fn check_cells(&self, r: &mut ValidationReport) {
        let k = &*self.shape;
        for a in k.two_cells() {
            let t = &self.cell_image[a];
            if t.source != self.transition[k.src(a)] || t.target != self.transition[k.tgt(a)] {
                r.push(Law::CellImageTyping, vec![CellRef::TwoCell(a)], "cell image between wrong functors".into());
                continue;
            }
            let sub = t.validate();
            if !sub.is_valid() {
                r.push(Law::CellImageTyping, vec![CellRef::TwoCell(a)], format!("{sub}"));
            }
        }
        if !r.is_valid() {
            return;
        }
        for f in k.one_cells() {
            let a = k.id2(f);
            if self.cell_image[a] != NatTransf::identity(&self.transition[f]) {
                r.push(Law::VerticalFunctoriality, vec![CellRef::TwoCell(a)], "identity 2-cell not sent to identity".into());
            }
        }
        for a in k.two_cells() {
            for b in k.out_cells(k.tgt(a)) {
                let ab = k.vc(a, b);
                let comp = self.cell_image[a].vcompose(&self.cell_image[b]);
                if comp.as_ref() != Ok(&self.cell_image[ab]) {
                    r.push(
                        Law::VerticalFunctoriality,
                        vec![CellRef::TwoCell(a), CellRef::TwoCell(b)],
                        "image of a vertical composite".into(),
                    );
                }
            }
        }
    }

    fn check_compositors(&self, r: &mut ValidationReport) {
        let k = &*self.shape;
        for f in k.one_cells() {
            for g in self.vout(self.vcod(f)) {
                let w = vec![CellRef::OneCell(f), CellRef::OneCell(g)];
                let fg = self.vhc1(f, g).expect("valid shape");
                let Some(c) = self.vcompositor(f, g) else {
                    r.push(Law::CompositorTyping, w, "compositor missing".into());
                    continue;
                };
                let src = self.transition[f].then(&self.transition[g]).expect("typed transitions");
                if c.source != src || c.target != self.transition[fg] {
                    r.push(Law::CompositorTyping, w, "compositor between wrong functors".into());
                    continue;
                }
                let sub = c.validate();
                if !sub.is_valid() {
                    r.push(Law::CompositorTyping, w, format!("{sub}"));
                    continue;
                }
                if !c.is_invertible() {
                    r.push(Law::NotInvertible, w.clone(), "compositor not invertible".into());
                }
                if (k.is_id1(f) || k.is_id1(g)) && *c != NatTransf::identity(&src) {
                    r.push(Law::Normalization, w, "compositor with an identity leg is not an identity".into());
                }
            }
        }
    }

    /// `(Fα*Fβ);φ_{g,k} = φ_{f,h};F(α*β)` in the view, for `α: f ⇒ g` and `β: h ⇒ k`.
    fn check_horizontal(&self, r: &mut ValidationReport) {
        let k = &*self.shape;
        for a in k.two_cells() {
            let (f, g) = (k.src(a), k.tgt(a));
            let (src_obj, mid) = (self.vdom(f), self.vcod(f));
            for b in k.two_cells().filter(|&b| self.vdom(k.src(b)) == mid) {
                let (h, kk) = (k.src(b), k.tgt(b));
                let ab = self.vhc2(a, b).expect("valid shape");
                let tgt = self.value(self.vcod(h));
                let fh = self.tr(h);
                let bad = self.values[src_obj].objects().find(|&x| {
                    let lhs = tgt.comp_path(&[
                        fh.arr(self.cell_at(a, x)),
                        self.cell_at(b, self.tr(g).obj(x)),
                        self.comp_at(g, kk, x),
                    ]);
                    let rhs = tgt.comp(self.comp_at(f, h, x), self.cell_at(ab, x));
                    lhs != rhs
                });
                if let Some(x) = bad {
                    r.push(
                        Law::HorizontalCoherence,
                        vec![CellRef::TwoCell(a), CellRef::TwoCell(b)],
                        format!("fails at object {}", self.values[src_obj].obj_name(x)),
                    );
                }
            }
        }
    }

    /// `Fh(φ_{f,g});φ_{fg,h} = φ_{g,h}Ff;φ_{f,gh}` in the view.
    fn check_associativity(&self, r: &mut ValidationReport) {
        let k = &*self.shape;
        for f in k.one_cells() {
            for g in self.vout(self.vcod(f)) {
                let fg = self.vhc1(f, g).expect("valid shape");
                for h in self.vout(self.vcod(g)) {
                    let gh = self.vhc1(g, h).expect("valid shape");
                    let tgt = self.value(self.vcod(h));
                    let bad = self.values[self.vdom(f)].objects().find(|&x| {
                        let lhs = tgt.comp(self.tr(h).arr(self.comp_at(f, g, x)), self.comp_at(fg, h, x));
                        let rhs = tgt.comp(self.comp_at(g, h, self.tr(f).obj(x)), self.comp_at(f, gh, x));
                        lhs != rhs
                    });
                    if let Some(x) = bad {
                        r.push(
                            Law::CompositorAssociativity,
                            vec![CellRef::OneCell(f), CellRef::OneCell(g), CellRef::OneCell(h)],
                            format!("fails at object {}", self.values[self.vdom(f)].obj_name(x)),
                        );
                    }
                }
            }
        }
    }
}

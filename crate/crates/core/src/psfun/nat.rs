use super::PseudoFunctor;
use crate::fincat::{Functor, NatTransf, ObjId};
use crate::report::{CellRef, Law, ValidationReport};
use crate::twocat::OneId;
use std::sync::Arc;

/// A pseudo-natural transformation `F ⇒ G`.
///
/// For `f: A -> B` in the covariant view, `coherence[f]` is an invertible
/// transformation `Ff;α_B ⇒ α_A;Gf`.
#[derive(Debug, Clone)]
pub struct PseudoNat {
    pub source: Arc<PseudoFunctor>,
    pub target: Arc<PseudoFunctor>,
    pub component: Vec<Functor>,
    pub coherence: Vec<NatTransf>,
}

/// Equality of the data; the endpoint functors are compared by identity
/// first and structurally otherwise.
impl PartialEq for PseudoNat {
    fn eq(&self, other: &Self) -> bool {
        self.component == other.component
            && self.coherence == other.coherence
            && (Arc::ptr_eq(&self.source, &other.source) || *self.source == *other.source)
            && (Arc::ptr_eq(&self.target, &other.target) || *self.target == *other.target)
    }
}

impl PseudoNat {
    /// The identity on `f`.
    pub fn identity(f: &Arc<PseudoFunctor>) -> PseudoNat {
        let component: Vec<Functor> = f.values.iter().map(Functor::identity).collect();
        let coherence = f.transition.iter().map(NatTransf::identity).collect();
        PseudoNat {
            source: f.clone(),
            target: f.clone(),
            component,
            coherence,
        }
    }

    pub fn is_two_natural(&self) -> bool {
        self.coherence.iter().all(|t| t.source == t.target && *t == NatTransf::identity(&t.source))
    }

    /// Component of the coherence cell at `f` on object `y` of the source value.
    pub fn coh_at(&self, f: OneId, y: ObjId) -> usize {
        self.coherence[f].at(y)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let (fs, gs) = (&*self.source, &*self.target);
        if fs.variance != gs.variance || *fs.shape != *gs.shape {
            r.push(Law::NotParallel, vec![], "pseudo-functors are not parallel".into());
            return r;
        }
        let k = &*fs.shape;
        if self.component.len() != k.n_objects() || self.coherence.len() != k.n_one() {
            r.push(Law::Typing, vec![], "table sizes do not match the shape".into());
            return r;
        }
        for o in k.objects() {
            let c = &self.component[o];
            if *c.source != **fs.value(o) || *c.target != **gs.value(o) {
                r.push(Law::ComponentTyping, vec![CellRef::Object(o)], "component has wrong endpoints".into());
                continue;
            }
            let sub = c.validate();
            if !sub.is_valid() {
                r.push(Law::ComponentTyping, vec![CellRef::Object(o)], format!("{sub}"));
            }
        }
        if !r.is_valid() {
            return r;
        }
        for f in k.one_cells() {
            let (a, b) = (fs.vdom(f), fs.vcod(f));
            let w = vec![CellRef::OneCell(f)];
            let src = fs.tr(f).then(&self.component[b]).expect("typed");
            let tgt = self.component[a].then(gs.tr(f)).expect("typed");
            let t = &self.coherence[f];
            if t.source != src || t.target != tgt {
                r.push(Law::CoherenceTyping, w, "coherence cell between wrong functors".into());
                continue;
            }
            let sub = t.validate();
            if !sub.is_valid() {
                r.push(Law::CoherenceTyping, w, format!("{sub}"));
                continue;
            }
            if !t.is_invertible() {
                r.push(Law::NotInvertible, w, "coherence cell not invertible".into());
            }
        }
        if !r.is_valid() {
            return r;
        }
        for a in k.two_cells() {
            if let Some(y) = self.pn2_failure(a) {
                r.push(
                    Law::PseudoNaturality2,
                    vec![CellRef::TwoCell(a)],
                    format!("fails at object {}", fs.value(fs.vdom(k.src(a))).obj_name(y)),
                );
            }
        }
        for f in k.one_cells() {
            for g in fs.vout(fs.vcod(f)) {
                if let Some(y) = self.pn1_failure(f, g) {
                    r.push(
                        Law::PseudoNaturality1,
                        vec![CellRef::OneCell(f), CellRef::OneCell(g)],
                        format!("fails at object {}", fs.value(fs.vdom(f)).obj_name(y)),
                    );
                }
            }
        }
        r
    }

    /// First object where the composable-pair condition fails.
    pub fn pn1_failure(&self, f: OneId, g: OneId) -> Option<ObjId> {
        pn1_failure(&self.source, &self.target, &self.component, &self.coherence, f, g)
    }

    /// First object where the 2-cell condition fails for `θ`.
    pub fn pn2_failure(&self, theta: usize) -> Option<ObjId> {
        pn2_failure(&self.source, &self.target, &self.component, &self.coherence, theta)
    }
}

/// At `y`: `α_g[Ff y];Gg(α_f[y]);φG_{f,g}[α_A y] = α_C(φF_{f,g}[y]);α_{fg}[y]`.
pub(crate) fn pn1_failure(
    fs: &PseudoFunctor,
    gs: &PseudoFunctor,
    component: &[Functor],
    coherence: &[NatTransf],
    f: OneId,
    g: OneId,
) -> Option<ObjId> {
    let fg = fs.vhc1(f, g)?;
    let a = fs.vdom(f);
    let c = fs.vcod(g);
    let gc = gs.value(c);
    fs.value(a).objects().find(|&y| {
        let ay = component[a].obj(y);
        let lhs = gc.comp_path(&[
            coherence[g].at(fs.tr(f).obj(y)),
            gs.tr(g).arr(coherence[f].at(y)),
            gs.comp_at(f, g, ay),
        ]);
        let rhs = gc.comp(component[c].arr(fs.comp_at(f, g, y)), coherence[fg].at(y));
        lhs != rhs
    })
}

/// At `y`, for `θ: f ⇒ g`: `α_B(Fθ_y);α_g[y] = α_f[y];Gθ_{α_A y}`.
pub(crate) fn pn2_failure(
    fs: &PseudoFunctor,
    gs: &PseudoFunctor,
    component: &[Functor],
    coherence: &[NatTransf],
    theta: usize,
) -> Option<ObjId> {
    let k = &*fs.shape;
    let (f, g) = (k.src(theta), k.tgt(theta));
    let (a, b) = (fs.vdom(f), fs.vcod(f));
    let gb = gs.value(b);
    fs.value(a).objects().find(|&y| {
        let lhs = gb.comp(component[b].arr(fs.cell_at(theta, y)), coherence[g].at(y));
        let rhs = gb.comp(coherence[f].at(y), gs.cell_at(theta, component[a].obj(y)));
        lhs != rhs
    })
}

/// A modification `m: α ⇛ β`, with `component[A]: α_A ⇒ β_A`.
#[derive(Debug, Clone, PartialEq)]
pub struct Modification {
    pub source: Arc<PseudoNat>,
    pub target: Arc<PseudoNat>,
    pub component: Vec<NatTransf>,
}

impl Modification {
    pub fn identity(t: &Arc<PseudoNat>) -> Modification {
        Modification {
            source: t.clone(),
            target: t.clone(),
            component: t.component.iter().map(NatTransf::identity).collect(),
        }
    }

    /// `self` then `other`, componentwise.
    pub fn vcompose(&self, other: &Modification) -> Option<Modification> {
        let component = self
            .component
            .iter()
            .zip(&other.component)
            .map(|(a, b)| a.vcompose(b).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Modification {
            source: self.source.clone(),
            target: other.target.clone(),
            component,
        })
    }

    /// First object where the condition fails for `f`.
    pub fn condition_failure(&self, f: OneId) -> Option<ObjId> {
        modification_failure(&self.source, &self.target, &self.component, f)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let (s, t) = (&*self.source, &*self.target);
        if !(Arc::ptr_eq(&s.source, &t.source) || *s.source == *t.source)
            || !(Arc::ptr_eq(&s.target, &t.target) || *s.target == *t.target)
        {
            r.push(Law::NotParallel, vec![], "transformations are not parallel".into());
            return r;
        }
        let k = &*s.source.shape;
        if self.component.len() != k.n_objects() {
            r.push(Law::Typing, vec![], "component count does not match objects".into());
            return r;
        }
        for o in k.objects() {
            let m = &self.component[o];
            if m.source != s.component[o] || m.target != t.component[o] {
                r.push(Law::ComponentTyping, vec![CellRef::Object(o)], "component between wrong functors".into());
                continue;
            }
            let sub = m.validate();
            if !sub.is_valid() {
                r.push(Law::ComponentTyping, vec![CellRef::Object(o)], format!("{sub}"));
            }
        }
        if !r.is_valid() {
            return r;
        }
        for f in k.one_cells() {
            if let Some(y) = self.condition_failure(f) {
                r.push(
                    Law::ModificationCondition,
                    vec![CellRef::OneCell(f)],
                    format!("fails at object {}", s.source.value(s.source.vdom(f)).obj_name(y)),
                );
            }
        }
        r
    }
}

/// At `y`, for `f: A -> B`: `m_B[Ff y];β_f[y] = α_f[y];Gf(m_A[y])`.
pub(crate) fn modification_failure(s: &PseudoNat, t: &PseudoNat, component: &[NatTransf], f: OneId) -> Option<ObjId> {
    let (fs, gs) = (&*s.source, &*s.target);
    let (a, b) = (fs.vdom(f), fs.vcod(f));
    let gb = gs.value(b);
    fs.value(a).objects().find(|&y| {
        let lhs = gb.comp(component[b].at(fs.tr(f).obj(y)), t.coh_at(f, y));
        let rhs = gb.comp(s.coh_at(f, y), gs.tr(f).arr(component[a].at(y)));
        lhs != rhs
    })
}

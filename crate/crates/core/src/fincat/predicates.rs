use super::{ArrowId, FinCat, Functor, NatTransf, ObjId};
use crate::report::CellRef;
use serde::Serialize;

/// Outcome of the three filteredness conditions; each field holds the first
/// failing witness, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilteredReport {
    pub nonempty: bool,
    /// A pair of objects admitting no span `X <- Z -> Y`.
    pub no_span: Option<(ObjId, ObjId)>,
    /// A parallel pair `f, g` with no `h` such that `h;f = h;g`.
    pub no_equalizer: Option<(ArrowId, ArrowId)>,
}

impl FilteredReport {
    pub fn is_filtered(&self) -> bool {
        self.nonempty && self.no_span.is_none() && self.no_equalizer.is_none()
    }
}

/// Filteredness with spans `X <- Z -> Y` and equalizing arrows into the
/// common domain (the variant elsewhere called cofiltered).
pub fn is_filtered(c: &FinCat) -> FilteredReport {
    let nonempty = c.n_objects() > 0;
    let no_span = c
        .objects()
        .flat_map(|x| c.objects().map(move |y| (x, y)))
        .find(|&(x, y)| {
            !c.objects()
                .any(|z| !c.hom(z, x).is_empty() && !c.hom(z, y).is_empty())
        });
    let no_equalizer = c
        .arrows()
        .flat_map(|f| c.hom(c.dom(f), c.cod(f)).iter().map(move |&g| (f, g)))
        .filter(|&(f, g)| f < g)
        .find(|&(f, g)| {
            let x = c.dom(f);
            !c.objects().any(|z| {
                c.hom(z, x)
                    .iter()
                    .any(|&h| c.compose(h, f) == c.compose(h, g))
            })
        });
    FilteredReport {
        nonempty,
        no_span,
        no_equalizer,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoVerdict {
    Iso,
    EquivWithUnit,
    Fail,
}

/// Verdict of [`check_isomorphism`] or [`check_equivalence`].
#[derive(Debug, Clone)]
pub struct CatIsoReport {
    pub forward: Functor,
    pub backward: Functor,
    pub verdict: IsoVerdict,
    pub witness: Option<(CellRef, String)>,
}

impl CatIsoReport {
    pub fn passed(&self) -> bool {
        self.verdict != IsoVerdict::Fail
    }

    fn fail(fwd: &Functor, bwd: &Functor, cell: CellRef, why: String) -> Self {
        CatIsoReport {
            forward: fwd.clone(),
            backward: bwd.clone(),
            verdict: IsoVerdict::Fail,
            witness: Some((cell, why)),
        }
    }
}

fn round_trip_witness(f: &Functor, g: &Functor, side: &str) -> Option<(CellRef, String)> {
    let c = &*f.source;
    for o in c.objects() {
        if g.obj(f.obj(o)) != o {
            return Some((CellRef::Object(o), format!("{side} round trip moves object")));
        }
    }
    for a in c.arrows() {
        if g.arr(f.arr(a)) != a {
            return Some((CellRef::Arrow(a), format!("{side} round trip moves arrow")));
        }
    }
    None
}

fn anti_parallel(fwd: &Functor, bwd: &Functor) -> bool {
    *fwd.source == *bwd.target
        && *fwd.target == *bwd.source
        && fwd.obj_map.len() == fwd.source.n_objects()
        && bwd.obj_map.len() == bwd.source.n_objects()
}

/// Strict isomorphism: both composites are literal identities.
pub fn check_isomorphism(fwd: &Functor, bwd: &Functor) -> CatIsoReport {
    if !anti_parallel(fwd, bwd) {
        return CatIsoReport::fail(fwd, bwd, CellRef::Object(0), "functors are not anti-parallel".into());
    }
    if let Some((cell, why)) =
        round_trip_witness(fwd, bwd, "source").or_else(|| round_trip_witness(bwd, fwd, "target"))
    {
        return CatIsoReport::fail(fwd, bwd, cell, why);
    }
    CatIsoReport {
        forward: fwd.clone(),
        backward: bwd.clone(),
        verdict: IsoVerdict::Iso,
        witness: None,
    }
}

/// Certificate check for an equivalence: `unit: id ⇒ fwd;bwd` and
/// `counit: bwd;fwd ⇒ id` must be natural isomorphisms.
pub fn check_equivalence(
    fwd: &Functor,
    bwd: &Functor,
    unit: &NatTransf,
    counit: &NatTransf,
) -> CatIsoReport {
    if !anti_parallel(fwd, bwd) {
        return CatIsoReport::fail(fwd, bwd, CellRef::Object(0), "functors are not anti-parallel".into());
    }
    let (Ok(fb), Ok(bf)) = (fwd.then(bwd), bwd.then(fwd)) else {
        return CatIsoReport::fail(fwd, bwd, CellRef::Object(0), "composites undefined".into());
    };
    let checks: [(&NatTransf, Functor, Functor, &str); 2] = [
        (unit, Functor::identity(&fwd.source), fb, "unit"),
        (counit, bf, Functor::identity(&fwd.target), "counit"),
    ];
    for (t, s, g, name) in checks {
        if t.source != s || t.target != g {
            return CatIsoReport::fail(fwd, bwd, CellRef::Object(0), format!("{name} is mistyped"));
        }
        if let Some(v) = t.validate().first() {
            let cell = v.witness.first().copied().unwrap_or(CellRef::Object(0));
            return CatIsoReport::fail(fwd, bwd, cell, format!("{name}: {v}"));
        }
        let x = &*t.source.target;
        if let Some(o) = (0..t.components.len()).find(|&o| !x.is_iso(t.at(o))) {
            return CatIsoReport::fail(fwd, bwd, CellRef::Object(o), format!("{name} component not invertible"));
        }
    }
    CatIsoReport {
        forward: fwd.clone(),
        backward: bwd.clone(),
        verdict: IsoVerdict::EquivWithUnit,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn filtered_basics() {
        assert!(!is_filtered(&FinCat::empty()).nonempty);
        assert!(is_filtered(&FinCat::terminal()).is_filtered());
        assert_eq!(is_filtered(&FinCat::discrete(2)).no_span, Some((0, 1)));
        assert!(is_filtered(&FinCat::walking_idempotent()).is_filtered());
    }

    #[test]
    fn swap_without_inverse_fails() {
        let i = Arc::new(FinCat::walking_iso());
        // swap objects and send i <-> j; applied twice it is the identity
        let swap = Functor::new(i.clone(), i.clone(), vec![1, 0], vec![1, 0, 3, 2]);
        assert!(swap.validate().is_valid());
        assert_eq!(check_isomorphism(&swap, &swap).verdict, IsoVerdict::Iso);
        let id = Functor::identity(&i);
        let r = check_isomorphism(&swap, &id);
        assert_eq!(r.verdict, IsoVerdict::Fail);
        assert_eq!(r.witness.unwrap().0, CellRef::Object(0));
    }

    #[test]
    fn identity_equivalence() {
        let c = Arc::new(FinCat::walking_arrow());
        let id = Functor::identity(&c);
        let t = NatTransf::identity(&id);
        assert_eq!(check_equivalence(&id, &id, &t, &t).verdict, IsoVerdict::EquivWithUnit);
    }
}

use super::doc::*;
use super::resolve::Spec;
use crate::error::{Error, Result};
use crate::fincat::{FinCat, Functor, NatTransf};
use crate::psfun::PseudoFunctor;
use crate::twocat::TwoCat;
use std::collections::BTreeMap;
use toml::Spanned;

fn row(a: &str, b: &str, c: &str) -> Row {
    (a.to_string(), b.to_string(), c.to_string())
}

/// Explicit tables for `c`: non-identity arrows and the composites of
/// non-identity pairs.
pub fn category_block(c: &FinCat) -> CategoryBlock {
    let non_id: Vec<usize> = c.arrows().filter(|&a| !c.is_identity(a)).collect();
    let mut compose = Vec::new();
    for &f in &non_id {
        for &g in &non_id {
            if let Some(h) = c.compose(f, g) {
                compose.push(row(c.arrow_name(f), c.arrow_name(g), c.arrow_name(h)));
            }
        }
    }
    CategoryBlock {
        builtin: None,
        objects: c.obj_names().to_vec(),
        arrows: non_id
            .iter()
            .map(|&a| row(c.arrow_name(a), c.obj_name(c.dom(a)), c.obj_name(c.cod(a))))
            .collect(),
        compose,
    }
}

/// Explicit tables for `k`, leaving out composites fixed by the unit laws.
/// Fails when identities do not follow the `1<name>` convention.
pub fn shape_block(k: &TwoCat) -> Result<ShapeBlock> {
    for o in k.objects() {
        if k.one_name(k.id1(o)) != format!("1{}", k.obj_name(o)) {
            return Err(Error::Precondition(format!("identity of `{}` is not named `1{0}`", k.obj_name(o))));
        }
    }
    for f in k.one_cells() {
        if k.two_name(k.id2(f)) != format!("1{}", k.one_name(f)) {
            return Err(Error::Precondition(format!("identity of `{}` is not named `1{0}`", k.one_name(f))));
        }
    }
    let mut b = ShapeBlock {
        objects: k.obj_names().to_vec(),
        ..Default::default()
    };
    for f in k.one_cells().filter(|&f| !k.is_id1(f)) {
        b.one_cells.push(row(k.one_name(f), k.obj_name(k.dom(f)), k.obj_name(k.cod(f))));
    }
    for a in k.two_cells().filter(|&a| !k.is_id2(a)) {
        b.two_cells.push(row(k.two_name(a), k.one_name(k.src(a)), k.one_name(k.tgt(a))));
    }
    let whisker_of_unit = |a: usize| k.is_id2(a) && k.is_id1(k.src(a));
    for a in k.two_cells() {
        for c in k.two_cells() {
            if let Some(v) = k.vcompose(a, c) {
                if !k.is_id2(a) && !k.is_id2(c) {
                    b.vcompose.push(row(k.two_name(a), k.two_name(c), k.two_name(v)));
                }
            }
            if let Some(h) = k.hcompose2(a, c) {
                let forced = (k.is_id2(a) && k.is_id2(c)) || whisker_of_unit(a) || whisker_of_unit(c);
                if !forced {
                    b.hcompose2.push(row(k.two_name(a), k.two_name(c), k.two_name(h)));
                }
            }
        }
    }
    for f in k.one_cells().filter(|&f| !k.is_id1(f)) {
        for g in k.out_ones(k.cod(f)).filter(|&g| !k.is_id1(g)) {
            b.hcompose1.push(row(k.one_name(f), k.one_name(g), k.one_name(k.hc1(f, g))));
        }
    }
    Ok(b)
}

fn functor_map(f: &Functor) -> FunctorMap {
    let (s, t) = (&f.source, &f.target);
    FunctorMap {
        objects: s
            .objects()
            .map(|o| (s.obj_name(o).to_string(), t.obj_name(f.obj(o)).to_string()))
            .collect(),
        arrows: s
            .arrows()
            .filter(|&a| !s.is_identity(a))
            .map(|a| (s.arrow_name(a).to_string(), t.arrow_name(f.arr(a)).to_string()))
            .collect(),
    }
}

fn component_map(t: &NatTransf) -> BTreeMap<String, String> {
    let (s, x) = (&t.source.source, &t.source.target);
    s.objects()
        .map(|o| (s.obj_name(o).to_string(), x.arrow_name(t.at(o)).to_string()))
        .collect()
}

fn is_identity_transf(t: &NatTransf) -> bool {
    let x = &t.source.target;
    t.components.iter().all(|&a| x.is_identity(a))
}

/// Explicit form of a functor written with tables; `values` keeps the
/// category block names of the original.
fn functor_block(original: &FunctorBlock, pf: &PseudoFunctor) -> FunctorBlock {
    let k = &*pf.shape;
    let mut b = FunctorBlock {
        shape: original.shape.clone(),
        variance: Some(pf.variance),
        values: original.values.clone(),
        ..Default::default()
    };
    for f in k.one_cells().filter(|&f| !k.is_id1(f)) {
        b.transitions.insert(k.one_name(f).to_string(), functor_map(&pf.transition[f]));
    }
    for a in k.two_cells().filter(|&a| !k.is_id2(a)) {
        b.cells.insert(k.two_name(a).to_string(), component_map(&pf.cell_image[a]));
    }
    let mut pairs: Vec<_> = pf.compositor.keys().copied().collect();
    pairs.sort_unstable();
    for (f, g) in pairs {
        let c = &pf.compositor[&(f, g)];
        if !is_identity_transf(c) {
            b.compositors.push(CompositorEntry {
                first: k.one_name(f).to_string(),
                second: k.one_name(g).to_string(),
                components: component_map(c),
            });
        }
    }
    b
}

fn spanned<T>(t: T) -> Spanned<T> {
    Spanned::new(0..0, t)
}

/// The canonical document of a resolved spec: builtin categories and shapes
/// are expanded into tables, shorthand defaults are left out, and functors
/// given as `constant` or `representable` stay in that form.
pub fn normalize(spec: &Spec) -> Result<SpecDocument> {
    let d = &spec.document;
    let mut out = SpecDocument {
        version: 1,
        jobs: d.jobs.iter().map(|j| spanned(j.get_ref().clone())).collect(),
        ..Default::default()
    };
    for (name, c) in &spec.categories {
        out.categories.insert(name.clone(), spanned(category_block(c)));
    }
    for (name, k) in &spec.shapes {
        let original = d.shapes[name].get_ref();
        let block = if original.locally_discrete.is_some() {
            ShapeBlock {
                locally_discrete: original.locally_discrete.clone(),
                ..Default::default()
            }
        } else {
            shape_block(k)?
        };
        out.shapes.insert(name.clone(), spanned(block));
    }
    for (name, pf) in &spec.functors {
        let original = d.functors[name].get_ref();
        let block = if original.constant.is_some() || original.representable.is_some() {
            FunctorBlock {
                shape: original.shape.clone(),
                variance: Some(pf.variance),
                constant: original.constant.clone(),
                representable: original.representable.clone(),
                ..Default::default()
            }
        } else {
            functor_block(original, pf)
        };
        out.functors.insert(name.clone(), spanned(block));
    }
    Ok(out)
}

/// Writes a document as TOML.
pub fn to_toml(doc: &SpecDocument) -> Result<String> {
    toml::to_string_pretty(doc).map_err(|e| Error::Internal(format!("serialization failed: {e}")))
}

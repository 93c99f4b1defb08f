use super::doc::*;
use crate::error::{Error, Result};
use crate::fincat::{CatBuilder, FinCat, Functor, NatTransf};
use crate::psfun::{representable, PseudoFunctor, Variance};
use crate::twocat::{idempotent_shape, walking_two_cell, TwoCat, TwoCatBuilder};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::Range;
use std::sync::Arc;

/// A parsed document whose blocks have been built and validated.
#[derive(Debug, Clone)]
pub struct Spec {
    pub document: SpecDocument,
    pub categories: BTreeMap<String, Arc<FinCat>>,
    pub shapes: BTreeMap<String, Arc<TwoCat>>,
    pub functors: BTreeMap<String, Arc<PseudoFunctor>>,
    /// Shape block name of each functor.
    pub functor_shape: BTreeMap<String, String>,
}

/// 1-based line and column of a byte offset.
pub fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn located(text: &str, span: Range<usize>, err: Error) -> Error {
    let (line, column) = line_column(text, span.start);
    Error::At {
        line,
        column,
        inner: Box::new(err),
    }
}

fn unresolved(name: &str, context: impl Into<String>) -> Error {
    Error::Unresolved {
        name: name.to_string(),
        context: context.into(),
    }
}

fn invalid(block: &str, details: impl Into<String>) -> Error {
    Error::Invalid {
        block: block.to_string(),
        details: details.into(),
    }
}

/// Parses and resolves a document. Every block is built and passes its
/// validator, and every job argument resolves, before this returns.
pub fn parse_spec(text: &str) -> Result<Spec> {
    let document: SpecDocument = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |s| line_column(text, s.start));
        Error::Parse {
            line,
            column,
            message: e.message().trim().to_string(),
        }
    })?;
    resolve(document, text)
}

/// Resolves an already deserialized document; `text` is only used to turn
/// spans into positions.
pub fn resolve(document: SpecDocument, text: &str) -> Result<Spec> {
    if document.version != 1 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("unsupported version {}", document.version),
        });
    }
    if document.categories.is_empty() && document.shapes.is_empty() && document.functors.is_empty() && document.jobs.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no blocks".into(),
        });
    }
    let mut spec = Spec {
        document: document.clone(),
        categories: BTreeMap::new(),
        shapes: BTreeMap::new(),
        functors: BTreeMap::new(),
        functor_shape: BTreeMap::new(),
    };
    for (name, block) in &document.categories {
        let c = build_category(name, block.get_ref()).map_err(|e| located(text, block.span(), e))?;
        spec.categories.insert(name.clone(), Arc::new(c));
    }
    for (name, block) in &document.shapes {
        let k = build_shape(name, block.get_ref(), &spec.categories).map_err(|e| located(text, block.span(), e))?;
        spec.shapes.insert(name.clone(), Arc::new(k));
    }
    for (name, block) in &document.functors {
        let b = block.get_ref();
        let f = build_functor(name, b, &spec).map_err(|e| located(text, block.span(), e))?;
        spec.functors.insert(name.clone(), Arc::new(f));
        spec.functor_shape.insert(name.clone(), b.shape.clone());
    }
    for (i, job) in document.jobs.iter().enumerate() {
        check_job(i, job.get_ref(), &spec).map_err(|e| located(text, job.span(), e))?;
    }
    Ok(spec)
}

fn builtin_category(name: &str) -> Option<FinCat> {
    Some(match name {
        "terminal" => FinCat::terminal(),
        "empty" => FinCat::empty(),
        "walking-arrow" => FinCat::walking_arrow(),
        "walking-idempotent" => FinCat::walking_idempotent(),
        "walking-iso" => FinCat::walking_iso(),
        _ => FinCat::discrete(name.strip_prefix("discrete-")?.parse().ok()?),
    })
}

fn builtin_shape(name: &str) -> Option<TwoCat> {
    Some(match name {
        "point" => TwoCat::locally_discrete(&FinCat::terminal()),
        "idempotent" => idempotent_shape(),
        "walking-two-cell" => walking_two_cell(),
        _ => return None,
    })
}

fn unique<'a>(what: &str, names: impl IntoIterator<Item = &'a String>) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::Precondition(format!("duplicate {what} name `{n}`")));
        }
    }
    Ok(())
}

fn build_category(name: &str, b: &CategoryBlock) -> Result<FinCat> {
    let c = if let Some(kind) = &b.builtin {
        if !(b.objects.is_empty() && b.arrows.is_empty() && b.compose.is_empty()) {
            return Err(invalid(name, "a builtin category takes no tables"));
        }
        builtin_category(kind).ok_or_else(|| unresolved(kind, "builtin categories"))?
    } else {
        let mut cb = CatBuilder::new();
        for o in &b.objects {
            cb = cb.object(o);
        }
        for (a, d, c) in &b.arrows {
            cb = cb.arrow(a, d, c);
        }
        for (f, g, h) in &b.compose {
            cb = cb.compose(f, g, h);
        }
        cb.build()?
    };
    unique("object", c.obj_names())?;
    unique("arrow", c.arrow_names())?;
    let report = c.validate();
    if !report.is_valid() {
        return Err(invalid(name, report.to_string()));
    }
    Ok(c)
}

fn build_shape(name: &str, b: &ShapeBlock, cats: &BTreeMap<String, Arc<FinCat>>) -> Result<TwoCat> {
    let tables_empty = b.objects.is_empty()
        && b.one_cells.is_empty()
        && b.two_cells.is_empty()
        && b.vcompose.is_empty()
        && b.hcompose1.is_empty()
        && b.hcompose2.is_empty();
    let k = match (&b.builtin, &b.locally_discrete) {
        (Some(_), Some(_)) => return Err(invalid(name, "`builtin` and `locally_discrete` are exclusive")),
        (Some(_), None) | (None, Some(_)) if !tables_empty => {
            return Err(invalid(name, "a derived shape takes no tables"));
        }
        (Some(kind), None) => builtin_shape(kind).ok_or_else(|| unresolved(kind, "builtin shapes"))?,
        (None, Some(c)) => {
            let c = cats.get(c).ok_or_else(|| unresolved(c, format!("shape `{name}`")))?;
            TwoCat::locally_discrete(c)
        }
        (None, None) => {
            let mut tb = TwoCatBuilder::new();
            for o in &b.objects {
                tb = tb.object(o);
            }
            for (f, d, c) in &b.one_cells {
                tb = tb.one_cell(f, d, c);
            }
            for (a, s, t) in &b.two_cells {
                tb = tb.two_cell(a, s, t);
            }
            for (x, y, z) in &b.vcompose {
                tb = tb.vcompose(x, y, z);
            }
            for (x, y, z) in &b.hcompose1 {
                tb = tb.hcompose1(x, y, z);
            }
            for (x, y, z) in &b.hcompose2 {
                tb = tb.hcompose2(x, y, z);
            }
            tb.build()?
        }
    };
    unique("object", k.obj_names())?;
    unique("1-cell", k.one_names())?;
    unique("2-cell", k.two_names())?;
    let report = k.validate();
    if !report.is_valid() {
        return Err(invalid(name, report.to_string()));
    }
    Ok(k)
}

fn object_in(c: &FinCat, o: &str, ctx: &str) -> Result<usize> {
    c.find_object(o).ok_or_else(|| unresolved(o, ctx.to_string()))
}

fn arrow_in(c: &FinCat, a: &str, ctx: &str) -> Result<usize> {
    c.find_arrow(a).ok_or_else(|| unresolved(a, ctx.to_string()))
}

fn build_map(source: &Arc<FinCat>, target: &Arc<FinCat>, m: &FunctorMap, ctx: &str) -> Result<Functor> {
    for k in m.objects.keys() {
        object_in(source, k, ctx)?;
    }
    for k in m.arrows.keys() {
        arrow_in(source, k, ctx)?;
    }
    let obj_map = source
        .objects()
        .map(|o| {
            let n = source.obj_name(o);
            let img = m
                .objects
                .get(n)
                .ok_or_else(|| Error::Precondition(format!("{ctx}: no image for object `{n}`")))?;
            object_in(target, img, ctx)
        })
        .collect::<Result<Vec<_>>>()?;
    let arr_map = source
        .arrows()
        .map(|a| {
            let n = source.arrow_name(a);
            match m.arrows.get(n) {
                Some(img) => arrow_in(target, img, ctx),
                None if source.is_identity(a) => Ok(target.identity(obj_map[source.dom(a)])),
                None => Err(Error::Precondition(format!("{ctx}: no image for arrow `{n}`"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Functor::new(source.clone(), target.clone(), obj_map, arr_map))
}

fn components(source: &Functor, target: &Functor, given: &BTreeMap<String, String>, ctx: &str) -> Result<NatTransf> {
    let (s, t) = (&source.source, &source.target);
    for k in given.keys() {
        object_in(s, k, ctx)?;
    }
    let comps = s
        .objects()
        .map(|o| {
            let n = s.obj_name(o);
            let a = given
                .get(n)
                .ok_or_else(|| Error::Precondition(format!("{ctx}: no component at `{n}`")))?;
            arrow_in(t, a, ctx)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NatTransf::new(source.clone(), target.clone(), comps))
}

fn build_functor(name: &str, b: &FunctorBlock, spec: &Spec) -> Result<PseudoFunctor> {
    let k = spec
        .shapes
        .get(&b.shape)
        .ok_or_else(|| unresolved(&b.shape, format!("functor `{name}`")))?
        .clone();
    let explicit = !(b.values.is_empty() && b.transitions.is_empty() && b.cells.is_empty() && b.compositors.is_empty());
    let pf = match (&b.constant, &b.representable) {
        (Some(_), Some(_)) => return Err(invalid(name, "`constant` and `representable` are exclusive")),
        (Some(_), None) | (None, Some(_)) if explicit => {
            return Err(invalid(name, "a derived functor takes no tables"));
        }
        (Some(c), None) => {
            let v = b.variance.ok_or_else(|| invalid(name, "missing `variance`"))?;
            let c = spec.categories.get(c).ok_or_else(|| unresolved(c, format!("functor `{name}`")))?;
            PseudoFunctor::constant(v, k, c.clone())
        }
        (None, Some(o)) => {
            if b.variance == Some(Variance::Covariant) {
                return Err(invalid(name, "a representable is contravariant"));
            }
            let o = k.find_object(o).ok_or_else(|| unresolved(o, format!("shape of functor `{name}`")))?;
            representable(&k, o)?
        }
        (None, None) => {
            let v = b.variance.ok_or_else(|| invalid(name, "missing `variance`"))?;
            explicit_functor(name, b, v, k, spec)?
        }
    };
    let report = pf.validate();
    if !report.is_valid() {
        return Err(invalid(name, report.to_string()));
    }
    Ok(pf)
}

fn explicit_functor(name: &str, b: &FunctorBlock, v: Variance, k: Arc<TwoCat>, spec: &Spec) -> Result<PseudoFunctor> {
    for o in b.values.keys() {
        k.find_object(o).ok_or_else(|| unresolved(o, format!("values of `{name}`")))?;
    }
    for f in b.transitions.keys() {
        k.find_one(f).ok_or_else(|| unresolved(f, format!("transitions of `{name}`")))?;
    }
    for a in b.cells.keys() {
        k.find_two(a).ok_or_else(|| unresolved(a, format!("cells of `{name}`")))?;
    }
    let values = k
        .objects()
        .map(|o| {
            let on = k.obj_name(o);
            let c = b
                .values
                .get(on)
                .ok_or_else(|| invalid(name, format!("no value at object `{on}`")))?;
            spec.categories
                .get(c)
                .cloned()
                .ok_or_else(|| unresolved(c, format!("values of `{name}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    let covariant = v == Variance::Covariant;
    let transition = k
        .one_cells()
        .map(|f| {
            let (s, t) = if covariant { (k.dom(f), k.cod(f)) } else { (k.cod(f), k.dom(f)) };
            let ctx = format!("transition `{}` of `{name}`", k.one_name(f));
            match b.transitions.get(k.one_name(f)) {
                Some(m) => build_map(&values[s], &values[t], m, &ctx),
                None if k.is_id1(f) => Ok(Functor::identity(&values[s])),
                None => Err(invalid(name, format!("no transition for 1-cell `{}`", k.one_name(f)))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let cell_image = k
        .two_cells()
        .map(|a| {
            let (s, t) = (&transition[k.src(a)], &transition[k.tgt(a)]);
            let ctx = format!("cell `{}` of `{name}`", k.two_name(a));
            match b.cells.get(k.two_name(a)) {
                Some(m) => components(s, t, m, &ctx),
                None if k.is_id2(a) => Ok(NatTransf::identity(s)),
                None => Err(invalid(name, format!("no image for 2-cell `{}`", k.two_name(a)))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pf = PseudoFunctor::strict(v, k.clone(), values, transition, cell_image);
    let mut seen = HashMap::new();
    for c in &b.compositors {
        let ctx = format!("compositor ({}, {}) of `{name}`", c.first, c.second);
        let f = k.find_one(&c.first).ok_or_else(|| unresolved(&c.first, ctx.clone()))?;
        let g = k.find_one(&c.second).ok_or_else(|| unresolved(&c.second, ctx.clone()))?;
        if k.cod(f) != k.dom(g) {
            return Err(invalid(name, format!("{ctx}: not composable")));
        }
        if seen.insert((f, g), ()).is_some() {
            return Err(invalid(name, format!("{ctx}: given twice")));
        }
        let (first, second) = if covariant { (f, g) } else { (g, f) };
        let source = pf.transition[first].then(&pf.transition[second])?;
        let target = pf.transition[k.hc1(f, g)].clone();
        pf.compositor.insert((f, g), components(&source, &target, &c.components, &ctx)?);
    }
    Ok(pf)
}

fn check_job(i: usize, job: &Job, spec: &Spec) -> Result<()> {
    let ctx = format!("job {i}");
    let (required, optional) = job.command.arguments();
    let given = job.arguments();
    for r in required {
        if !given.contains_key(r) {
            return Err(Error::Precondition(format!("{ctx}: missing argument `{r}`")));
        }
    }
    for k in given.keys() {
        if !required.contains(k) && !optional.contains(k) {
            return Err(Error::Precondition(format!("{ctx}: unexpected argument `{k}`")));
        }
    }
    let functor = |n: &str, want: Variance| -> Result<()> {
        let f = spec.functors.get(n).ok_or_else(|| unresolved(n, ctx.clone()))?;
        if f.variance != want {
            return Err(Error::Precondition(format!("{ctx}: `{n}` must be {want:?}").to_lowercase()));
        }
        Ok(())
    };
    if let Some(e) = &job.e {
        functor(e, Variance::Covariant)?;
    }
    if let Some(w) = &job.w {
        functor(w, Variance::Contravariant)?;
    }
    if let (Some(e), Some(w)) = (&job.e, &job.w) {
        if spec.functor_shape[e] != spec.functor_shape[w] {
            return Err(Error::Precondition(format!("{ctx}: `{e}` and `{w}` live on different shapes")));
        }
    }
    if job.command == Command::ExportDot && job.target.is_some() == job.e.is_some() {
        return Err(Error::Precondition(format!("{ctx}: give either `target` or `e` and `w`")));
    }
    if job.e.is_some() != job.w.is_some() && job.command == Command::ExportDot {
        return Err(Error::Precondition(format!("{ctx}: `e` and `w` go together")));
    }
    if let Some(x) = &job.x {
        spec.categories.get(x).ok_or_else(|| unresolved(x, ctx.clone()))?;
    }
    if let (Some(o), Some(e)) = (&job.object, &job.e) {
        spec.functors[e]
            .shape
            .find_object(o)
            .ok_or_else(|| unresolved(o, ctx.clone()))?;
    }
    if let Some(t) = &job.target {
        let known = spec.categories.contains_key(t) || spec.shapes.contains_key(t) || spec.functors.contains_key(t);
        if !known {
            return Err(unresolved(t, ctx));
        }
    }
    Ok(())
}

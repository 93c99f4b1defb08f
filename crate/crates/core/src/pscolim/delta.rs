use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{ArrowId, ObjId};
use crate::psfun::PseudoFunctor;
use crate::twocat::{OneId, TwoCat, TwoCatTables, TwoId};
use std::collections::HashMap;
use std::sync::Arc;

/// The diagonal 2-category of a covariant `E` and a contravariant `W`.
///
/// Objects are triples `(C, X, Y)` with `X` in `E(C)` and `Y` in `W(C)`,
/// numbered in lexicographic order. A 1-cell `(C,X,Y) -> (D,A,B)` is a triple
/// `(f, u, v)` with `f: C -> D`, `u: f_!X -> A` and `v: Y -> f^*B`. A 2-cell
/// `(f,u,v) ⇒ (g,x,y)` is a 2-cell `α: f ⇒ g` of the shape with
/// `(α_!)_X;x = u` and `v;(α^*)_B = y`.
#[derive(Debug, Clone)]
pub struct DeltaTwoCat {
    pub carrier: TwoCat,
    pub obj_label: Vec<(ObjId, ObjId, ObjId)>,
    pub mor_label: Vec<(OneId, ArrowId, ArrowId)>,
    pub cell_label: Vec<TwoId>,
    /// Whether both fiber components of a 1-cell are invertible.
    pub cartesian: Vec<bool>,
    pub e: Arc<PseudoFunctor>,
    pub w: Arc<PseudoFunctor>,
    obj_index: HashMap<(ObjId, ObjId, ObjId), usize>,
    mor_index: HashMap<(usize, usize, OneId, ArrowId, ArrowId), usize>,
}

impl DeltaTwoCat {
    pub fn object(&self, c: ObjId, x: ObjId, y: ObjId) -> Option<usize> {
        self.obj_index.get(&(c, x, y)).copied()
    }

    /// The 1-cell `(f, u, v)` between the given objects.
    pub fn one_cell(&self, src: usize, tgt: usize, f: OneId, u: ArrowId, v: ArrowId) -> Option<usize> {
        self.mor_index.get(&(src, tgt, f, u, v)).copied()
    }

    /// Composite label of `(f,u,v)` then `(g,x,y)`.
    fn compose_labels(&self, d1: usize, d2: usize) -> (OneId, ArrowId, ArrowId) {
        compose_labels(&self.e, &self.w, &self.carrier, &self.obj_label, &self.mor_label, d1, d2)
    }

    /// Composite of `(f,u,v)` then `(g,x,y)` computed from the labels, for
    /// cross-checking the stored table.
    pub fn composite_from_labels(&self, d1: usize, d2: usize) -> Option<usize> {
        let (f, u, v) = self.compose_labels(d1, d2);
        self.one_cell(self.carrier.dom(d1), self.carrier.cod(d2), f, u, v)
    }
}

/// `(f;g, φᴱ⁻¹_X ; g_!(u) ; x, v ; f^*(y) ; φᵂ_{B'})`.
fn compose_labels(
    e: &PseudoFunctor,
    w: &PseudoFunctor,
    carrier: &TwoCat,
    obj_label: &[(ObjId, ObjId, ObjId)],
    mor_label: &[(OneId, ArrowId, ArrowId)],
    d1: usize,
    d2: usize,
) -> (OneId, ArrowId, ArrowId) {
    let k = &*e.shape;
    let (f, u, v) = mor_label[d1];
    let (g, x, y) = mor_label[d2];
    let (_, xx, _) = obj_label[carrier.dom(d1)];
    let (_, _, b2) = obj_label[carrier.cod(d2)];
    let fg = k.hc1(f, g);
    let ed = e.value(k.cod(g));
    let uu = ed.comp_path(&[e.comp_inv_at(f, g, xx), e.tr(g).arr(u), x]);
    let wc = w.value(k.dom(f));
    // the stored compositor at (f, g) is the view compositor at (g, f)
    let vv = wc.comp_path(&[v, w.tr(f).arr(y), w.comp_at(g, f, b2)]);
    (fg, uu, vv)
}

/// Builds the diagonal 2-category; closure of the admissible 2-cells under
/// the compositions is asserted.
pub fn build_delta(e: &Arc<PseudoFunctor>, w: &Arc<PseudoFunctor>, budget: Budget) -> Result<DeltaTwoCat> {
    if !e.is_covariant() || w.is_covariant() {
        return Err(Error::Precondition("Δ needs a covariant E and a contravariant W".into()));
    }
    if *e.shape != *w.shape {
        return Err(Error::Precondition("E and W live on different shapes".into()));
    }
    let k = &*e.shape;
    let mut meter = budget.meter("diagonal 2-category");

    let mut obj_label = Vec::new();
    for c in k.objects() {
        for x in e.value(c).objects() {
            for y in w.value(c).objects() {
                meter.tick()?;
                obj_label.push((c, x, y));
            }
        }
    }
    let obj_index: HashMap<_, _> = obj_label.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let by_base: Vec<Vec<usize>> = k
        .objects()
        .map(|c| (0..obj_label.len()).filter(|&i| obj_label[i].0 == c).collect())
        .collect();

    // 1-cells ordered by source object, target object, shape 1-cell, u, v
    let mut mor_label = Vec::new();
    let mut mor_ends = Vec::new();
    let mut cartesian = Vec::new();
    for (s, &(c, xx, y)) in obj_label.iter().enumerate() {
        let wc = w.value(c);
        for d in k.objects() {
            let ed = e.value(d);
            for &t in &by_base[d] {
                let (_, a, b) = obj_label[t];
                for &f in k.hom(c, d) {
                    let fx = e.tr(f).obj(xx);
                    let fb = w.tr(f).obj(b);
                    for &u in ed.hom(fx, a) {
                        for &v in wc.hom(y, fb) {
                            meter.tick()?;
                            mor_label.push((f, u, v));
                            mor_ends.push((s, t));
                            cartesian.push(ed.is_iso(u) && wc.is_iso(v));
                        }
                    }
                }
            }
        }
    }
    let mor_index: HashMap<_, _> = mor_label
        .iter()
        .zip(&mor_ends)
        .enumerate()
        .map(|(i, (&(f, u, v), &(s, t)))| ((s, t, f, u, v), i))
        .collect();
    let id1: Vec<usize> = obj_label
        .iter()
        .enumerate()
        .map(|(i, &(c, xx, y))| {
            let id = k.id1(c);
            mor_index[&(i, i, id, e.value(c).identity(xx), w.value(c).identity(y))]
        })
        .collect();

    // 2-cells ordered by source 1-cell, shape 2-cell, target 1-cell
    let mut cell_label = Vec::new();
    let mut two_cells = Vec::new();
    let mut cell_index = HashMap::new();
    for (d1, &(f, u, v)) in mor_label.iter().enumerate() {
        let (s, t) = mor_ends[d1];
        let (c, xx, _) = obj_label[s];
        let (d, _, b) = obj_label[t];
        let (ed, wc) = (e.value(d), w.value(c));
        for al in k.out_cells(f) {
            let g = k.tgt(al);
            let ax = e.cell_at(al, xx);
            let y = wc.comp(v, w.cell_at(al, b));
            for &x in ed.hom(e.tr(g).obj(xx), ed.cod(u)) {
                meter.tick()?;
                if ed.compose(ax, x) != Some(u) {
                    continue;
                }
                let d2 = mor_index[&(s, t, g, x, y)];
                cell_index.insert((al, d1, d2), cell_label.len());
                cell_label.push(al);
                two_cells.push((d1, d2));
            }
        }
    }
    let id2: Vec<usize> = (0..mor_label.len())
        .map(|d| cell_index[&(k.id2(mor_label[d].0), d, d)])
        .collect();

    let mut carrier_tables = TwoCatTables {
        objects: obj_label
            .iter()
            .map(|&(c, x, y)| format!("({},{},{})", k.obj_name(c), e.value(c).obj_name(x), w.value(c).obj_name(y)))
            .collect(),
        one_cells: mor_label
            .iter()
            .zip(&mor_ends)
            .map(|(&(f, u, v), &(s, t))| {
                let (c, _, _) = obj_label[s];
                let (d, _, _) = obj_label[t];
                (
                    format!("({},{},{})", k.one_name(f), e.value(d).arrow_name(u), w.value(c).arrow_name(v)),
                    s,
                    t,
                )
            })
            .collect(),
        two_cells: cell_label
            .iter()
            .zip(&two_cells)
            .map(|(&al, &(d1, d2))| (k.two_name(al).to_string(), d1, d2))
            .collect(),
        id1,
        id2,
        ..Default::default()
    };

    // a provisional carrier gives dom/cod lookups for the composition tables
    let provisional = TwoCat::new(carrier_tables.clone())?;
    for d1 in 0..mor_label.len() {
        let t = mor_ends[d1].1;
        for d2 in provisional.out_ones(t) {
            meter.tick()?;
            let (g, x, y) = compose_labels(e, w, &provisional, &obj_label, &mor_label, d1, d2);
            let key = (mor_ends[d1].0, mor_ends[d2].1, g, x, y);
            let h = *mor_index
                .get(&key)
                .ok_or_else(|| Error::Internal("composite 1-cell of Δ not found".into()))?;
            carrier_tables.hcompose1.push((d1, d2, h));
        }
    }
    let closure = |what: &str| Error::Internal(format!("admissible 2-cells not closed under {what}"));
    for (c1, &(d1, d2)) in two_cells.iter().enumerate() {
        for (c2, &(d2b, d3)) in two_cells.iter().enumerate() {
            if d2b != d2 {
                continue;
            }
            meter.tick()?;
            let al = k.vc(cell_label[c1], cell_label[c2]);
            let c = *cell_index.get(&(al, d1, d3)).ok_or_else(|| closure("vertical composition"))?;
            carrier_tables.vcompose.push((c1, c2, c));
        }
    }
    let hc1: HashMap<(usize, usize), usize> = carrier_tables
        .hcompose1
        .iter()
        .map(|&(a, b, c)| ((a, b), c))
        .collect();
    let mut out_cells_by_obj: Vec<Vec<usize>> = vec![Vec::new(); obj_label.len()];
    for (c, &(d1, _)) in two_cells.iter().enumerate() {
        out_cells_by_obj[mor_ends[d1].0].push(c);
    }
    for (c1, &(d1, d2)) in two_cells.iter().enumerate() {
        let mid = mor_ends[d1].1;
        for &c2 in &out_cells_by_obj[mid] {
            meter.tick()?;
            let (e1, e2) = two_cells[c2];
            let al = k.hc2(cell_label[c1], cell_label[c2]);
            let key = (al, hc1[&(d1, e1)], hc1[&(d2, e2)]);
            let c = *cell_index.get(&key).ok_or_else(|| closure("horizontal composition"))?;
            carrier_tables.hcompose2.push((c1, c2, c));
        }
    }
    let carrier = TwoCat::new(carrier_tables)?;
    Ok(DeltaTwoCat {
        carrier,
        obj_label,
        mor_label,
        cell_label,
        cartesian,
        e: e.clone(),
        w: w.clone(),
        obj_index,
        mor_index,
    })
}

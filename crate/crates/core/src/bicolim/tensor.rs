use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::{ArrowId, ObjId};
use crate::pscolim::{pscolim_presentation, ColimitPresentation};
use crate::psfun::{hom_bifunctor, product_bifunctor, PseudoFunctor};
use crate::twocat::{OneId, TwoCat, TwoId};
use std::collections::HashMap;
use std::sync::Arc;

/// `(C, D, X, Y, f)` with `f: C -> D`, `X` in `E(C)`, `Y` in `W(D)`.
pub type Quintuple = (ObjId, ObjId, ObjId, ObjId, OneId);

/// `(h, k, u, v, α)` with `h: C -> C'`, `k: D' -> D`, `u: h_!X -> X'`,
/// `v: k^*Y -> Y'` and `α: f ⇒ h;g;k`.
pub type QuintupleArrow = (OneId, OneId, ArrowId, ArrowId, TwoId);

/// The presentation of `(E × W) ⋆ K(-,-)` with its cells unfolded into
/// quintuples.
#[derive(Debug, Clone)]
pub struct TensorPresentation {
    pub underlying: ColimitPresentation,
    pub shape: Arc<TwoCat>,
    pub e: Arc<PseudoFunctor>,
    pub w: Arc<PseudoFunctor>,
    pub quintuple_label: Vec<Quintuple>,
    /// Label of every 1-cell of the underlying Δ.
    pub arrow_label: Vec<QuintupleArrow>,
    /// `(γ, θ)` for every 2-cell of the underlying Δ.
    pub cell_label: Vec<(TwoId, TwoId)>,
}

impl TensorPresentation {
    pub fn object_of(&self, q: Quintuple) -> Option<ObjId> {
        self.quintuple_label.iter().position(|&l| l == q)
    }

    /// Δ 1-cell with the given ends and label.
    pub fn one_cell_of(&self, s: ObjId, t: ObjId, a: QuintupleArrow) -> Option<usize> {
        let d = &self.underlying.delta;
        d.carrier
            .one_cells()
            .find(|&c| d.carrier.dom(c) == s && d.carrier.cod(c) == t && self.arrow_label[c] == a)
    }

    /// Composite label of two quintuple arrows computed from the quintuple
    /// description alone: `(h;h', k';k, φᴱ⁻¹;h'_!(u);u', φᵂ⁻¹;k'^*(v);v', α;(h∗α'∗k))`.
    pub fn quintuple_composite(&self, d1: usize, d2: usize) -> QuintupleArrow {
        let (k, e, w) = (&*self.shape, &*self.e, &*self.w);
        let carrier = &self.underlying.delta.carrier;
        let (h, kk, u, v, al) = self.arrow_label[d1];
        let (h2, k2, u2, v2, al2) = self.arrow_label[d2];
        let (_, _, x, y, _) = self.quintuple_label[carrier.dom(d1)];
        let (c2, d2o, _, _, _) = self.quintuple_label[carrier.cod(d2)];
        let ec = e.value(c2);
        let uu = ec.comp_path(&[e.comp_inv_at(h, h2, x), e.tr(h2).arr(u), u2]);
        let wd = w.value(d2o);
        // (k2;kk)^*Y -> k2^*kk^*Y, stored compositor (k2, kk) at Y
        let back = wd.inverse(w.compositor[&(k2, kk)].at(y)).expect("invertible compositor");
        let vv = wd.comp_path(&[back, w.tr(k2).arr(v), v2]);
        let aa = k.vc(al, k.hc2(k.hc2(k.id2(h), al2), k.id2(kk)));
        (k.hc1(h, h2), k.hc1(k2, kk), uu, vv, aa)
    }

    /// First 1-cell pair whose stored composite disagrees with
    /// [`TensorPresentation::quintuple_composite`], or a repeated label.
    pub fn relabeling_failure(&self) -> Option<String> {
        let carrier = &self.underlying.delta.carrier;
        let mut seen = HashMap::new();
        for c in carrier.one_cells() {
            let key = (carrier.dom(c), carrier.cod(c), self.arrow_label[c]);
            if seen.insert(key, c).is_some() {
                return Some(format!("1-cell label repeated at {c}"));
            }
        }
        let mut seen_q = HashMap::new();
        for (o, q) in self.quintuple_label.iter().enumerate() {
            if seen_q.insert(*q, o).is_some() {
                return Some(format!("object label repeated at {o}"));
            }
        }
        for d1 in carrier.one_cells() {
            for d2 in carrier.out_ones(carrier.cod(d1)) {
                let want = self.quintuple_composite(d1, d2);
                if self.arrow_label[carrier.hc1(d1, d2)] != want {
                    return Some(format!("composite of 1-cells {d1} and {d2} disagrees"));
                }
            }
        }
        for a in carrier.two_cells() {
            let (g, t) = self.cell_label[a];
            let (s1, t1) = (carrier.src(a), carrier.tgt(a));
            let (h, kk, _, _, _) = self.arrow_label[s1];
            let (h2, k2, _, _, _) = self.arrow_label[t1];
            let k = &*self.shape;
            if k.src(g) != h || k.tgt(g) != h2 || k.src(t) != kk || k.tgt(t) != k2 {
                return Some(format!("2-cell {a} is mistyped"));
            }
        }
        None
    }
}

/// Builds the presentation of `(E × W) ⋆ K(-,-)` on `K × K^op`.
pub fn build_tensor(e: &Arc<PseudoFunctor>, w: &Arc<PseudoFunctor>, budget: Budget) -> Result<TensorPresentation> {
    let k = e.shape.clone();
    let ep = Arc::new(product_bifunctor(e, w, budget)?);
    let wp = Arc::new(hom_bifunctor(&k, budget)?);
    let underlying = pscolim_presentation(&ep, &wp, budget)?;
    let (n0, n1, n2) = (k.n_objects(), k.n_one(), k.n_two());
    let homs = (0..n0 * n0)
        .map(|i| k.hom_category(i / n0, i % n0))
        .collect::<Result<Vec<_>>>()?;
    let d = &underlying.delta;
    let quintuple_label = d
        .obj_label
        .iter()
        .map(|&(cd, xy, f)| {
            let (c, dd) = (cd / n0, cd % n0);
            let ny = w.value(dd).n_objects();
            (c, dd, xy / ny, xy % ny, homs[cd].1[f])
        })
        .collect();
    let arrow_label = d
        .carrier
        .one_cells()
        .map(|one| {
            let (hk, uv, al) = d.mor_label[one];
            let tgt = d.obj_label[d.carrier.cod(one)].0;
            let src = d.obj_label[d.carrier.dom(one)].0;
            let nv = w.value(tgt % n0).n_arrows();
            (hk / n1, hk % n1, uv / nv, uv % nv, homs[src].2[al])
        })
        .collect();
    let cell_label = d.cell_label.iter().map(|&gt| (gt / n2, gt % n2)).collect();
    Ok(TensorPresentation {
        underlying,
        shape: k,
        e: e.clone(),
        w: w.clone(),
        quintuple_label,
        arrow_label,
        cell_label,
    })
}

use super::tensor::{build_tensor, TensorPresentation};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::{ArrowId, Functor, ObjId};
use crate::pscolim::{pscolim_presentation, ColimitPresentation};
use crate::psfun::PseudoFunctor;
use serde::Serialize;
use std::sync::Arc;

/// Checks carried out on the comparison functor.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ComparisonReport {
    /// Representatives of one class have images in one class.
    pub well_defined: bool,
    /// Every 2-cell `(γ, θ)` maps to an admissible 2-cell `γ`.
    pub two_cells_preserved: bool,
    /// Cartesian 1-cells map to cartesian 1-cells and marked classes to
    /// marked classes.
    pub sigma_preserving: bool,
    pub surjective_on_objects: bool,
    /// Both bracketings of the compositor inside `t` agree.
    pub bracketing_independent: bool,
    pub witness: Option<String>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.well_defined
            && self.two_cells_preserved
            && self.sigma_preserving
            && self.surjective_on_objects
            && self.bracketing_independent
    }

    fn note(&mut self, why: String) {
        self.witness.get_or_insert(why);
    }
}

/// The functor from the tensor presentation to the pseudo-colimit
/// presentation, with its checks.
#[derive(Debug, Clone)]
pub struct ComparisonData {
    pub functor: Functor,
    pub tensor: TensorPresentation,
    pub target: ColimitPresentation,
    /// Image of every 1-cell of the tensor Δ in the pseudo-colimit Δ.
    pub one_cell_map: Vec<usize>,
    pub report: ComparisonReport,
}

/// `(C,D,X,Y,f) ↦ (C,X,f^*Y)` and `(h,k,m,n,α) ↦ (h,m,t)` with
/// `t = (α^*)_Y ; (compositors)⁻¹ ; h^*g^*(n)`; 2-cells `(γ,θ) ↦ γ`.
pub fn comparison_functor(e: &Arc<PseudoFunctor>, w: &Arc<PseudoFunctor>, budget: Budget) -> Result<ComparisonData> {
    let tensor = build_tensor(e, w, budget)?;
    let target = pscolim_presentation(e, w, budget)?;
    let k = &*e.shape;
    let (src, dst) = (&tensor.underlying.delta, &target.delta);
    let mut report = ComparisonReport {
        well_defined: true,
        two_cells_preserved: true,
        sigma_preserving: true,
        surjective_on_objects: true,
        bracketing_independent: true,
        witness: None,
    };

    let obj_map = tensor
        .quintuple_label
        .iter()
        .map(|&(c, _, x, y, f)| {
            dst.object(c, x, w.tr(f).obj(y))
                .ok_or_else(|| Error::Internal("image object missing".into()))
        })
        .collect::<Result<Vec<ObjId>>>()?;

    let mut one_cell_map = Vec::with_capacity(src.carrier.n_one());
    for one in src.carrier.one_cells() {
        let (h, kk, m, n, al) = tensor.arrow_label[one];
        let (c, _, _, y, _) = tensor.quintuple_label[src.carrier.dom(one)];
        let (_, _, _, _, g) = tensor.quintuple_label[src.carrier.cod(one)];
        let wc = w.value(c);
        let ky = w.tr(kk).obj(y);
        let hg = k.hc1(h, g);
        let left = wc.comp(w.compositor[&(h, g)].at(ky), w.compositor[&(hg, kk)].at(y));
        let right = wc.comp(
            w.tr(h).arr(w.compositor[&(g, kk)].at(y)),
            w.compositor[&(h, k.hc1(g, kk))].at(y),
        );
        if left != right {
            report.bracketing_independent = false;
            report.note(format!("compositor bracketings differ at 1-cell {one}"));
        }
        let back = wc
            .inverse(left)
            .ok_or_else(|| Error::Internal("compositor not invertible".into()))?;
        let t = wc.comp_path(&[w.cell_at(al, y), back, w.tr(h).arr(w.tr(g).arr(n))]);
        let (s, tt) = (obj_map[src.carrier.dom(one)], obj_map[src.carrier.cod(one)]);
        let img = dst
            .one_cell(s, tt, h, m, t)
            .ok_or_else(|| Error::Internal(format!("image of 1-cell {one} missing")))?;
        if src.cartesian[one] && !dst.cartesian[img] {
            report.sigma_preserving = false;
            report.note(format!("cartesian 1-cell {one} maps to a non-cartesian 1-cell"));
        }
        one_cell_map.push(img);
    }

    for a in src.carrier.two_cells() {
        let (gamma, _) = tensor.cell_label[a];
        let (s, t) = (one_cell_map[src.carrier.src(a)], one_cell_map[src.carrier.tgt(a)]);
        let ok = dst.carrier.cells(s, t).iter().any(|&b| dst.cell_label[b] == gamma);
        if !ok {
            report.two_cells_preserved = false;
            report.note(format!("2-cell {a} has no admissible image"));
        }
    }

    let mut arr_map: Vec<Option<ArrowId>> = vec![None; tensor.underlying.p.n_arrows()];
    for one in src.carrier.one_cells() {
        let cls = tensor.underlying.labels.class_of[one];
        let img = target.labels.class_of[one_cell_map[one]];
        match arr_map[cls] {
            None => arr_map[cls] = Some(img),
            Some(prev) if prev != img => {
                report.well_defined = false;
                report.note(format!("class {} has images in two classes", tensor.underlying.p.arrow_name(cls)));
            }
            _ => {}
        }
    }
    let arr_map = arr_map
        .into_iter()
        .map(|a| a.ok_or_else(|| Error::Internal("empty π₀ class".into())))
        .collect::<Result<Vec<_>>>()?;
    let functor = Functor::new(tensor.underlying.p.clone(), target.p.clone(), obj_map, arr_map);
    if report.well_defined && !functor.validate().is_valid() {
        report.well_defined = false;
        report.note("comparison is not a functor".into());
    }
    if let Some(a) = tensor
        .underlying
        .sigma_arrows()
        .find(|&a| !target.sigma[functor.arr(a)])
    {
        report.sigma_preserving = false;
        report.note(format!("marked {} maps to an unmarked class", tensor.underlying.p.arrow_name(a)));
    }
    // (C,X,Y) is the image of (C,C,X,Y,1_C)
    for (o, &(c, x, y)) in dst.obj_label.iter().enumerate() {
        let pre = tensor.object_of((c, c, x, y, k.id1(c)));
        if pre.map(|p| functor.obj(p)) != Some(o) {
            report.surjective_on_objects = false;
            report.note(format!("object {} has no preimage", dst.carrier.obj_name(o)));
        }
    }
    Ok(ComparisonData {
        functor,
        tensor,
        target,
        one_cell_map,
        report,
    })
}

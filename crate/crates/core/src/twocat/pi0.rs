use super::{OneId, TwoCat};
use crate::error::{Error, Result};
use crate::fincat::{ArrowId, FinCat};

/// The 1-category of local connected components.
#[derive(Debug, Clone)]
pub struct Pi0Result {
    pub quotient: FinCat,
    /// Quotient arrow of each 1-cell.
    pub class_of: Vec<ArrowId>,
    /// Least-index 1-cell of each quotient arrow.
    pub section: Vec<OneId>,
}

impl Pi0Result {
    /// All 1-cells in the class of quotient arrow `a`.
    pub fn members(&self, a: ArrowId) -> impl Iterator<Item = OneId> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == a)
            .map(|(f, _)| f)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Identifies 1-cells joined by a zigzag of 2-cells. Quotient arrows are
/// numbered in order of their least representative; objects are unchanged.
pub fn pi0(k: &TwoCat) -> Result<Pi0Result> {
    let n1 = k.n_one();
    let mut parent: Vec<usize> = (0..n1).collect();
    for a in k.two_cells() {
        let (s, t) = (find(&mut parent, k.src(a)), find(&mut parent, k.tgt(a)));
        // keep the smaller index as root so roots are least representatives
        let (lo, hi) = if s < t { (s, t) } else { (t, s) };
        parent[hi] = lo;
    }
    let roots: Vec<usize> = (0..n1).map(|f| find(&mut parent, f)).collect();
    let mut class_of = vec![usize::MAX; n1];
    let mut section = Vec::new();
    for f in 0..n1 {
        if roots[f] == f {
            class_of[f] = section.len();
            section.push(f);
        }
    }
    for f in 0..n1 {
        class_of[f] = class_of[roots[f]];
    }
    let arrows = section
        .iter()
        .map(|&f| (format!("[{}]", k.one_name(f)), k.dom(f), k.cod(f)))
        .collect();
    let identity = k.objects().map(|o| class_of[k.id1(o)]).collect();
    let quotient = FinCat::from_fn(k.obj_names().to_vec(), arrows, identity, |p, q| {
        k.hcompose1(section[p], section[q]).map(|h| class_of[h])
    })?;
    for f in k.one_cells() {
        for g in k.out_ones(k.cod(f)) {
            let h = k
                .hcompose1(f, g)
                .ok_or_else(|| Error::Internal("missing 1-cell composite".into()))?;
            if quotient.compose(class_of[f], class_of[g]) != Some(class_of[h]) {
                return Err(Error::Internal(format!(
                    "component composition depends on representatives at ({}, {})",
                    k.one_name(f),
                    k.one_name(g)
                )));
            }
        }
    }
    Ok(Pi0Result {
        quotient,
        class_of,
        section,
    })
}

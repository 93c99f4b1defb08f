use super::presentation::ColimitPresentation;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::fincat::{ArrowId, FinCat, Functor, ObjId};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    AlreadyInvertible,
    RightFractions,
    BoundedZigzag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum LocStatus {
    Exact,
    Undecided { budget: u64, reason: String },
}

/// A letter of a zigzag: an arrow of the presented category, or the formal
/// inverse of a marked arrow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    Fwd(ArrowId),
    Inv(ArrowId),
}

/// `p[Σ⁻¹]` when it could be decided.
///
/// `result` and `localization_functor` are present exactly when the status
/// is exact. `words[a]` is a zigzag in `p` representing result arrow `a`.
#[derive(Debug, Clone)]
pub struct LocalizedCat {
    pub strategy: Strategy,
    pub status: LocStatus,
    pub result: Option<Arc<FinCat>>,
    pub localization_functor: Option<Functor>,
    pub words: Vec<Vec<Letter>>,
}

impl LocalizedCat {
    pub fn is_exact(&self) -> bool {
        self.status == LocStatus::Exact
    }

    fn undecided(strategy: Strategy, budget: Budget, reason: String) -> LocalizedCat {
        LocalizedCat {
            strategy,
            status: LocStatus::Undecided {
                budget: budget.limit,
                reason,
            },
            result: None,
            localization_functor: None,
            words: Vec::new(),
        }
    }

    pub fn require_exact(&self) -> Result<(&Arc<FinCat>, &Functor)> {
        match (&self.status, &self.result, &self.localization_functor) {
            (LocStatus::Exact, Some(r), Some(l)) => Ok((r, l)),
            (LocStatus::Undecided { reason, .. }, _, _) => Err(Error::Undecided(reason.clone())),
            _ => Err(Error::Internal("exact localization without result".into())),
        }
    }

    /// The unique factorization of a marked-arrow-inverting `f` through the
    /// localization, checked to be a functor with `L;f̃ = f`.
    pub fn extend(&self, f: &Functor) -> Result<Functor> {
        let (result, l) = self.require_exact()?;
        let x = &f.target;
        let mut arr_map = Vec::with_capacity(self.words.len());
        for (a, word) in self.words.iter().enumerate() {
            let mut acc = x.identity(f.obj(result.dom(a)));
            for &letter in word {
                let step = match letter {
                    Letter::Fwd(b) => f.arr(b),
                    Letter::Inv(b) => x
                        .inverse(f.arr(b))
                        .ok_or_else(|| Error::Precondition("functor does not invert a marked arrow".into()))?,
                };
                acc = x
                    .compose(acc, step)
                    .ok_or_else(|| Error::Internal("ill-typed zigzag".into()))?;
            }
            arr_map.push(acc);
        }
        let ext = Functor::new(result.clone(), x.clone(), f.obj_map.clone(), arr_map);
        if !ext.validate().is_valid() || l.then(&ext)? != *f {
            return Err(Error::Internal("extension through the localization failed".into()));
        }
        Ok(ext)
    }
}

/// Localizes the presentation, trying the tiers in order.
pub fn localize(pres: &ColimitPresentation, budget: Budget) -> LocalizedCat {
    localize_marked(&pres.p, &pres.sigma, budget)
}

/// Localizes `p` at the marked arrows.
pub fn localize_marked(p: &Arc<FinCat>, sigma: &[bool], budget: Budget) -> LocalizedCat {
    if let Some(loc) = already_invertible(p, sigma) {
        return loc;
    }
    match right_fractions(p, sigma, budget) {
        Ok(Some(loc)) => return loc,
        Ok(None) => {}
        Err(Error::Budget { what, .. }) => {
            return LocalizedCat::undecided(Strategy::RightFractions, budget, format!("budget exceeded in {what}"))
        }
        Err(e) => return LocalizedCat::undecided(Strategy::RightFractions, budget, e.to_string()),
    }
    zigzag_closure(p, sigma, budget)
}

/// Tier (a): every marked arrow is already invertible, so `p` is its own
/// localization.
pub fn already_invertible(p: &Arc<FinCat>, sigma: &[bool]) -> Option<LocalizedCat> {
    if !p.arrows().all(|a| !sigma[a] || p.is_iso(a)) {
        return None;
    }
    Some(LocalizedCat {
        strategy: Strategy::AlreadyInvertible,
        status: LocStatus::Exact,
        result: Some(p.clone()),
        localization_functor: Some(Functor::identity(p)),
        words: p.arrows().map(|a| vec![Letter::Fwd(a)]).collect(),
    })
}

/// The first failing right-fractions axiom, if any: identities, closure
/// under composition, Ore square completion and equalization.
pub fn fractions_axiom_failure(p: &FinCat, sigma: &[bool], meter: &mut Meter) -> Result<Option<String>> {
    for o in p.objects() {
        if !sigma[p.identity(o)] {
            return Ok(Some(format!("identity at {} is not marked", p.obj_name(o))));
        }
    }
    let marked: Vec<ArrowId> = p.arrows().filter(|&a| sigma[a]).collect();
    for &s in &marked {
        for &t in &marked {
            meter.tick()?;
            if let Some(st) = p.compose(s, t) {
                if !sigma[st] {
                    return Ok(Some(format!("{} is not marked", p.render_composite(s, t))));
                }
            }
        }
    }
    for f in p.arrows() {
        for &t in &marked {
            if p.cod(f) != p.cod(t) {
                continue;
            }
            meter.tick()?;
            if ore_square(p, sigma, f, t, meter)?.is_none() {
                return Ok(Some(format!(
                    "no Ore square for {} against {}",
                    p.arrow_name(f),
                    p.arrow_name(t)
                )));
            }
        }
    }
    for &t in &marked {
        let b = p.dom(t);
        for a in p.objects() {
            let hom = p.hom(a, b);
            for (i, &f) in hom.iter().enumerate() {
                for &g in &hom[i + 1..] {
                    meter.tick()?;
                    if p.comp(f, t) != p.comp(g, t) {
                        continue;
                    }
                    let found = marked
                        .iter()
                        .any(|&s| p.cod(s) == a && p.comp(s, f) == p.comp(s, g));
                    if !found {
                        return Ok(Some(format!(
                            "{} and {} are equalized by {} but by no marked arrow on the left",
                            p.arrow_name(f),
                            p.arrow_name(g),
                            p.arrow_name(t)
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The least `(t', f')` with `t'` marked and `t';f = f';t`.
fn ore_square(p: &FinCat, sigma: &[bool], f: ArrowId, t: ArrowId, meter: &mut Meter) -> Result<Option<(ArrowId, ArrowId)>> {
    let (a, b) = (p.dom(f), p.dom(t));
    for d in p.objects() {
        for &t2 in p.hom(d, a) {
            if !sigma[t2] {
                continue;
            }
            let target = p.comp(t2, f);
            for &f2 in p.hom(d, b) {
                meter.tick()?;
                if p.comp(f2, t) == target {
                    return Ok(Some((t2, f2)));
                }
            }
        }
    }
    Ok(None)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Tier (b): roofs `X <-s- X' -f-> Y` with `s` marked, identified along
/// common refinements. `None` when the axioms fail.
pub fn right_fractions(p: &Arc<FinCat>, sigma: &[bool], budget: Budget) -> Result<Option<LocalizedCat>> {
    let mut meter = budget.meter("right fractions");
    if fractions_axiom_failure(p, sigma, &mut meter)?.is_some() {
        return Ok(None);
    }
    // roofs ordered by (X, Y, s, f)
    let mut roofs: Vec<(ArrowId, ArrowId)> = Vec::new();
    for x in p.objects() {
        for y in p.objects() {
            for s in p.arrows().filter(|&s| sigma[s] && p.cod(s) == x) {
                for &f in p.hom(p.dom(s), y) {
                    meter.tick()?;
                    roofs.push((s, f));
                }
            }
        }
    }
    let index: HashMap<(ArrowId, ArrowId), usize> = roofs.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut parent: Vec<usize> = (0..roofs.len()).collect();
    for (i, &(s, f)) in roofs.iter().enumerate() {
        for r in p.arrows().filter(|&r| p.cod(r) == p.dom(s)) {
            meter.tick()?;
            let rs = p.comp(r, s);
            if sigma[rs] {
                let j = index[&(rs, p.comp(r, f))];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let mut class_of = vec![0; roofs.len()];
    let mut reps = Vec::new();
    let mut root_class = HashMap::new();
    for i in 0..roofs.len() {
        let r = find(&mut parent, i);
        let c = *root_class.entry(r).or_insert_with(|| {
            reps.push(i);
            reps.len() - 1
        });
        class_of[i] = c;
    }
    let ends = |i: usize| (p.cod(roofs[i].0), p.cod(roofs[i].1));
    let compose_roofs = |i: usize, j: usize, meter: &mut Meter| -> Result<usize> {
        let ((s, f), (t, g)) = (roofs[i], roofs[j]);
        let (t2, f2) = ore_square(p, sigma, f, t, meter)?
            .ok_or_else(|| Error::Internal("Ore square vanished".into()))?;
        Ok(class_of[index[&(p.comp(t2, s), p.comp(f2, g))]])
    };
    // composition must not depend on the chosen roofs
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 0..roofs.len() {
        for j in 0..roofs.len() {
            if ends(i).1 != ends(j).0 {
                continue;
            }
            let c = compose_roofs(i, j, &mut meter)?;
            match table.insert((class_of[i], class_of[j]), c) {
                Some(old) if old != c => {
                    return Err(Error::Internal("roof composition is not well defined".into()));
                }
                _ => {}
            }
        }
    }
    let identity: Vec<ArrowId> = p
        .objects()
        .map(|o| class_of[index[&(p.identity(o), p.identity(o))]])
        .collect();
    let arrows = reps
        .iter()
        .map(|&i| {
            let (s, f) = roofs[i];
            let name = if p.is_identity(s) {
                p.arrow_name(f).to_string()
            } else {
                format!("{}⁻¹;{}", p.arrow_name(s), p.arrow_name(f))
            };
            (name, ends(i).0, ends(i).1)
        })
        .collect();
    let result = Arc::new(FinCat::from_fn(p.obj_names().to_vec(), arrows, identity, |a, b| {
        table.get(&(a, b)).copied()
    })?);
    if !result.validate().is_valid() {
        return Err(Error::Internal("category of roofs is not a category".into()));
    }
    let arr_map = p
        .arrows()
        .map(|a| class_of[index[&(p.identity(p.dom(a)), a)]])
        .collect();
    let l = Functor::new(p.clone(), result.clone(), p.objects().collect(), arr_map);
    let words = reps
        .iter()
        .map(|&i| vec![Letter::Inv(roofs[i].0), Letter::Fwd(roofs[i].1)])
        .collect();
    Ok(Some(LocalizedCat {
        strategy: Strategy::RightFractions,
        status: LocStatus::Exact,
        result: Some(result),
        localization_functor: Some(l),
        words,
    }))
}

/// Typed string rewriting for the zigzag tier. Letters below `n` are arrows
/// of `p`; letter `n + s` is the formal inverse of `s`.
struct Rewriting {
    rules: Vec<(Vec<usize>, Vec<usize>)>,
}

fn shortlex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl Rewriting {
    fn reduce(&self, word: &[usize], meter: &mut Meter) -> Result<Vec<usize>> {
        let mut w = word.to_vec();
        'outer: loop {
            meter.tick()?;
            for (l, r) in &self.rules {
                if let Some(pos) = w.windows(l.len()).position(|win| win == &l[..]) {
                    w.splice(pos..pos + l.len(), r.iter().copied());
                    continue 'outer;
                }
            }
            return Ok(w);
        }
    }

    /// Adds `a = b` oriented by shortlex; false if already joinable.
    fn add(&mut self, a: &[usize], b: &[usize], meter: &mut Meter) -> Result<bool> {
        let (a, b) = (self.reduce(a, meter)?, self.reduce(b, meter)?);
        match shortlex(&a, &b) {
            Ordering::Equal => Ok(false),
            Ordering::Greater => {
                self.rules.push((a, b));
                Ok(true)
            }
            Ordering::Less => {
                self.rules.push((b, a));
                Ok(true)
            }
        }
    }

    /// Drops rules whose left side is reducible by another rule and
    /// normalizes right sides.
    fn interreduce(&mut self, meter: &mut Meter) -> Result<()> {
        let mut i = 0;
        while i < self.rules.len() {
            let (l, r) = self.rules[i].clone();
            let others = Rewriting {
                rules: self
                    .rules
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, x)| x.clone())
                    .collect(),
            };
            let nl = others.reduce(&l, meter)?;
            if nl != l {
                self.rules.remove(i);
                let nr = others.reduce(&r, meter)?;
                if nl != nr {
                    let (hi, lo) = if shortlex(&nl, &nr) == Ordering::Greater { (nl, nr) } else { (nr, nl) };
                    self.rules.push((hi, lo));
                }
                i = 0;
                continue;
            }
            self.rules[i].1 = others.reduce(&r, meter)?;
            i += 1;
        }
        Ok(())
    }

    /// Runs completion to a confluent system.
    fn complete(&mut self, meter: &mut Meter) -> Result<()> {
        self.interreduce(meter)?;
        loop {
            let mut added = false;
            let snapshot = self.rules.clone();
            for (l1, r1) in &snapshot {
                for (l2, r2) in &snapshot {
                    for k in 1..=l1.len().min(l2.len()) {
                        // suffix of l1 overlapping a prefix of l2
                        if l1[l1.len() - k..] == l2[..k] && !(k == l1.len() && k == l2.len()) {
                            let mut a = r1.clone();
                            a.extend_from_slice(&l2[k..]);
                            let mut b = l1[..l1.len() - k].to_vec();
                            b.extend_from_slice(r2);
                            added |= self.add(&a, &b, meter)?;
                        }
                    }
                    // l2 strictly inside l1
                    if l2.len() < l1.len() {
                        for pos in 1..l1.len() - l2.len() {
                            if l1[pos..pos + l2.len()] == l2[..] {
                                let mut b = l1[..pos].to_vec();
                                b.extend_from_slice(r2);
                                b.extend_from_slice(&l1[pos + l2.len()..]);
                                added |= self.add(r1, &b, meter)?;
                            }
                        }
                    }
                }
            }
            if !added {
                return Ok(());
            }
            self.interreduce(meter)?;
        }
    }
}

/// Tier (c): completion of the typed rewriting system of zigzags, then
/// enumeration of the irreducible words. Undecided when either step runs
/// out of budget.
pub fn zigzag_closure(p: &Arc<FinCat>, sigma: &[bool], budget: Budget) -> LocalizedCat {
    match zigzag_inner(p, sigma, budget) {
        Ok(loc) => loc,
        Err(Error::Budget { what, .. }) => {
            LocalizedCat::undecided(Strategy::BoundedZigzag, budget, format!("budget exceeded in {what}"))
        }
        Err(e) => LocalizedCat::undecided(Strategy::BoundedZigzag, budget, e.to_string()),
    }
}

fn zigzag_inner(p: &Arc<FinCat>, sigma: &[bool], budget: Budget) -> Result<LocalizedCat> {
    let n = p.n_arrows();
    let mut meter = budget.meter("zigzag completion");
    let letters: Vec<usize> = p
        .arrows()
        .filter(|&a| !p.is_identity(a))
        .chain(p.arrows().filter(|&a| sigma[a] && !p.is_identity(a)).map(|s| n + s))
        .collect();
    let ldom = |l: usize| if l < n { p.dom(l) } else { p.cod(l - n) };
    let lcod = |l: usize| if l < n { p.cod(l) } else { p.dom(l - n) };
    let mut rw = Rewriting { rules: Vec::new() };
    for &a in letters.iter().filter(|&&l| l < n) {
        for &b in letters.iter().filter(|&&l| l < n && ldom(l) == p.cod(a)) {
            let c = p.comp(a, b);
            let rhs = if p.is_identity(c) { vec![] } else { vec![c] };
            rw.rules.push((vec![a, b], rhs));
        }
    }
    for &s in letters.iter().filter(|&&l| l >= n) {
        rw.rules.push((vec![s - n, s], vec![]));
        rw.rules.push((vec![s, s - n], vec![]));
    }
    rw.complete(&mut meter)?;

    // irreducible words grow by suffix extension; prefixes stay irreducible
    let mut enum_meter = budget.meter("zigzag normal forms");
    let mut words: Vec<(ObjId, ObjId, Vec<usize>)> = p.objects().map(|o| (o, o, vec![])).collect();
    let mut frontier = words.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (src, tgt, w) in &frontier {
            for &l in letters.iter().filter(|&&l| ldom(l) == *tgt) {
                enum_meter.tick()?;
                let mut ext = w.clone();
                ext.push(l);
                let reducible = rw.rules.iter().any(|(lhs, _)| ext.ends_with(lhs));
                if !reducible {
                    next.push((*src, lcod(l), ext));
                }
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    words.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then_with(|| shortlex(&a.2, &b.2)));
    let index: BTreeMap<(ObjId, ObjId, Vec<usize>), usize> =
        words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let name = |w: &[usize]| -> String {
        w.iter()
            .map(|&l| {
                if l < n {
                    p.arrow_name(l).to_string()
                } else {
                    format!("{}⁻¹", p.arrow_name(l - n))
                }
            })
            .collect::<Vec<_>>()
            .join(";")
    };
    let arrows = words
        .iter()
        .map(|(s, t, w)| {
            let nm = if w.is_empty() { p.arrow_name(p.identity(*s)).to_string() } else { name(w) };
            (nm, *s, *t)
        })
        .collect();
    let identity = p.objects().map(|o| index[&(o, o, vec![])]).collect();
    let mut compose_err = None;
    let result = Arc::new(FinCat::from_fn(p.obj_names().to_vec(), arrows, identity, |a, b| {
        let mut w = words[a].2.clone();
        w.extend_from_slice(&words[b].2);
        match rw.reduce(&w, &mut meter) {
            Ok(nf) => index.get(&(words[a].0, words[b].1, nf)).copied(),
            Err(e) => {
                compose_err = Some(e);
                None
            }
        }
    })?);
    if let Some(e) = compose_err {
        return Err(e);
    }
    if !result.validate().is_valid() {
        return Err(Error::Internal("normal forms do not form a category".into()));
    }
    let mut arr_map = Vec::with_capacity(n);
    for a in p.arrows() {
        let w = if p.is_identity(a) { vec![] } else { rw.reduce(&[a], &mut meter)? };
        arr_map.push(index[&(p.dom(a), p.cod(a), w)]);
    }
    let l = Functor::new(p.clone(), result.clone(), p.objects().collect(), arr_map);
    let letter_words = words
        .iter()
        .map(|(_, _, w)| {
            w.iter()
                .map(|&l| if l < n { Letter::Fwd(l) } else { Letter::Inv(l - n) })
                .collect()
        })
        .collect();
    Ok(LocalizedCat {
        strategy: Strategy::BoundedZigzag,
        status: LocStatus::Exact,
        result: Some(result),
        localization_functor: Some(l),
        words: letter_words,
    })
}

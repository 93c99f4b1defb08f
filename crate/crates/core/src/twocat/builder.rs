use super::{TwoCat, TwoCatTables};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Name-based construction of a [`TwoCat`].
///
/// Identity 1-cells `1<obj>` and identity 2-cells `1<1-cell>` are created
/// automatically. Composites with identities follow the unit laws, and
/// identity 2-cells compose horizontally to identities; explicit entries
/// override these defaults.
#[derive(Debug, Clone, Default)]
pub struct TwoCatBuilder {
    objects: Vec<String>,
    ones: Vec<(String, String, String)>,
    twos: Vec<(String, String, String)>,
    v: Vec<(String, String, String)>,
    h1: Vec<(String, String, String)>,
    h2: Vec<(String, String, String)>,
}

fn triple(a: &str, b: &str, c: &str) -> (String, String, String) {
    (a.to_string(), b.to_string(), c.to_string())
}

impl TwoCatBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(mut self, name: &str) -> Self {
        self.objects.push(name.to_string());
        self
    }

    pub fn one_cell(mut self, name: &str, dom: &str, cod: &str) -> Self {
        self.ones.push(triple(name, dom, cod));
        self
    }

    pub fn two_cell(mut self, name: &str, src: &str, tgt: &str) -> Self {
        self.twos.push(triple(name, src, tgt));
        self
    }

    pub fn vcompose(mut self, a: &str, b: &str, c: &str) -> Self {
        self.v.push(triple(a, b, c));
        self
    }

    pub fn hcompose1(mut self, f: &str, g: &str, h: &str) -> Self {
        self.h1.push(triple(f, g, h));
        self
    }

    pub fn hcompose2(mut self, a: &str, b: &str, c: &str) -> Self {
        self.h2.push(triple(a, b, c));
        self
    }

    pub fn build(self) -> Result<TwoCat> {
        let unresolved = |name: &str, context: &str| Error::Unresolved {
            name: name.to_string(),
            context: context.to_string(),
        };
        let obj: HashMap<&str, usize> = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut t = TwoCatTables {
            objects: self.objects.clone(),
            ..Default::default()
        };
        for (i, o) in self.objects.iter().enumerate() {
            t.one_cells.push((format!("1{o}"), i, i));
            t.id1.push(i);
        }
        for (name, d, c) in &self.ones {
            let d = *obj.get(d.as_str()).ok_or_else(|| unresolved(d, name))?;
            let c = *obj.get(c.as_str()).ok_or_else(|| unresolved(c, name))?;
            t.one_cells.push((name.clone(), d, c));
        }
        let one: HashMap<String, usize> = t
            .one_cells
            .iter()
            .enumerate()
            .map(|(i, (n, _, _))| (n.clone(), i))
            .collect();
        if one.len() != t.one_cells.len() {
            return Err(Error::Precondition("duplicate 1-cell name".into()));
        }
        for (i, (n, _, _)) in t.one_cells.iter().enumerate() {
            t.two_cells.push((format!("1{n}"), i, i));
            t.id2.push(i);
        }
        for (name, s, g) in &self.twos {
            let s = *one.get(s).ok_or_else(|| unresolved(s, name))?;
            let g = *one.get(g).ok_or_else(|| unresolved(g, name))?;
            t.two_cells.push((name.clone(), s, g));
        }
        let two: HashMap<String, usize> = t
            .two_cells
            .iter()
            .enumerate()
            .map(|(i, (n, _, _))| (n.clone(), i))
            .collect();
        if two.len() != t.two_cells.len() {
            return Err(Error::Precondition("duplicate 2-cell name".into()));
        }

        let resolve = |m: &HashMap<String, usize>, rows: &[(String, String, String)], ctx: &str| {
            rows.iter()
                .map(|(a, b, c)| {
                    let look = |x: &String| m.get(x).copied().ok_or_else(|| unresolved(x, ctx));
                    Ok(((look(a)?, look(b)?), look(c)?))
                })
                .collect::<Result<Vec<_>>>()
        };

        let mut h1: HashMap<(usize, usize), usize> = HashMap::new();
        for (f, (_, d, c)) in t.one_cells.iter().enumerate() {
            h1.insert((t.id1[*d], f), f);
            h1.insert((f, t.id1[*c]), f);
        }
        h1.extend(resolve(&one, &self.h1, "1-cell composition")?);

        let mut v: HashMap<(usize, usize), usize> = HashMap::new();
        for (a, (_, s, g)) in t.two_cells.iter().enumerate() {
            v.insert((t.id2[*s], a), a);
            v.insert((a, t.id2[*g]), a);
        }
        v.extend(resolve(&two, &self.v, "vertical composition")?);

        let mut h2: HashMap<(usize, usize), usize> = HashMap::new();
        for (&(f, g), &fg) in &h1 {
            h2.insert((t.id2[f], t.id2[g]), t.id2[fg]);
        }
        for (a, (_, s, _)) in t.two_cells.iter().enumerate() {
            let (d, c) = (t.one_cells[*s].1, t.one_cells[*s].2);
            h2.insert((t.id2[t.id1[d]], a), a);
            h2.insert((a, t.id2[t.id1[c]]), a);
        }
        h2.extend(resolve(&two, &self.h2, "horizontal composition")?);

        let sorted = |m: HashMap<(usize, usize), usize>| {
            let mut out: Vec<_> = m.into_iter().map(|((a, b), c)| (a, b, c)).collect();
            out.sort_unstable();
            out
        };
        t.hcompose1 = sorted(h1);
        t.vcompose = sorted(v);
        t.hcompose2 = sorted(h2);
        TwoCat::new(t)
    }
}

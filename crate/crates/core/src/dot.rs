//! Graphviz export. Identities are omitted from every drawing.

use crate::fincat::FinCat;
use crate::twocat::TwoCat;
use std::fmt::Write;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' | '\\' => {
                out.push('\\');
                out.push(ch);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(ch),
        }
    }
    out.push('"');
    out
}

fn header(name: &str) -> String {
    format!("digraph {} {{\n  node [shape=box];\n", quote(name))
}

/// The non-identity arrows of `c`. Arrows with `highlight[a]` set are drawn
/// bold and red; pass an empty slice to highlight nothing.
pub fn category_to_dot(name: &str, c: &FinCat, highlight: &[bool]) -> String {
    let mut out = header(name);
    for o in c.objects() {
        writeln!(out, "  n{o} [label={}];", quote(c.obj_name(o))).unwrap();
    }
    for a in c.arrows().filter(|&a| !c.is_identity(a)) {
        let style = if highlight.get(a).copied().unwrap_or(false) {
            ", color=red, penwidth=2"
        } else {
            ""
        };
        writeln!(
            out,
            "  n{} -> n{} [label={}{style}];",
            c.dom(a),
            c.cod(a),
            quote(c.arrow_name(a))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// The 1-skeleton of `k`: objects and non-identity 1-cells.
pub fn skeleton_to_dot(name: &str, k: &TwoCat) -> String {
    let mut out = header(name);
    for o in k.objects() {
        writeln!(out, "  n{o} [label={}];", quote(k.obj_name(o))).unwrap();
    }
    for f in k.one_cells().filter(|&f| !k.is_id1(f)) {
        writeln!(out, "  n{} -> n{} [label={}];", k.dom(f), k.cod(f), quote(k.one_name(f))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The hom-slice `K(a, b)`: 1-cells as nodes, non-identity 2-cells as edges.
pub fn hom_slice_to_dot(name: &str, k: &TwoCat, a: usize, b: usize) -> String {
    let mut out = header(name);
    for &f in k.hom(a, b) {
        writeln!(out, "  n{f} [label={}];", quote(k.one_name(f))).unwrap();
    }
    for &f in k.hom(a, b) {
        for c in k.out_cells(f).filter(|&c| !k.is_id2(c)) {
            writeln!(out, "  n{} -> n{} [label={}];", k.src(c), k.tgt(c), quote(k.two_name(c))).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// The skeleton of `k` followed by every non-empty hom-slice, as
/// `(file stem, contents)` pairs.
pub fn shape_to_dot(name: &str, k: &TwoCat) -> Vec<(String, String)> {
    let mut files = vec![(format!("{name}.skeleton"), skeleton_to_dot(name, k))];
    for a in k.objects() {
        for b in k.objects() {
            if !k.hom(a, b).is_empty() {
                let stem = format!("{name}.{}-{}", k.obj_name(a), k.obj_name(b));
                let body = hom_slice_to_dot(&stem, k, a, b);
                files.push((stem, body));
            }
        }
    }
    files
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twocat::idempotent_shape;

    #[test]
    fn highlighted_arrows_are_marked() {
        let c = FinCat::walking_arrow();
        let a = c.find_arrow("a").unwrap();
        let mut h = vec![false; c.n_arrows()];
        h[a] = true;
        let dot = category_to_dot("p", &c, &h);
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("color=red"));
        assert!(!category_to_dot("p", &c, &[]).contains("color=red"));
    }

    #[test]
    fn idempotent_shape_slices() {
        let k = idempotent_shape();
        let files = shape_to_dot("K", &k);
        assert_eq!(files.len(), 2);
        // ξ is the only non-identity 2-cell
        assert_eq!(files[1].1.matches("->").count(), 1);
    }

    #[test]
    fn names_are_escaped() {
        let c = FinCat::terminal().relabeled(vec!["a\"b".into()], vec!["1".into()]);
        assert!(category_to_dot("q", &c, &[]).contains("\"a\\\"b\""));
    }
}

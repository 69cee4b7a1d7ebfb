//! Graphviz output of Hasse diagrams.

use std::fmt::Write;

use crate::completion::VIRTUAL;
use crate::poset::ColoredPoset;
use crate::treeify::{ROOT, U};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The cover graph, drawn bottom to top. `U` points are filled, points of
/// the completion are dashed and an added root is a box.
pub fn emit_dot(p: &ColoredPoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..p.len() {
        let mut attrs = vec![format!("label={}", quote(p.id(x)))];
        if p.has_color(U, x) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightgrey".into());
        }
        if p.has_color(VIRTUAL, x) {
            attrs.push("style=dashed".into());
        }
        if p.has_color(ROOT, x) {
            attrs.push("shape=box".into());
        }
        let _ = writeln!(out, "  {} [{}];", quote(p.id(x)), attrs.join(", "));
    }
    for (lo, hi) in p.covers().edges {
        let _ = writeln!(out, "  {} -> {};", quote(p.id(lo)), quote(p.id(hi)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::complete;
    use crate::fixtures::*;

    #[test]
    fn chain_has_one_edge() {
        let d = emit_dot(&chain(2));
        assert_eq!(d.matches("->").count(), 1);
        assert_eq!(d.matches("label=").count(), 2);
    }

    #[test]
    fn completion_point_is_dashed() {
        let d = emit_dot(&complete(&bip22()).marked());
        assert_eq!(d.matches("label=").count(), 5);
        assert!(d.contains("\"[a,b|c,d]\" [label=\"[a,b|c,d]\", style=dashed]"));
    }

    #[test]
    fn u_points_are_filled() {
        let t = crate::treeify::treeify(&bowtie()).unwrap().tree;
        assert_eq!(emit_dot(&t).matches("style=filled").count(), 3);
    }
}

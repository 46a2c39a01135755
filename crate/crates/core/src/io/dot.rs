//! Graphviz export of the planified map.

use std::fmt::Write;

use crate::drawing::{OnePlanarDrawing, Side};

/// DOT text for the planified map. True vertices are named `v<i>` and carry
/// `class="black"|"white"`; false vertices are named `c<j>` and carry
/// `kind="false"`. Each map edge is labelled with its graph edge.
pub fn export_dot(d: &OnePlanarDrawing) -> String {
    let mut out = String::from("graph drawing {\n  node [shape=circle, label=\"\"];\n");
    let n = d.vertex_count();
    let name = |v: usize| if v < n { format!("v{v}") } else { format!("c{}", v - n) };
    for v in 0..n {
        let (class, fill) = match d.graph().side(v) {
            Some(Side::Black) => ("black", "black"),
            Some(Side::White) => ("white", "white"),
            None => ("none", "gray"),
        };
        let _ = writeln!(
            out,
            "  {} [kind=\"true\", class=\"{class}\", style=filled, fillcolor={fill}, xlabel=\"{v}\"];",
            name(v)
        );
    }
    for (c, &[e, f]) in d.crossings().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {} [kind=\"false\", shape=point, width=0.05, crossing=\"{e} {f}\"];",
            name(n + c)
        );
    }
    let map = d.planified();
    for (me, owner) in d.map_edge_owners().into_iter().enumerate() {
        let [a, b] = map.endpoints(me);
        let _ = writeln!(out, "  {} -- {} [edge={owner}];", name(a), name(b));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{balanced, w3_family};

    #[test]
    fn c4_has_no_false_nodes() {
        let dot = export_dot(&balanced(2).unwrap());
        assert_eq!(dot.matches("kind=\"true\"").count(), 4);
        assert_eq!(dot.matches("kind=\"false\"").count(), 0);
        assert_eq!(dot.matches(" -- ").count(), 4);
    }

    #[test]
    fn w3_marks_crossings() {
        let d = w3_family(3, 6).unwrap();
        let dot = export_dot(&d);
        assert_eq!(dot.matches("kind=\"false\"").count(), 6);
        assert_eq!(dot.matches(" -- ").count(), d.planified().edge_count());
    }
}

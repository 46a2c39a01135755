//! SVG export with a barycentric layout of the planified map.

use std::fmt::Write;

use crate::drawing::{EdgePath, OnePlanarDrawing, Side};

use super::layout::barycentric;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

/// SVG picture of the drawing. Each graph edge is one `<polyline
/// class="edge">`, routed through its crossing point if it has one; each
/// crossing is one `<circle class="false">`.
pub fn export_svg(d: &OnePlanarDrawing) -> String {
    let pos = barycentric(d.planified());
    let scale = (SIZE - 2.0 * MARGIN) / 2.0;
    let at = |v: usize| {
        let (x, y) = pos[v];
        (MARGIN + (x + 1.0) * scale, MARGIN + (1.0 - y) * scale)
    };
    let n = d.vertex_count();
    let g = d.graph();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    out.push_str("<g stroke=\"#444\" stroke-width=\"1.5\" fill=\"none\">\n");
    let crossing_of = d.crossing_of_edges();
    for (e, path) in d.edge_paths().iter().enumerate() {
        let [u, v] = g.edge(e);
        let mut points = vec![at(u)];
        if let EdgePath::Crossed(_) = path {
            let c = crossing_of[e].expect("crossed edge has a crossing");
            points.push(at(d.false_vertex(c)));
        }
        points.push(at(v));
        let pts: Vec<String> = points.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let _ = writeln!(
            out,
            "<polyline class=\"edge\" data-edge=\"{e}\" points=\"{}\"/>",
            pts.join(" ")
        );
    }
    out.push_str("</g>\n<g stroke=\"black\" stroke-width=\"1.5\">\n");
    for v in 0..n {
        let (class, fill) = match g.side(v) {
            Some(Side::Black) => ("black", "black"),
            Some(Side::White) => ("white", "white"),
            None => ("none", "gray"),
        };
        let (x, y) = at(v);
        let _ = writeln!(
            out,
            "<circle class=\"{class}\" data-vertex=\"{v}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"6\" fill=\"{fill}\"/>"
        );
    }
    out.push_str("</g>\n<g fill=\"red\">\n");
    for (c, &[e, f]) in d.crossings().iter().enumerate() {
        let (x, y) = at(d.false_vertex(c));
        let _ = writeln!(
            out,
            "<circle class=\"false\" data-crossing=\"{c}\" data-edges=\"{e} {f}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.5\"/>"
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{k36_family, w3_family};

    fn marks(svg: &str) -> usize {
        svg.matches("class=\"false\"").count()
    }

    #[test]
    fn crossing_marks() {
        assert_eq!(marks(&export_svg(&w3_family(3, 6).unwrap())), 6);
        let k36 = k36_family(6).unwrap();
        assert_eq!(marks(&export_svg(&k36)), k36.crossing_count());
        assert!((4..=6).contains(&k36.crossing_count()));
    }

    #[test]
    fn one_mark_per_edge_at_most() {
        let d = w3_family(4, 14).unwrap();
        let svg = export_svg(&d);
        let mut per_edge = vec![0; d.edge_count()];
        for line in svg.lines().filter(|l| l.contains("class=\"false\"")) {
            let edges = line.split("data-edges=\"").nth(1).unwrap().split('"').next().unwrap();
            for e in edges.split(' ') {
                per_edge[e.parse::<usize>().unwrap()] += 1;
            }
        }
        assert!(per_edge.iter().all(|&c| c <= 1));
        assert_eq!(svg.matches("class=\"edge\"").count(), d.edge_count());
    }
}

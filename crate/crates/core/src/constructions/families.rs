//! Triangulation-based families and the small-`x` cases.

use crate::drawing::{DrawingBuilder, Graph, OnePlanarDrawing, Side};
use crate::oracle::{realize, CrossingAssignment};
use crate::plane_map::{Face, PlaneMap, VertexId};

use super::balanced::balanced;
use super::templates::{b_config, template, ConfigTemplate, TemplateName};
use super::{require, ConstructionError, ConstructionParams};

/// Stacked triangulation on `x >= 3` vertices: a triangle, then a degree-3
/// vertex inserted into the first traced face until `x` vertices exist.
pub fn stacked_triangulation(x: usize) -> Result<PlaneMap, ConstructionError> {
    require(x >= 3, || format!("triangulation needs x >= 3, got {x}"))?;
    // Darts 0, 2, 4 run 0->1->2->0; each vertex sees its out-dart then its in-dart.
    let mut map = PlaneMap::from_rotations(3, &[[0, 1], [1, 2], [2, 0]], &[vec![0, 5], vec![2, 1], vec![4, 3]])
        .expect("triangle");
    for _ in 3..x {
        let face = map.trace_faces().swap_remove(0);
        map.insert_vertex_in_face(&face, &[0, 1, 2]).expect("triangular face");
    }
    Ok(map)
}

/// Glues one configuration per listed face of the triangulation, removes
/// the triangulation edges, and returns the builder together with the image
/// of each configuration's vertices.
fn glue_configurations(
    triangulation: PlaneMap,
    plan: &[&ConfigTemplate],
) -> Result<(DrawingBuilder, Vec<Vec<VertexId>>), ConstructionError> {
    let faces: Vec<Face> = triangulation.trace_faces();
    if faces.len() < plan.len() {
        return Err(ConstructionError::InsufficientFaces {
            faces: faces.len(),
            needed: plan.len(),
        });
    }
    let mut b = DrawingBuilder::from_scaffold(triangulation, Some(Side::Black));
    let mut images = Vec::with_capacity(plan.len());
    for (face, config) in faces.iter().zip(plan) {
        images.push(b.glue(face, &config.fragment, &config.corners)?);
    }
    b.remove_scaffold()?;
    Ok((b, images))
}

/// `W_3` in every face of the stacked triangulation on `x` vertices, then
/// `y - (6x - 12)` white vertices of degree 2: `2(x + y) + 4x - 12` edges.
pub fn w3_family(x: usize, y: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    require(x >= 3 && y + 12 >= 6 * x, || {
        format!("w3 needs x >= 3 and y >= 6x - 12, got ({x}, {y})")
    })?;
    let t = stacked_triangulation(x)?;
    let w3 = template(TemplateName::W3).expect("stored");
    let plan = vec![w3; 2 * x - 4];
    let (b, _) = glue_configurations(t, &plan)?;
    let d = b.finish()?;
    Ok(d.augment_degree2(y + 12 - 6 * x, Side::White, None)?)
}

/// Configurations `B_0..B_3` in the faces of a stacked triangulation on
/// `y'/6 + 2` vertices, `y'` being `y` rounded up to a multiple of 6. When
/// `y` is not a multiple of 6, `y' - y` whites are deleted from the first
/// two `B_0` faces.
pub fn b_family(x: usize, y: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    require(x >= 3 && y >= x.max(6) && y + 12 <= 6 * x, || {
        format!("b needs x >= 3 and max(x, 6) <= y <= 6x - 12, got ({x}, {y})")
    })?;
    let params = ConstructionParams::new(x, y);
    let (s, t) = params.s_t().expect("x covers the triangulation whenever y <= 6x - 12");
    let t0 = params.triangulation_size();
    let faces = 2 * t0 - 4;
    let surplus = params.y_rounded() - y;
    let needed = s + usize::from(t > 0) + if surplus > 0 { 2 } else { 0 };
    if needed > faces {
        return Err(ConstructionError::InsufficientFaces { faces, needed });
    }
    let mut plan = vec![b_config(3); s];
    if t > 0 {
        plan.push(b_config(t));
    }
    let first_b0 = plan.len();
    plan.resize(faces, b_config(0));
    let (mut b, images) = glue_configurations(stacked_triangulation(t0)?, &plan)?;
    if surplus > 0 {
        // Highest-id whites first; the first B_0 face takes the larger share.
        let mut doomed = Vec::with_capacity(surplus);
        let shares = [surplus.div_ceil(2), surplus / 2];
        for (offset, share) in shares.into_iter().enumerate() {
            let image = &images[first_b0 + offset];
            doomed.extend([image[5], image[4], image[3]].into_iter().take(share));
        }
        b.remove_true_vertices(&doomed)?;
    }
    Ok(b.finish()?)
}

/// `K_{3,6}` plus `y - 6` white vertices of degree 2: `2(3 + y)` edges.
pub fn k36_family(y: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    require(y >= 6, || format!("k36 needs y >= 6, got {y}"))?;
    let k36 = &template(TemplateName::K36).expect("stored").fragment;
    Ok(k36.augment_degree2(y - 6, Side::White, None)?)
}

/// `K_{3,y}` for `3 <= y <= 5`, cut down from the stored `K_{3,6}`.
pub(crate) fn k3_small(y: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    require((3..6).contains(&y), || format!("small K3,y needs 3 <= y <= 5, got {y}"))?;
    let k36 = &template(TemplateName::K36).expect("stored").fragment;
    let whites = k36.graph().vertices_of(Side::White);
    Ok(k36.remove_vertices(&whites[y..])?)
}

/// The star `K_{1,y}`.
pub fn star(y: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    require(y >= 1, || "star needs y >= 1".to_string())?;
    let mut sides = vec![Side::Black];
    sides.resize(y + 1, Side::White);
    let edges = (1..=y).map(|w| [0, w]).collect();
    let g = Graph::bipartite(sides, edges).expect("star is bipartite");
    Ok(realize(&g, &CrossingAssignment::empty())?.expect("star is planar"))
}

/// Planar bipartite graph with classes `(2, y)` and `2y` edges: a 4-cycle
/// plus `y - 2` whites joined to both blacks.
pub fn planar_family(y: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    require(y >= 2, || format!("planar needs y >= 2, got {y}"))?;
    Ok(balanced(2)?.augment_degree2(y - 2, Side::White, None)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stacked_triangulation_counts() {
        for x in 3..20 {
            let t = stacked_triangulation(x).unwrap();
            let faces = t.trace_faces();
            assert_eq!(faces.len(), 2 * x - 4);
            assert!(faces.iter().all(|f| f.len() == 3));
            assert_eq!(t.edge_count(), 3 * x - 6);
            assert!(t.euler_check().is_planar());
        }
        assert_eq!(stacked_triangulation(10).unwrap().edge_count(), 24);
        assert!(stacked_triangulation(2).is_err());
    }

    #[test]
    fn w3_examples() {
        for (x, y, v, e, c) in [(3, 6, 9, 18, Some(6)), (4, 12, 16, 36, Some(12)), (3, 8, 11, 22, None)] {
            let d = w3_family(x, y).unwrap();
            assert!(d.validate().passed());
            assert_eq!(d.class_sizes(), Some((x, y)));
            assert_eq!(d.vertex_count(), v);
            assert_eq!(d.edge_count(), e);
            if let Some(c) = c {
                assert_eq!(d.crossing_count(), c);
            }
        }
        assert!(w3_family(4, 11).is_err());
    }

    #[test]
    fn w3_removes_triangulation_edges() {
        let d = w3_family(6, 24).unwrap();
        let g = d.graph();
        for &[a, b] in g.edges() {
            assert_ne!(g.side(a), g.side(b));
        }
    }

    #[test]
    fn b_examples() {
        let d = b_family(5, 12).unwrap();
        assert!(d.validate().passed());
        assert_eq!((d.vertex_count(), d.edge_count()), (17, 39));
        let d = b_family(4, 7).unwrap();
        assert!(d.validate().passed());
        assert_eq!(d.class_sizes(), Some((4, 7)));
        assert_eq!(d.edge_count(), 21);
        assert!(b_family(4, 4).is_err());
        assert!(matches!(
            b_family(11, 11),
            Err(ConstructionError::InsufficientFaces { .. })
        ));
    }

    #[test]
    fn b_inserted_vertices_have_degree_three_before_deletion() {
        for (x, y) in [(5, 12), (9, 18), (10, 24), (8, 36)] {
            let d = b_family(x, y).unwrap();
            let g = d.graph();
            let mut degree = vec![0; g.vertex_count()];
            for &[a, b] in g.edges() {
                degree[a] += 1;
                degree[b] += 1;
            }
            let t0 = y / 6 + 2;
            for v in 0..g.vertex_count() {
                if g.side(v) == Some(Side::White) {
                    assert!(degree[v] >= 3, "({x}, {y}) white {v}");
                }
            }
            // Inserted blacks come after the triangulation vertices.
            let inserted: Vec<usize> = (t0..g.vertex_count())
                .filter(|&v| g.side(v) == Some(Side::Black))
                .collect();
            assert_eq!(inserted.len(), x - t0);
            for v in inserted {
                assert_eq!(degree[v], 3, "({x}, {y}) black {v}");
            }
        }
    }

    #[test]
    fn k36_and_small() {
        for (y, e) in [(6, 18), (7, 20), (20, 46)] {
            let d = k36_family(y).unwrap();
            assert!(d.validate().passed());
            assert_eq!(d.class_sizes(), Some((3, y)));
            assert_eq!(d.edge_count(), e);
        }
        assert!(k36_family(5).is_err());
        for y in 3..6 {
            let d = k3_small(y).unwrap();
            assert_eq!(d.class_sizes(), Some((3, y)));
            assert_eq!(d.edge_count(), 3 * y);
        }
    }

    #[test]
    fn star_and_planar() {
        let d = star(9).unwrap();
        assert_eq!((d.edge_count(), d.crossing_count()), (9, 0));
        for y in 2..10 {
            let d = planar_family(y).unwrap();
            assert!(d.validate().passed());
            assert_eq!(d.class_sizes(), Some((2, y)));
            assert_eq!(d.edge_count(), 2 * y);
            assert_eq!(d.crossing_count(), 0);
        }
    }
}

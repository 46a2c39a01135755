use crate::plane_map::{DartId, EdgeId, Face, PlaneMap, VertexId};

use super::{DrawingBuilder, DrawingError, Graph, OnePlanarDrawing, Side};

impl OnePlanarDrawing {
    /// The abstract graph carried by the drawing.
    pub fn recover_graph(&self) -> Graph {
        self.graph().clone()
    }

    /// Adds, for every crossing, one edge between the black ends of its two
    /// edges, routed alongside the two black half-segments so that it closes
    /// a triangle with the false vertex. Parallel edges may appear.
    ///
    /// Uncoloured drawings use the first endpoint of each edge instead.
    pub fn black_extension(&self) -> PlaneMap {
        let mut map = self.planified().clone();
        let paths = self.edge_paths();
        for &[e, f] in self.crossings() {
            let (Some(s1), Some(s2)) = (black_spoke(self, &map, e, paths), black_spoke(self, &map, f, paths)) else {
                continue;
            };
            let (s1, s2) = if map.succ(s1) == s2 { (s1, s2) } else { (s2, s1) };
            debug_assert_eq!(map.succ(s1), s2);
            map.insert_edge_before(PlaneMap::opposite(s1), map.face_next(s2))
                .expect("crossing edges are not adjacent");
        }
        map
    }

    /// The drawing without the given vertices and their edges. Crossings
    /// that lose an edge disappear.
    pub fn remove_vertices(&self, vertices: &[VertexId]) -> Result<OnePlanarDrawing, DrawingError> {
        let mut b = DrawingBuilder::from_drawing(self);
        b.remove_true_vertices(vertices)?;
        b.finish()
    }

    /// The drawing without the given edges.
    pub fn remove_edges(&self, edges: &[EdgeId]) -> Result<OnePlanarDrawing, DrawingError> {
        let mut b = DrawingBuilder::from_drawing(self);
        b.remove_graph_edges(edges)?;
        b.finish()
    }

    /// The same drawing under a new vertex colouring (or none); edges are
    /// reoriented black-first.
    pub fn recoloured(&self, sides: Option<&[Side]>) -> Result<OnePlanarDrawing, DrawingError> {
        let mut b = DrawingBuilder::from_drawing(self);
        b.recolour(sides);
        b.finish()
    }

    /// Adds `count` vertices of class `side`, each joined without crossings
    /// to the same two vertices `u < v` of the other class.
    ///
    /// Without `target_face`, `(u, v)` is the lexicographically smallest pair
    /// of true vertices of the other class that share a face, and the face is
    /// the first one in trace order containing both. With `target_face`, the
    /// first two distinct such vertices on that face are used. Attachments
    /// are at the first occurrence of each vertex on the face walk.
    pub fn augment_degree2(
        &self,
        count: usize,
        side: Side,
        target_face: Option<&Face>,
    ) -> Result<OnePlanarDrawing, DrawingError> {
        if count == 0 {
            return Ok(self.clone());
        }
        let sides = self.graph().sides().ok_or(DrawingError::Uncoloured)?;
        let map = self.planified();
        let n = self.vertex_count();
        let eligible = |v: VertexId| v < n && sides[v] == side.other();
        let (face, u, v) = match target_face {
            Some(face) => {
                if !map.is_face(face) {
                    return Err(crate::plane_map::MapError::StaleFace.into());
                }
                let mut found = Vec::new();
                for w in face.vertices(map) {
                    if eligible(w) && !found.contains(&w) {
                        found.push(w);
                    }
                }
                if found.len() < 2 {
                    return Err(DrawingError::NoEligibleFace(side.other()));
                }
                (face.clone(), found[0], found[1])
            }
            None => {
                let faces = map.trace_faces();
                let mut best: Option<(VertexId, VertexId, usize)> = None;
                for (i, face) in faces.iter().enumerate() {
                    let mut on: Vec<VertexId> = face.vertices(map).into_iter().filter(|&w| eligible(w)).collect();
                    on.sort_unstable();
                    on.dedup();
                    if on.len() >= 2 {
                        let cand = (on[0], on[1], i);
                        if best.is_none_or(|b| (cand.0, cand.1) < (b.0, b.1)) {
                            best = Some(cand);
                        }
                    }
                }
                let (u, v, i) = best.ok_or(DrawingError::NoEligibleFace(side.other()))?;
                (faces[i].clone(), u, v)
            }
        };
        let first = |w: VertexId| -> DartId {
            *face
                .darts()
                .iter()
                .find(|&&d| map.origin(d) == w)
                .expect("vertex lies on face")
        };
        let (a, b) = (first(u), first(v));
        let mut builder = DrawingBuilder::from_drawing(self);
        builder.add_degree2_fan(a, b, count, Some(side));
        builder.finish()
    }
}

/// Dart from the false vertex towards the black end of crossed edge `e`.
fn black_spoke(d: &OnePlanarDrawing, map: &PlaneMap, e: usize, paths: &[super::EdgePath]) -> Option<DartId> {
    let super::EdgePath::Crossed([m0, m1]) = paths[e] else {
        return None;
    };
    let [first, second] = d.graph().edge(e);
    let (end, seg) = match d.graph().side(first) {
        Some(Side::White) => (second, m1),
        _ => (first, m0),
    };
    let [p, _] = map.endpoints(seg);
    Some(if p == end { 2 * seg + 1 } else { 2 * seg })
}

use crate::drawing::{DrawingError, EdgePath, Graph, OnePlanarDrawing};
use crate::plane_map::{EdgeId, VertexId};

use super::planarity::{planarity_test, Planarity};
use super::OracleError;

/// A set of disjoint, pairwise non-adjacent edge pairs proposed to cross.
///
/// Pairs are stored normalised (`[min, max]`) in the order given; that order
/// fixes the ids of the false vertices in any realised drawing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossingAssignment {
    pairs: Vec<[EdgeId; 2]>,
}

impl CrossingAssignment {
    pub fn new(graph: &Graph, pairs: &[[EdgeId; 2]]) -> Result<Self, OracleError> {
        let m = graph.edge_count();
        let mut used = vec![false; m];
        let mut out = Vec::with_capacity(pairs.len());
        for &[e, f] in pairs {
            for g in [e, f] {
                if g >= m {
                    return Err(OracleError::UnknownEdge(g));
                }
            }
            if e == f {
                return Err(OracleError::SelfPair(e));
            }
            if graph.adjacent_edges(e, f) {
                return Err(OracleError::AdjacentPair(e, f));
            }
            for g in [e, f] {
                if used[g] {
                    return Err(OracleError::EdgeInTwoPairs(g));
                }
                used[g] = true;
            }
            out.push([e.min(f), e.max(f)]);
        }
        Ok(Self { pairs: out })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn pairs(&self) -> &[[EdgeId; 2]] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Provenance of one gadget-graph edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetEdge {
    Uncrossed(EdgeId),
    /// Segment of crossed graph edge `edge` from its end `end` to the false
    /// vertex of `crossing`.
    Spoke {
        crossing: usize,
        edge: EdgeId,
        end: usize,
    },
    /// One side of the 4-cycle surrounding a false vertex.
    Rim {
        crossing: usize,
    },
}

/// The wheel-gadget planarisation of a graph under a crossing assignment.
///
/// Vertex `n + c` is the false vertex of pair `c`. Pair `(ab, cd)` yields the
/// spokes `a-z, z-b, c-z, z-d` and the rim `a-c, c-b, b-d, d-a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub vertex_count: usize,
    pub edges: Vec<[VertexId; 2]>,
    pub kinds: Vec<GadgetEdge>,
}

pub fn gadget_planarize(graph: &Graph, assignment: &CrossingAssignment) -> GadgetGraph {
    let n = graph.vertex_count();
    let mut crossed = vec![None; graph.edge_count()];
    for (c, &[e, f]) in assignment.pairs().iter().enumerate() {
        crossed[e] = Some(c);
        crossed[f] = Some(c);
    }
    let mut edges = Vec::new();
    let mut kinds = Vec::new();
    for (e, &[a, b]) in graph.edges().iter().enumerate() {
        match crossed[e] {
            None => {
                edges.push([a, b]);
                kinds.push(GadgetEdge::Uncrossed(e));
            }
            Some(c) => {
                let z = n + c;
                edges.push([a, z]);
                kinds.push(GadgetEdge::Spoke {
                    crossing: c,
                    edge: e,
                    end: 0,
                });
                edges.push([z, b]);
                kinds.push(GadgetEdge::Spoke {
                    crossing: c,
                    edge: e,
                    end: 1,
                });
            }
        }
    }
    for (c, &[e, f]) in assignment.pairs().iter().enumerate() {
        let [a, b] = graph.edge(e);
        let [p, q] = graph.edge(f);
        for rim in [[a, p], [p, b], [b, q], [q, a]] {
            edges.push(rim);
            kinds.push(GadgetEdge::Rim { crossing: c });
        }
    }
    GadgetGraph {
        vertex_count: n + assignment.len(),
        edges,
        kinds,
    }
}

/// Turns a planar gadget graph into a certified drawing, or `None` when the
/// gadget graph is not planar.
pub fn realize(graph: &Graph, assignment: &CrossingAssignment) -> Result<Option<OnePlanarDrawing>, DrawingError> {
    let gadget = gadget_planarize(graph, assignment);
    let Planarity::Planar(mut map) = planarity_test(gadget.vertex_count, &gadget.edges) else {
        return Ok(None);
    };
    let rims: Vec<EdgeId> = (0..gadget.kinds.len())
        .filter(|&g| matches!(gadget.kinds[g], GadgetEdge::Rim { .. }))
        .collect();
    let relabel = map.delete_edges(&rims)?;
    let mut paths = vec![EdgePath::Direct(usize::MAX); graph.edge_count()];
    for (g, kind) in gadget.kinds.iter().enumerate() {
        let Some(me) = relabel.edges[g] else { continue };
        match *kind {
            GadgetEdge::Uncrossed(e) => paths[e] = EdgePath::Direct(me),
            GadgetEdge::Spoke { edge, end, .. } => {
                let mut segs = match paths[edge] {
                    EdgePath::Crossed(s) => s,
                    EdgePath::Direct(_) => [usize::MAX; 2],
                };
                segs[end] = me;
                paths[edge] = EdgePath::Crossed(segs);
            }
            GadgetEdge::Rim { .. } => {}
        }
    }
    OnePlanarDrawing::assemble(graph.clone(), assignment.pairs().to_vec(), map, paths).map(Some)
}

//! 1-planar drawings as combinatorial objects.
//!
//! A drawing is an abstract graph, a set of crossing pairs, and the
//! planarization obtained by turning each crossing into a degree-4 *false*
//! vertex. Map vertex `v < n` is graph vertex `v`; map vertex `n + c` is the
//! false vertex of crossing `c`. No coordinates are involved.

mod builder;
mod graph;
mod surgery;

use std::fmt;

use thiserror::Error;

use crate::plane_map::{EdgeId, MapError, PlaneMap, Verdict, VertexId};

pub(crate) use builder::DrawingBuilder;
pub use graph::{Graph, Side};

/// Realisation of one graph edge inside the planified map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgePath {
    /// An uncrossed edge: one map edge.
    Direct(EdgeId),
    /// A crossed edge: the map edge from `edges[e][0]` to the false vertex,
    /// then the map edge from the false vertex to `edges[e][1]`.
    Crossed([EdgeId; 2]),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex colouring does not cover every vertex")]
    ColouringSize,
    #[error("edge {0} has an endpoint out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("edge {0} is a loop or repeats an earlier edge")]
    NonSimple(EdgeId),
    #[error("edge {0} joins two vertices of one class")]
    NonBipartite(EdgeId),
    #[error("edge {0} is self-crossing")]
    SelfCrossing(EdgeId),
    #[error("crossing names edge {0}, which does not exist")]
    UnknownCrossingEdge(EdgeId),
    #[error("doubly-crossed edge {0}")]
    DoublyCrossedEdge(EdgeId),
    #[error("adjacent edges {0} and {1} cross")]
    AdjacentCrossing(EdgeId, EdgeId),
    #[error("planified map has {found} vertices, expected {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("path/edge mismatch: {0}")]
    PathMismatch(String),
    #[error("false vertex of crossing {crossing} has degree {degree}")]
    FalseVertexDegree { crossing: usize, degree: usize },
    #[error("non-alternating rotation at the false vertex of crossing {0}")]
    NonAlternatingRotation(usize),
    #[error("planified map is not planar (genus {0})")]
    NonPlanar(usize),
    #[error("planified map is corrupt: {0}")]
    Map(MapError),
}

#[derive(Debug, Error)]
pub enum DrawingError {
    #[error("invalid drawing: {0}")]
    Invalid(Violation),
    #[error("no face has two distinct {0:?} vertices on its boundary")]
    NoEligibleFace(Side),
    #[error("operation needs a bipartite colouring")]
    Uncoloured,
    #[error(transparent)]
    Map(#[from] MapError),
}

impl From<Violation> for DrawingError {
    fn from(v: Violation) -> Self {
        DrawingError::Invalid(v)
    }
}

/// Outcome of [`OnePlanarDrawing::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// `(x, y)` with `x <= y`, when the graph is coloured.
    pub classes: Option<(usize, usize)>,
    pub vertices: usize,
    pub edges: usize,
    pub crossings: usize,
    /// `6x - 12` for the smaller class size `x >= 2`.
    pub crossing_ceiling: Option<i64>,
    /// Advisory only: the ceiling bounds crossing-minimal drawings.
    pub exceeds_minimal_bound: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status: {}", if self.passed() { "pass" } else { "fail" })?;
        if let Some((x, y)) = self.classes {
            writeln!(f, "classes: x={x} y={y}")?;
        }
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "edges: {}", self.edges)?;
        write!(f, "crossings: {}", self.crossings)?;
        if let Some(c) = self.crossing_ceiling {
            write!(f, " (6x-12 = {c}")?;
            if self.exceeds_minimal_bound {
                write!(f, ", exceeds-minimal-bound")?;
            }
            write!(f, ")")?;
        }
        writeln!(f)?;
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        Ok(())
    }
}

/// A certified 1-planar drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePlanarDrawing {
    graph: Graph,
    crossings: Vec<[EdgeId; 2]>,
    planified: PlaneMap,
    edge_paths: Vec<EdgePath>,
}

impl OnePlanarDrawing {
    /// Builds a drawing and certifies it, failing on the first violated
    /// invariant.
    pub fn assemble(
        graph: Graph,
        crossings: Vec<[EdgeId; 2]>,
        planified: PlaneMap,
        edge_paths: Vec<EdgePath>,
    ) -> Result<Self, DrawingError> {
        let d = Self::from_parts_unchecked(graph, crossings, planified, edge_paths);
        match d.validate().violations.into_iter().next() {
            Some(v) => Err(DrawingError::Invalid(v)),
            None => Ok(d),
        }
    }

    /// Wraps the parts without checking anything.
    pub fn from_parts_unchecked(
        graph: Graph,
        crossings: Vec<[EdgeId; 2]>,
        planified: PlaneMap,
        edge_paths: Vec<EdgePath>,
    ) -> Self {
        Self {
            graph,
            crossings,
            planified,
            edge_paths,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn crossings(&self) -> &[[EdgeId; 2]] {
        &self.crossings
    }

    pub fn planified(&self) -> &PlaneMap {
        &self.planified
    }

    pub fn edge_paths(&self) -> &[EdgePath] {
        &self.edge_paths
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Class sizes `(black, white)`.
    pub fn class_sizes(&self) -> Option<(usize, usize)> {
        self.graph.class_sizes()
    }

    /// Map vertex of crossing `c`.
    pub fn false_vertex(&self, c: usize) -> VertexId {
        self.graph.vertex_count() + c
    }

    pub fn is_false_vertex(&self, v: VertexId) -> bool {
        v >= self.graph.vertex_count()
    }

    /// Crossing index per edge, if crossed.
    pub fn crossing_of_edges(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.graph.edge_count()];
        for (c, pair) in self.crossings.iter().enumerate() {
            for &e in pair {
                if e < out.len() {
                    out[e] = Some(c);
                }
            }
        }
        out
    }

    /// Graph edge carried by each map edge.
    pub fn map_edge_owners(&self) -> Vec<EdgeId> {
        let mut owner = vec![usize::MAX; self.planified.edge_count()];
        for (e, path) in self.edge_paths.iter().enumerate() {
            match *path {
                EdgePath::Direct(m) => owner[m] = e,
                EdgePath::Crossed([m0, m1]) => {
                    owner[m0] = e;
                    owner[m1] = e;
                }
            }
        }
        owner
    }

    /// Checks every drawing invariant and reports all violations found.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.graph.violations();
        let graph_ok = violations.is_empty();
        if graph_ok {
            violations.extend(crossing_violations(&self.graph, &self.crossings));
        }
        if violations.is_empty() {
            violations.extend(self.embedding_violations());
        }
        let classes = self.graph.class_sizes().map(|(b, w)| (b.min(w), b.max(w)));
        let crossing_ceiling = classes.and_then(|(x, _)| (x >= 2).then(|| 6 * x as i64 - 12));
        let exceeds = crossing_ceiling.is_some_and(|c| self.crossings.len() as i64 > c);
        ValidationReport {
            violations,
            classes,
            vertices: self.graph.vertex_count(),
            edges: self.graph.edge_count(),
            crossings: self.crossings.len(),
            crossing_ceiling,
            exceeds_minimal_bound: exceeds,
        }
    }

    fn embedding_violations(&self) -> Vec<Violation> {
        let map = &self.planified;
        if let Err(e) = map.check_structure() {
            return vec![Violation::Map(e)];
        }
        let n = self.graph.vertex_count();
        let expected = n + self.crossings.len();
        if map.vertex_count() != expected {
            return vec![Violation::VertexCountMismatch {
                expected,
                found: map.vertex_count(),
            }];
        }
        if self.edge_paths.len() != self.graph.edge_count() {
            return vec![Violation::PathMismatch(format!(
                "{} paths for {} edges",
                self.edge_paths.len(),
                self.graph.edge_count()
            ))];
        }
        let crossing_of = self.crossing_of_edges();
        let mut owner = vec![usize::MAX; map.edge_count()];
        let mut out = Vec::new();
        let joins = |m: EdgeId, a: VertexId, b: VertexId| {
            let [p, q] = map.endpoints(m);
            (p == a && q == b) || (p == b && q == a)
        };
        for (e, path) in self.edge_paths.iter().enumerate() {
            let [u, v] = self.graph.edge(e);
            let used: Vec<EdgeId> = match (*path, crossing_of[e]) {
                (EdgePath::Direct(m), None) if m < map.edge_count() => {
                    if !joins(m, u, v) {
                        out.push(Violation::PathMismatch(format!(
                            "map edge {m} does not join the ends of edge {e}"
                        )));
                    }
                    vec![m]
                }
                (EdgePath::Crossed([m0, m1]), Some(c)) if m0 < map.edge_count() && m1 < map.edge_count() => {
                    let z = n + c;
                    if !joins(m0, u, z) || !joins(m1, z, v) {
                        out.push(Violation::PathMismatch(format!(
                            "segments of edge {e} do not meet at crossing {c}"
                        )));
                    }
                    vec![m0, m1]
                }
                (EdgePath::Direct(_), Some(_)) => {
                    out.push(Violation::PathMismatch(format!(
                        "crossed edge {e} drawn as one segment"
                    )));
                    continue;
                }
                (EdgePath::Crossed(_), None) => {
                    out.push(Violation::PathMismatch(format!(
                        "uncrossed edge {e} drawn through a crossing"
                    )));
                    continue;
                }
                _ => {
                    out.push(Violation::PathMismatch(format!(
                        "edge {e} refers to a missing map edge"
                    )));
                    continue;
                }
            };
            for m in used {
                if owner[m] != usize::MAX {
                    out.push(Violation::PathMismatch(format!("map edge {m} used twice")));
                }
                owner[m] = e;
            }
        }
        if let Some(m) = owner.iter().position(|&o| o == usize::MAX) {
            out.push(Violation::PathMismatch(format!("map edge {m} realises no graph edge")));
        }
        if !out.is_empty() {
            return out;
        }
        for (c, &[e, f]) in self.crossings.iter().enumerate() {
            let z = n + c;
            let degree = map.degree(z);
            if degree != 4 {
                out.push(Violation::FalseVertexDegree { crossing: c, degree });
                continue;
            }
            let around: Vec<EdgeId> = map.rotation(z).into_iter().map(|d| owner[d / 2]).collect();
            let alternates = around[0] == around[2] && around[1] == around[3] && around[0] != around[1];
            let covers = (around[0] == e && around[1] == f) || (around[0] == f && around[1] == e);
            if !alternates || !covers {
                out.push(Violation::NonAlternatingRotation(c));
            }
        }
        if let Verdict::PositiveGenus { genus } = map.euler_check().verdict {
            out.push(Violation::NonPlanar(genus));
        }
        out
    }
}

/// Violations of the graph itself and of the crossing pairs, ignoring the
/// planified map.
pub(crate) fn combinatorial_violations(graph: &Graph, crossings: &[[EdgeId; 2]]) -> Vec<Violation> {
    let mut out = graph.violations();
    if out.is_empty() {
        out.extend(crossing_violations(graph, crossings));
    }
    out
}

fn crossing_violations(graph: &Graph, crossings: &[[EdgeId; 2]]) -> Vec<Violation> {
    let mut out = Vec::new();
    let m = graph.edge_count();
    let mut crossed = vec![false; m];
    for &[e, f] in crossings {
        if e >= m || f >= m {
            out.push(Violation::UnknownCrossingEdge(if e >= m { e } else { f }));
            continue;
        }
        if e == f {
            out.push(Violation::SelfCrossing(e));
            continue;
        }
        for g in [e, f] {
            if crossed[g] {
                out.push(Violation::DoublyCrossedEdge(g));
            }
            crossed[g] = true;
        }
        if graph.adjacent_edges(e, f) {
            out.push(Violation::AdjacentCrossing(e, f));
        }
    }
    out
}

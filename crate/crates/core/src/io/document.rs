//! Canonical JSON document for drawings.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "vertex_count": 4,
//!   "classes": { "black": [0, 2], "white": [1, 3] },
//!   "edges": [[0, 1], [2, 1], [2, 3], [0, 3]],
//!   "crossings": [],
//!   "rotations": [[[0, 0], [3, 0]], ...],
//!   "provenance": { "generator": "balanced", "parameters": { "x": 2 } }
//! }
//! ```
//!
//! `rotations` has one entry per planified vertex (true vertices first, then
//! one false vertex per crossing in order), listing the incident segments
//! counterclockwise as `[edge_index, segment]`, starting from the smallest
//! reference. An uncrossed edge has the single segment 0; a crossed edge
//! `[u, v]` has segment 0 from `u` to its false vertex and segment 1 from the
//! false vertex to `v`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::{combinatorial_violations, DrawingError, EdgePath, Graph, OnePlanarDrawing, Side};
use crate::plane_map::{DartId, PlaneMap, VertexId};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classes {
    pub black: Vec<VertexId>,
    pub white: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Provenance {
    pub generator: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrawingDocument {
    pub format_version: u32,
    pub vertex_count: usize,
    pub classes: Option<Classes>,
    pub edges: Vec<[VertexId; 2]>,
    pub crossings: Vec<[usize; 2]>,
    pub rotations: Vec<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u32),
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("document does not describe a valid drawing: {0}")]
    Invalid(#[from] DrawingError),
}

impl DrawingDocument {
    pub fn from_drawing(d: &OnePlanarDrawing, provenance: Option<Provenance>) -> Self {
        let g = d.graph();
        let classes = g.sides().map(|_| Classes {
            black: g.vertices_of(Side::Black),
            white: g.vertices_of(Side::White),
        });
        let map = d.planified();
        let mut segment_of = vec![[0usize; 2]; map.edge_count()];
        for (e, path) in d.edge_paths().iter().enumerate() {
            match *path {
                EdgePath::Direct(m) => segment_of[m] = [e, 0],
                EdgePath::Crossed([m0, m1]) => {
                    segment_of[m0] = [e, 0];
                    segment_of[m1] = [e, 1];
                }
            }
        }
        let rotations = (0..map.vertex_count())
            .map(|v| {
                let mut rot: Vec<[usize; 2]> = map.rotation(v).into_iter().map(|dart| segment_of[dart / 2]).collect();
                if let Some(start) = (0..rot.len()).min_by_key(|&i| rot[i]) {
                    rot.rotate_left(start);
                }
                rot
            })
            .collect();
        Self {
            format_version: FORMAT_VERSION,
            vertex_count: g.vertex_count(),
            classes,
            edges: g.edges().to_vec(),
            crossings: d.crossings().to_vec(),
            rotations,
            provenance,
        }
    }

    /// Rebuilds and certifies the drawing.
    pub fn to_drawing(&self) -> Result<OnePlanarDrawing, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::UnsupportedVersion(self.format_version));
        }
        let n = self.vertex_count;
        let malformed = |msg: String| DocumentError::Malformed(msg);
        let sides = match &self.classes {
            None => None,
            Some(c) => {
                let mut sides = vec![None; n];
                for (list, side) in [(&c.black, Side::Black), (&c.white, Side::White)] {
                    for &v in list {
                        if v >= n || sides[v].is_some() {
                            return Err(malformed(format!("class lists repeat or exceed vertex {v}")));
                        }
                        sides[v] = Some(side);
                    }
                }
                let sides: Option<Vec<Side>> = sides.into_iter().collect();
                Some(sides.ok_or_else(|| malformed("classes do not cover every vertex".into()))?)
            }
        };
        let graph = Graph::from_parts_unchecked(n, self.edges.clone(), sides);
        if let Some(v) = combinatorial_violations(&graph, &self.crossings).into_iter().next() {
            return Err(DrawingError::Invalid(v).into());
        }
        let mut crossing_of = vec![None; self.edges.len()];
        for (c, &[e, f]) in self.crossings.iter().enumerate() {
            for g in [e, f] {
                if g >= self.edges.len() {
                    return Err(malformed(format!("crossing {c} names missing edge {g}")));
                }
                if crossing_of[g].is_none() {
                    crossing_of[g] = Some(c);
                }
            }
        }
        let total = n + self.crossings.len();
        if self.rotations.len() != total {
            return Err(malformed(format!(
                "{} rotations for {} planified vertices",
                self.rotations.len(),
                total
            )));
        }
        // Map edges in graph-edge order, segments consecutive.
        let mut ends = Vec::new();
        let mut first_segment = Vec::with_capacity(self.edges.len());
        let mut paths = Vec::with_capacity(self.edges.len());
        for (e, &[u, v]) in self.edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(malformed(format!("edge {e} leaves the vertex range")));
            }
            first_segment.push(ends.len());
            match crossing_of[e] {
                None => {
                    paths.push(EdgePath::Direct(ends.len()));
                    ends.push([u, v]);
                }
                Some(c) => {
                    paths.push(EdgePath::Crossed([ends.len(), ends.len() + 1]));
                    ends.push([u, n + c]);
                    ends.push([n + c, v]);
                }
            }
        }
        let mut rotations: Vec<Vec<DartId>> = Vec::with_capacity(total);
        for (v, rot) in self.rotations.iter().enumerate() {
            let mut darts = Vec::with_capacity(rot.len());
            for &[e, s] in rot {
                let segments = match paths.get(e) {
                    Some(EdgePath::Direct(_)) => 1,
                    Some(EdgePath::Crossed(_)) => 2,
                    None => return Err(malformed(format!("rotation of vertex {v} names missing edge {e}"))),
                };
                if s >= segments {
                    return Err(malformed(format!("edge {e} has no segment {s}")));
                }
                let m = first_segment[e] + s;
                let dart = match ends[m] {
                    [a, _] if a == v => 2 * m,
                    [_, b] if b == v => 2 * m + 1,
                    _ => return Err(malformed(format!("segment [{e}, {s}] does not touch vertex {v}"))),
                };
                darts.push(dart);
            }
            rotations.push(darts);
        }
        let map = PlaneMap::from_rotations(total, &ends, &rotations).map_err(DrawingError::from)?;
        Ok(OnePlanarDrawing::assemble(graph, self.crossings.clone(), map, paths)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialise")
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: DrawingDocument = serde_json::from_str(text)?;
        if doc.format_version != FORMAT_VERSION {
            return Err(DocumentError::UnsupportedVersion(doc.format_version));
        }
        Ok(doc)
    }
}

/// An abstract graph: the `vertex_count`, `classes` and `edges` fields of a
/// drawing document. Drawing documents therefore also parse as graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertex_count: usize,
    #[serde(default)]
    pub classes: Option<Classes>,
    pub edges: Vec<[VertexId; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            vertex_count: g.vertex_count(),
            classes: g.sides().map(|_| Classes {
                black: g.vertices_of(Side::Black),
                white: g.vertices_of(Side::White),
            }),
            edges: g.edges().to_vec(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, DocumentError> {
        let n = self.vertex_count;
        let graph = match &self.classes {
            None => Graph::new(n, self.edges.clone()),
            Some(c) => {
                let mut sides = vec![None; n];
                for (list, side) in [(&c.black, Side::Black), (&c.white, Side::White)] {
                    for &v in list {
                        if v >= n || sides[v].is_some() {
                            return Err(DocumentError::Malformed(format!(
                                "class lists repeat or exceed vertex {v}"
                            )));
                        }
                        sides[v] = Some(side);
                    }
                }
                let sides: Option<Vec<Side>> = sides.into_iter().collect();
                let sides =
                    sides.ok_or_else(|| DocumentError::Malformed("classes do not cover every vertex".into()))?;
                Graph::bipartite(sides, self.edges.clone())
            }
        };
        graph.map_err(|v| DocumentError::Invalid(v.into()))
    }
}

pub fn load_graph(text: &str) -> Result<Graph, DocumentError> {
    serde_json::from_str::<GraphDocument>(text)?.to_graph()
}

pub fn save(d: &OnePlanarDrawing, provenance: Option<Provenance>) -> String {
    DrawingDocument::from_drawing(d, provenance).to_json()
}

pub fn load(text: &str) -> Result<OnePlanarDrawing, DocumentError> {
    DrawingDocument::from_json(text)?.to_drawing()
}

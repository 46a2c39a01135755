//! Extremal bipartite 1-planar graphs: certified drawings, constructions,
//! bounds, and a brute-force 1-planarity oracle.

// Vertex-indexed parallel arrays read more clearly with index loops.
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod constructions;
pub mod drawing;
pub mod io;
pub mod oracle;
pub mod plane_map;

pub use drawing::{DrawingError, EdgePath, Graph, OnePlanarDrawing, Side, ValidationReport, Violation};
pub use plane_map::{EulerReport, Face, MapError, PlaneMap, Verdict};

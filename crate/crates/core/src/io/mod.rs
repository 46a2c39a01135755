//! Serialisation and export.

pub mod document;
pub mod dot;
pub mod layout;
pub mod svg;

pub use document::{load, load_graph, save, DocumentError, DrawingDocument, GraphDocument, Provenance};
pub use dot::export_dot;
pub use svg::export_svg;

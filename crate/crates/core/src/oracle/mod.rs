//! Brute-force 1-planarity oracle for small graphs.
//!
//! Candidate crossing sets are enumerated edge by edge. Each is checked by
//! planarising with the wheel gadget (false vertex plus a surrounding
//! 4-cycle, which forces the crossing edges to alternate) and running an
//! embedding-producing planarity test.

mod gadget;
pub mod planarity;
mod search;

use thiserror::Error;

use crate::plane_map::EdgeId;

pub use gadget::{gadget_planarize, realize, CrossingAssignment, GadgetEdge, GadgetGraph};
pub use planarity::{is_planar, planarity_test, Planarity};
pub use search::{
    default_budget, is_one_planar, is_one_planar_with, min_crossings, Checkpoint, MinCrossings, OracleVerdict,
    SearchOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("edge {0} paired with itself")]
    SelfPair(EdgeId),
    #[error("edges {0} and {1} share an endpoint")]
    AdjacentPair(EdgeId, EdgeId),
    #[error("edge {0} appears in two pairs")]
    EdgeInTwoPairs(EdgeId),
}

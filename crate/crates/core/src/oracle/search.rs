use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::drawing::{Graph, OnePlanarDrawing};
use crate::plane_map::{EdgeId, VertexId};

use super::gadget::{realize, CrossingAssignment};
use super::planarity::is_planar;

/// Resumable progress of an interrupted search.
///
/// Levels below `level` are fully refuted. At `level`, the first
/// `completed` options for the lowest-index edge are refuted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub vertex_count: usize,
    pub edges: Vec<[VertexId; 2]>,
    pub budget: usize,
    pub level: usize,
    pub completed: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub timeout: Option<Duration>,
    pub resume: Option<Checkpoint>,
}

#[derive(Debug, Clone)]
pub enum OracleVerdict {
    /// A certified drawing with the fewest crossings possible within budget.
    Yes(OnePlanarDrawing),
    /// Exhaustively refuted for every assignment of at most `budget` pairs.
    No,
    /// Search interrupted; resume from the checkpoint.
    Unknown(Checkpoint),
}

impl OracleVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, OracleVerdict::Yes(_))
    }
}

// Short-lived result value; boxing the drawing would only add noise.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone)]
pub enum MinCrossings {
    Exactly(usize, OnePlanarDrawing),
    MoreThan(usize),
}

impl MinCrossings {
    pub fn value(&self) -> Option<usize> {
        match self {
            MinCrossings::Exactly(k, _) => Some(*k),
            MinCrossings::MoreThan(_) => None,
        }
    }
}

/// Largest budget worth trying: `⌊E/2⌋`, further capped by `6x - 12` for
/// bipartite graphs with smaller class `x ≥ 2`.
pub fn default_budget(graph: &Graph) -> usize {
    let half = graph.edge_count() / 2;
    match graph.smaller_class() {
        Some(x) if x >= 2 => half.min(6 * x - 12),
        _ => half,
    }
}

pub fn is_one_planar(graph: &Graph, budget: usize) -> OracleVerdict {
    is_one_planar_with(graph, budget, &SearchOptions::default())
}

/// Decides whether `graph` has a 1-planar drawing with at most `budget`
/// crossings, trying 0, 1, .. pairs in turn.
pub fn is_one_planar_with(graph: &Graph, budget: usize, options: &SearchOptions) -> OracleVerdict {
    let mut search = Search::new(graph, options.timeout);
    let (start_level, mut skip) = match &options.resume {
        Some(cp) if cp.edges == graph.edges() && cp.vertex_count == graph.vertex_count() => (cp.level, cp.completed),
        _ => (0, 0),
    };
    for level in start_level..=budget.min(graph.edge_count() / 2) {
        match search.level(level, skip) {
            Outcome::Found(pairs) => {
                let assignment = CrossingAssignment::new(graph, &pairs).expect("search keeps assignments valid");
                let drawing = realize(graph, &assignment)
                    .expect("planar gadget graphs realise certified drawings")
                    .expect("accepted assignment has a planar gadget graph");
                return OracleVerdict::Yes(drawing);
            }
            Outcome::Exhausted => skip = 0,
            Outcome::Interrupted(completed) => {
                return OracleVerdict::Unknown(Checkpoint {
                    vertex_count: graph.vertex_count(),
                    edges: graph.edges().to_vec(),
                    budget,
                    level,
                    completed,
                })
            }
        }
    }
    OracleVerdict::No
}

pub fn min_crossings(graph: &Graph, cap: usize) -> MinCrossings {
    match is_one_planar(graph, cap) {
        OracleVerdict::Yes(d) => MinCrossings::Exactly(d.crossing_count(), d),
        _ => MinCrossings::MoreThan(cap),
    }
}

enum Outcome {
    Found(Vec<[EdgeId; 2]>),
    Exhausted,
    Interrupted(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Undecided,
    Uncrossed,
    Paired,
}

struct Search<'g> {
    graph: &'g Graph,
    status: Vec<Status>,
    pairs: Vec<[EdgeId; 2]>,
    deadline: Option<Instant>,
    nodes: u64,
    interrupted: bool,
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph, timeout: Option<Duration>) -> Self {
        Self {
            graph,
            status: vec![Status::Undecided; graph.edge_count()],
            pairs: Vec::new(),
            deadline: timeout.map(|t| Instant::now() + t),
            nodes: 0,
            interrupted: false,
        }
    }

    /// Searches assignments with exactly `k` pairs; the first `skip` options
    /// of the lowest edge are assumed refuted.
    fn level(&mut self, k: usize, skip: usize) -> Outcome {
        let m = self.graph.edge_count();
        if m == 0 {
            return if k == 0 {
                Outcome::Found(Vec::new())
            } else {
                Outcome::Exhausted
            };
        }
        let options = self.options(0);
        for (idx, opt) in options.into_iter().enumerate() {
            if idx < skip {
                continue;
            }
            if self.apply_and_recurse(0, opt, k) {
                return Outcome::Found(self.pairs.clone());
            }
            if self.interrupted {
                return Outcome::Interrupted(idx);
            }
        }
        Outcome::Exhausted
    }

    /// Choices for edge `i`: `None` leaves it uncrossed, `Some(j)` pairs it
    /// with a later undecided, non-adjacent edge.
    fn options(&self, i: EdgeId) -> Vec<Option<EdgeId>> {
        let mut out = vec![None];
        for j in i + 1..self.graph.edge_count() {
            if self.status[j] == Status::Undecided && !self.graph.adjacent_edges(i, j) {
                out.push(Some(j));
            }
        }
        out
    }

    fn apply_and_recurse(&mut self, i: EdgeId, opt: Option<EdgeId>, remaining: usize) -> bool {
        let remaining = match opt {
            None => {
                self.status[i] = Status::Uncrossed;
                remaining
            }
            Some(j) => {
                if remaining == 0 {
                    return false;
                }
                self.status[i] = Status::Paired;
                self.status[j] = Status::Paired;
                self.pairs.push([i, j]);
                remaining - 1
            }
        };
        let found = self.feasible(i, remaining) && self.partial_planar() && self.descend(i + 1, remaining);
        if !found {
            self.status[i] = Status::Undecided;
            if let Some(j) = opt {
                self.status[j] = Status::Undecided;
                self.pairs.pop();
            }
        }
        found
    }

    fn feasible(&self, i: EdgeId, remaining: usize) -> bool {
        let open = self.status[i + 1..].iter().filter(|&&s| s == Status::Undecided).count();
        2 * remaining <= open
    }

    fn descend(&mut self, from: EdgeId, remaining: usize) -> bool {
        let m = self.graph.edge_count();
        let Some(i) = (from..m).find(|&e| self.status[e] == Status::Undecided) else {
            return remaining == 0;
        };
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.interrupted = true;
                }
            }
        }
        if self.interrupted {
            return false;
        }
        for opt in self.options(i) {
            if self.apply_and_recurse(i, opt, remaining) {
                return true;
            }
            if self.interrupted {
                return false;
            }
        }
        false
    }

    /// Planarity of the gadget graph on everything decided so far. The
    /// partial graph is a subgraph of the gadget graph of every completion,
    /// so a non-planar partial graph refutes the whole subtree.
    fn partial_planar(&self) -> bool {
        let n = self.graph.vertex_count();
        let mut edges = Vec::with_capacity(self.graph.edge_count() + 6 * self.pairs.len());
        for (e, &s) in self.status.iter().enumerate() {
            if s == Status::Uncrossed {
                edges.push(self.graph.edge(e));
            }
        }
        for (c, &[e, f]) in self.pairs.iter().enumerate() {
            let z = n + c;
            let [a, b] = self.graph.edge(e);
            let [p, q] = self.graph.edge(f);
            edges.extend([[a, z], [z, b], [p, z], [z, q], [a, p], [p, b], [b, q], [q, a]]);
        }
        is_planar(n + self.pairs.len(), &edges)
    }
}

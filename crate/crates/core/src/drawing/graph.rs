use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::plane_map::{EdgeId, VertexId};

use super::Violation;

/// Colour class of a vertex. Black is the smaller class by convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Black,
    White,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Black => Side::White,
            Side::White => Side::Black,
        }
    }
}

/// A simple graph, optionally carrying a bipartition.
///
/// When the bipartition is present every edge is stored as
/// `[black, white]`. Oracle inputs such as K5 are not bipartite and carry no
/// colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<[VertexId; 2]>,
    sides: Option<Vec<Side>>,
}

impl Graph {
    /// An uncoloured simple graph.
    pub fn new(vertex_count: usize, edges: Vec<[VertexId; 2]>) -> Result<Self, Violation> {
        let g = Self {
            vertex_count,
            edges,
            sides: None,
        };
        g.first_violation()?;
        Ok(g)
    }

    /// A bipartite graph; edges are reoriented black-first.
    pub fn bipartite(sides: Vec<Side>, edges: Vec<[VertexId; 2]>) -> Result<Self, Violation> {
        let mut g = Self::from_parts_unchecked(sides.len(), edges, Some(sides));
        g.first_violation()?;
        g.orient_black_first();
        Ok(g)
    }

    /// Skips every check; `validate` reports what is wrong later.
    pub fn from_parts_unchecked(vertex_count: usize, edges: Vec<[VertexId; 2]>, sides: Option<Vec<Side>>) -> Self {
        Self {
            vertex_count,
            edges,
            sides,
        }
    }

    pub fn complete_bipartite(black: usize, white: usize) -> Self {
        let sides = (0..black + white)
            .map(|v| if v < black { Side::Black } else { Side::White })
            .collect();
        let edges = (0..black)
            .flat_map(|b| (black..black + white).map(move |w| [b, w]))
            .collect();
        Self::from_parts_unchecked(black + white, edges, Some(sides))
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect();
        Self::from_parts_unchecked(n, edges, None)
    }

    /// The cycle 0-1-..-(n-1)-0, two-coloured when `n` is even.
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| [i, (i + 1) % n]).collect();
        let sides = n.is_multiple_of(2).then(|| {
            (0..n)
                .map(|i| if i % 2 == 0 { Side::Black } else { Side::White })
                .collect()
        });
        let mut g = Self::from_parts_unchecked(n, edges, sides);
        g.orient_black_first();
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e]
    }

    pub fn sides(&self) -> Option<&[Side]> {
        self.sides.as_deref()
    }

    pub fn side(&self, v: VertexId) -> Option<Side> {
        self.sides.as_ref().map(|s| s[v])
    }

    pub fn is_bipartite_coloured(&self) -> bool {
        self.sides.is_some()
    }

    pub fn vertices_of(&self, side: Side) -> Vec<VertexId> {
        match &self.sides {
            Some(s) => (0..self.vertex_count).filter(|&v| s[v] == side).collect(),
            None => Vec::new(),
        }
    }

    /// Class sizes `(black, white)` when coloured.
    pub fn class_sizes(&self) -> Option<(usize, usize)> {
        self.sides.as_ref().map(|s| {
            let black = s.iter().filter(|&&c| c == Side::Black).count();
            (black, s.len() - black)
        })
    }

    /// Size of the smaller colour class, computing a 2-colouring by search
    /// when none is attached. `None` for non-bipartite graphs.
    pub fn smaller_class(&self) -> Option<usize> {
        if let Some((x, y)) = self.class_sizes() {
            return Some(x.min(y));
        }
        let mut colour = vec![None; self.vertex_count];
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &[a, b] in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut counts = [0usize; 2];
        for s in 0..self.vertex_count {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(0usize);
            counts[0] += 1;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for &w in &adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(1 - c);
                            counts[1 - c] += 1;
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(counts[0].min(counts[1]))
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges
            .iter()
            .any(|&[u, v]| (u == a && v == b) || (u == b && v == a))
    }

    pub fn adjacent_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let [a, b] = self.edges[e];
        let [c, d] = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// The same graph without the listed edges.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let drop: HashSet<EdgeId> = removed.iter().copied().collect();
        let edges = (0..self.edges.len())
            .filter(|e| !drop.contains(e))
            .map(|e| self.edges[e])
            .collect();
        Self::from_parts_unchecked(self.vertex_count, edges, self.sides.clone())
    }

    pub(crate) fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if let Some(s) = &self.sides {
            if s.len() != self.vertex_count {
                out.push(Violation::ColouringSize);
                return out;
            }
        }
        let mut seen = HashSet::new();
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if a >= self.vertex_count || b >= self.vertex_count {
                out.push(Violation::EdgeOutOfRange(e));
                continue;
            }
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                out.push(Violation::NonSimple(e));
            }
            if let Some(s) = &self.sides {
                if s[a] == s[b] {
                    out.push(Violation::NonBipartite(e));
                }
            }
        }
        out
    }

    fn first_violation(&self) -> Result<(), Violation> {
        match self.violations().into_iter().next() {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    fn orient_black_first(&mut self) {
        if let Some(s) = &self.sides {
            for edge in &mut self.edges {
                if s[edge[0]] == Side::White && s[edge[1]] == Side::Black {
                    edge.swap(0, 1);
                }
            }
        }
    }
}

//! Balanced graphs with `x = y` and their degree-2 augmentations.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::drawing::{Graph, OnePlanarDrawing, Side};
use crate::oracle::{realize, CrossingAssignment};
use crate::plane_map::VertexId;

use super::templates::{template, TemplateName};
use super::{require, ConstructionError};

/// Labelled edge list with crossing pairs given by endpoints.
#[derive(Default)]
struct Layout {
    edges: Vec<[VertexId; 2]>,
    pairs: Vec<[[VertexId; 2]; 2]>,
}

impl Layout {
    fn index(&self, e: [VertexId; 2]) -> usize {
        self.edges
            .iter()
            .position(|&f| f == e)
            .unwrap_or_else(|| panic!("edge {e:?} missing from layout"))
    }

    fn remove(&mut self, e: [VertexId; 2]) {
        let i = self.index(e);
        self.edges.remove(i);
        self.pairs.retain(|p| !p.contains(&e));
    }

    fn realize(&self, sides: Vec<Side>) -> Result<OnePlanarDrawing, ConstructionError> {
        let graph = Graph::bipartite(sides, self.edges.clone()).map_err(crate::drawing::DrawingError::from)?;
        let pairs: Vec<[usize; 2]> = self
            .pairs
            .iter()
            .map(|&[e, f]| [self.index(e), self.index(f)])
            .collect();
        let assignment =
            CrossingAssignment::new(&graph, &pairs).expect("balanced crossing pairs are disjoint and non-adjacent");
        Ok(realize(&graph, &assignment)?.expect("balanced layout is realisable"))
    }
}

/// Vertex ids for `k` nested 4-cycles, blacks first.
struct Rings {
    k: usize,
    white_base: usize,
}

impl Rings {
    /// `x_{l,i}`, 1-based as in the usual ring notation.
    fn x(&self, l: usize, i: usize) -> VertexId {
        debug_assert!((1..=2).contains(&l) && (1..=self.k).contains(&i));
        2 * (i - 1) + (l - 1)
    }

    /// `y_{j,i}`.
    fn y(&self, j: usize, i: usize) -> VertexId {
        debug_assert!((1..=2).contains(&j) && (1..=self.k).contains(&i));
        self.white_base + 2 * (i - 1) + (j - 1)
    }

    /// Ring `C_i = x_{1,i} y_{1,i} x_{2,i} y_{2,i}`, plus between consecutive
    /// rings the edges `x_{l,i} y_{j,i+1}` crossing `x_{l,i+1} y_{j,i}`.
    fn layout(&self) -> Layout {
        let mut out = Layout::default();
        for i in 1..=self.k {
            for l in 1..=2 {
                for j in 1..=2 {
                    out.edges.push([self.x(l, i), self.y(j, i)]);
                }
            }
        }
        for i in 1..self.k {
            for l in 1..=2 {
                for j in 1..=2 {
                    let e = [self.x(l, i), self.y(j, i + 1)];
                    let f = [self.x(l, i + 1), self.y(j, i)];
                    out.edges.push(e);
                    out.edges.push(f);
                    out.pairs.push([e, f]);
                }
            }
        }
        out
    }
}

fn sides(black: usize, white: usize) -> Vec<Side> {
    let mut s = vec![Side::Black; black];
    s.resize(black + white, Side::White);
    s
}

fn even(k: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    let rings = Rings { k, white_base: 2 * k };
    rings.layout().realize(sides(2 * k, 2 * k))
}

/// `x = 2k + 1` with `k >= 3`: the even layout on `2k` is rewired along the
/// `x_{1,*}, y_{1,*}` side and two vertices `p` (black) and `q` (white) are
/// added. The fourth neighbour of `q` is `x_{2,k}`.
fn odd(k: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    debug_assert!(k >= 3);
    let p = 2 * k;
    let rings = Rings {
        k,
        white_base: 2 * k + 1,
    };
    let q = 4 * k + 1;
    let (x, y) = (|l, i| rings.x(l, i), |j, i| rings.y(j, i));
    let mut out = rings.layout();
    for i in 2..=k {
        out.remove([x(1, i), y(1, i - 1)]);
    }
    for i in 2..k {
        out.remove([x(1, i), y(1, i)]);
    }
    for i in 1..=k - 2 {
        out.edges.push([x(1, i), y(1, i + 2)]);
    }
    for i in 1..=k - 3 {
        out.edges.push([x(1, i), y(1, i + 3)]);
    }
    for w in [y(1, 1), y(1, 2), y(1, 3), y(2, 1)] {
        out.edges.push([p, w]);
    }
    for b in [x(1, k - 2), x(1, k - 1), x(1, k), x(2, k)] {
        out.edges.push([b, q]);
    }
    out.pairs.extend([
        [[x(1, 1), y(1, 1)], [p, y(2, 1)]],
        [[x(1, k), y(1, k)], [x(2, k), q]],
        [[x(1, 1), y(1, 2)], [p, y(1, 3)]],
        [[x(1, k - 1), y(1, k)], [x(1, k - 2), q]],
    ]);
    for m in 2..=k - 2 {
        out.pairs.push([[x(1, m), y(1, m + 1)], [x(1, m - 1), y(1, m + 2)]]);
    }
    out.realize(sides(2 * k + 1, 2 * k + 1))
}

/// Balanced graph with classes `(x, x)`: `6x - 8` edges, except `x = 3`
/// which has 9 (`K_{3,3}`).
///
/// Results are memoised: the augmented families rebuild the same base for
/// every `y`, and realisation dominates their cost.
pub fn balanced(x: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    require(x >= 2, || format!("balanced needs x >= 2, got {x}"))?;
    static CACHE: OnceLock<Mutex<HashMap<usize, OnePlanarDrawing>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().expect("cache lock").get(&x) {
        return Ok(d.clone());
    }
    let d = match x {
        3 | 5 => template(TemplateName::BalancedSmall(x))
            .expect("stored")
            .fragment
            .clone(),
        _ if x.is_multiple_of(2) => even(x / 2)?,
        _ => odd(x / 2)?,
    };
    cache.lock().expect("cache lock").insert(x, d.clone());
    Ok(d)
}

/// `balanced(x)` plus `y - x` white vertices of degree 2:
/// `3(x + y) - 8 - (y - x)` edges.
pub fn near_balanced(x: usize, y: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    require(x >= 4 && y >= x, || {
        format!("near-balanced needs 4 <= x <= y, got ({x}, {y})")
    })?;
    Ok(balanced(x)?.augment_degree2(y - x, Side::White, None)?)
}

//! Left-right planarity test with embedding.
//!
//! An iterative implementation of the Brandes formulation of the
//! de Fraysseix–Rosenstiehl left-right criterion. Parallel edges are handled
//! by subdividing every repeat with a dummy vertex; the embedding is mapped
//! back onto the original darts afterwards. Every planar verdict is audited
//! with [`PlaneMap::euler_check`] before it is returned.

use std::collections::HashSet;

use crate::plane_map::{DartId, PlaneMap, VertexId};

/// Outcome of [`planarity_test`].
#[derive(Debug, Clone)]
pub enum Planarity {
    /// A planar rotation system on the input darts: edge `e` owns darts
    /// `2e` (at `edges[e][0]`) and `2e + 1`.
    Planar(PlaneMap),
    NonPlanar,
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Tests a loopless multigraph for planarity.
///
/// # Panics
///
/// Panics on loops or out-of-range endpoints.
pub fn planarity_test(vertex_count: usize, edges: &[[VertexId; 2]]) -> Planarity {
    let mut simple_ends: Vec<[VertexId; 2]> = Vec::with_capacity(edges.len());
    // For each input edge: simple edge carrying dart 2e, and the one carrying 2e+1.
    let mut carriers: Vec<[usize; 2]> = Vec::with_capacity(edges.len());
    let mut seen = HashSet::new();
    let mut n = vertex_count;
    for &[a, b] in edges {
        assert!(a != b, "loop at vertex {a}");
        assert!(a < vertex_count && b < vertex_count, "endpoint out of range");
        if seen.insert((a.min(b), a.max(b))) {
            carriers.push([simple_ends.len(); 2]);
            simple_ends.push([a, b]);
        } else {
            let d = n;
            n += 1;
            carriers.push([simple_ends.len(), simple_ends.len() + 1]);
            simple_ends.push([a, d]);
            simple_ends.push([d, b]);
        }
    }
    let Some(rotations) = Lr::new(n, &simple_ends).run() else {
        return Planarity::NonPlanar;
    };
    // Simple half-edge h = 2s + dir leaves simple_ends[s][dir].
    let mut to_input = vec![usize::MAX; 2 * simple_ends.len()];
    for (e, &[s0, s1]) in carriers.iter().enumerate() {
        to_input[2 * s0] = 2 * e;
        to_input[2 * s1 + 1] = 2 * e + 1;
    }
    let lifted: Vec<Vec<DartId>> = rotations[..vertex_count]
        .iter()
        .map(|rot| rot.iter().map(|&h| to_input[h]).collect())
        .collect();
    let map = PlaneMap::from_rotations(vertex_count, edges, &lifted).expect("embedding covers every dart");
    let report = map.euler_check();
    assert!(
        report.is_planar(),
        "planarity witness failed its Euler audit: {report:?}"
    );
    Planarity::Planar(map)
}

/// Convenience wrapper.
pub fn is_planar(vertex_count: usize, edges: &[[VertexId; 2]]) -> bool {
    planarity_test(vertex_count, edges).is_planar()
}

type Oe = usize;

#[derive(Debug, Clone, Copy, Default)]
struct Interval {
    low: Option<Oe>,
    high: Option<Oe>,
}

impl Interval {
    fn single(e: Oe) -> Self {
        Self {
            low: Some(e),
            high: Some(e),
        }
    }

    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    left: Interval,
    right: Interval,
    uid: usize,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'a> {
    n: usize,
    ends: &'a [[VertexId; 2]],
    adj: Vec<Vec<(VertexId, usize)>>,
    roots: Vec<VertexId>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<Oe>>,
    // oriented edges
    oriented: Vec<Option<Oe>>,
    src: Vec<VertexId>,
    dst: Vec<VertexId>,
    simple: Vec<usize>,
    out: Vec<Vec<Oe>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    refs: Vec<Option<Oe>>,
    side: Vec<i64>,
    stack_bottom: Vec<Option<usize>>,
    lowpt_edge: Vec<Option<Oe>>,
    stack: Vec<ConflictPair>,
    next_uid: usize,
}

impl<'a> Lr<'a> {
    fn new(n: usize, ends: &'a [[VertexId; 2]]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (s, &[a, b]) in ends.iter().enumerate() {
            adj[a].push((b, s));
            adj[b].push((a, s));
        }
        Self {
            n,
            ends,
            adj,
            roots: Vec::new(),
            height: vec![None; n],
            parent_edge: vec![None; n],
            oriented: vec![None; ends.len()],
            src: Vec::with_capacity(ends.len()),
            dst: Vec::with_capacity(ends.len()),
            simple: Vec::with_capacity(ends.len()),
            out: vec![Vec::new(); n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting: Vec::new(),
            refs: Vec::new(),
            side: Vec::new(),
            stack_bottom: Vec::new(),
            lowpt_edge: Vec::new(),
            stack: Vec::new(),
            next_uid: 0,
        }
    }

    /// Rotation (ccw list of simple half-edges) per vertex, or `None`.
    fn run(mut self) -> Option<Vec<Vec<usize>>> {
        if self.n > 2 && self.ends.len() > 3 * self.n - 6 {
            return None;
        }
        for v in 0..self.n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.dfs_orientation(v);
            }
        }
        let m = self.src.len();
        self.refs = vec![None; m];
        self.side = vec![1; m];
        self.stack_bottom = vec![None; m];
        self.lowpt_edge = vec![None; m];
        let mut ordered = self.sorted_out();
        for i in 0..self.roots.len() {
            if !self.dfs_testing(self.roots[i], &ordered) {
                return None;
            }
        }
        for e in 0..m {
            let s = self.sign(e);
            self.nesting[e] *= s;
        }
        ordered = self.sorted_out();
        let mut emb = Embedding::new(self.n, self.ends.len());
        for v in 0..self.n {
            let mut previous = None;
            for &e in &ordered[v] {
                let h = self.half(e, v);
                match previous {
                    None => emb.add_first_ever(v, h),
                    Some(p) => emb.add_ccw_of(v, h, p),
                }
                previous = Some(h);
            }
        }
        let roots = std::mem::take(&mut self.roots);
        for r in roots {
            self.dfs_embedding(r, &ordered, &mut emb);
        }
        Some(emb.rotations())
    }

    fn sorted_out(&self) -> Vec<Vec<Oe>> {
        self.out
            .iter()
            .map(|list| {
                let mut l = list.clone();
                l.sort_by_key(|&e| self.nesting[e]);
                l
            })
            .collect()
    }

    /// Half-edge of oriented edge `e` leaving vertex `from`.
    fn half(&self, e: Oe, from: VertexId) -> usize {
        let s = self.simple[e];
        if self.ends[s][0] == from {
            2 * s
        } else {
            2 * s + 1
        }
    }

    fn orient(&mut self, v: VertexId, w: VertexId, s: usize) -> Oe {
        let e = self.src.len();
        self.src.push(v);
        self.dst.push(w);
        self.simple.push(s);
        self.oriented[s] = Some(e);
        self.out[v].push(e);
        let h = self.height[v].expect("visited");
        self.lowpt.push(h);
        self.lowpt2.push(h);
        self.nesting.push(0);
        e
    }

    fn dfs_orientation(&mut self, root: VertexId) {
        let mut ind = vec![0usize; self.n];
        let mut skip_init = vec![false; self.ends.len()];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let parent = self.parent_edge[v];
            while ind[v] < self.adj[v].len() {
                let (w, s) = self.adj[v][ind[v]];
                let vw;
                match self.oriented[s] {
                    Some(e) if self.src[e] == v && skip_init[e] => vw = e,
                    Some(_) => {
                        ind[v] += 1;
                        continue;
                    }
                    None => {
                        vw = self.orient(v, w, s);
                        match self.height[w] {
                            None => {
                                self.parent_edge[w] = Some(vw);
                                self.height[w] = Some(self.height[v].unwrap() + 1);
                                dfs.push(v);
                                dfs.push(w);
                                skip_init[vw] = true;
                                break;
                            }
                            Some(hw) => self.lowpt[vw] = hw,
                        }
                    }
                }
                self.nesting[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v].unwrap() {
                    self.nesting[vw] += 1;
                }
                if let Some(e) = parent {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn top_uid(&self) -> Option<usize> {
        self.stack.last().map(|p| p.uid)
    }

    fn new_pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        self.next_uid += 1;
        ConflictPair {
            left,
            right,
            uid: self.next_uid,
        }
    }

    fn dfs_testing(&mut self, root: VertexId, ordered: &[Vec<Oe>]) -> bool {
        let mut ind = vec![0usize; self.n];
        let mut skip_init = vec![false; self.src.len()];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let parent = self.parent_edge[v];
            let mut skip_final = false;
            while ind[v] < ordered[v].len() {
                let ei = ordered[v][ind[v]];
                let w = self.dst[ei];
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.top_uid();
                    if Some(ei) == self.parent_edge[w] {
                        dfs.push(v);
                        dfs.push(w);
                        skip_init[ei] = true;
                        skip_final = true;
                        break;
                    }
                    self.lowpt_edge[ei] = Some(ei);
                    let pair = self.new_pair(Interval::default(), Interval::single(ei));
                    self.stack.push(pair);
                }
                if self.lowpt[ei] < self.height[v].unwrap() {
                    let e = parent.expect("return edges imply a parent");
                    if ei == ordered[v][0] {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !skip_final {
                if let Some(e) = parent {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: Oe) -> bool {
        !i.empty() && self.lowpt[i.high.unwrap()] > self.lowpt[b]
    }

    fn set_ref(&mut self, at: Option<Oe>, value: Option<Oe>) {
        if let Some(a) = at {
            self.refs[a] = value;
        }
    }

    fn add_constraints(&mut self, ei: Oe, e: Oe) -> bool {
        let mut p = self.new_pair(Interval::default(), Interval::default());
        loop {
            let mut q = self.stack.pop().expect("constraint stack underflow");
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            if self.lowpt[q.right.low.unwrap()] > self.lowpt[e] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.set_ref(q.right.low, self.lowpt_edge[e]);
            }
            if self.top_uid() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.stack.push(p);
        }
        true
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.empty() {
            return self.lowpt[p.right.low.unwrap()];
        }
        if p.right.empty() {
            return self.lowpt[p.left.low.unwrap()];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn remove_back_edges(&mut self, e: Oe) {
        let u = self.src[e];
        let hu = self.height[u].unwrap();
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = self.stack.last().expect("return edge keeps a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            let pick = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
            self.refs[e] = pick;
        }
    }

    fn sign(&mut self, e: Oe) -> i64 {
        let mut dfs = vec![e];
        let mut old_ref: Vec<(Oe, Option<Oe>)> = Vec::new();
        while let Some(f) = dfs.pop() {
            if let Some(r) = self.refs[f] {
                dfs.push(f);
                dfs.push(r);
                old_ref.push((f, Some(r)));
                self.refs[f] = None;
            } else {
                let prior = old_ref.iter().rev().find(|&&(g, _)| g == f).and_then(|&(_, r)| r);
                if let Some(r) = prior {
                    self.side[f] *= self.side[r];
                }
            }
        }
        self.side[e]
    }

    fn dfs_embedding(&mut self, root: VertexId, ordered: &[Vec<Oe>], emb: &mut Embedding) {
        let mut ind = vec![0usize; self.n];
        let mut left_ref = vec![usize::MAX; self.n];
        let mut right_ref = vec![usize::MAX; self.n];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            while ind[v] < ordered[v].len() {
                let ei = ordered[v][ind[v]];
                ind[v] += 1;
                let w = self.dst[ei];
                let wv = self.half(ei, w);
                if Some(ei) == self.parent_edge[w] {
                    emb.add_first(w, wv);
                    left_ref[v] = self.half(ei, v);
                    right_ref[v] = self.half(ei, v);
                    dfs.push(v);
                    dfs.push(w);
                    break;
                } else if self.side[ei] == 1 {
                    emb.add_ccw_of(w, wv, right_ref[w]);
                } else {
                    emb.add_cw_of(w, wv, left_ref[w]);
                    left_ref[w] = wv;
                }
            }
        }
    }
}

/// Cyclic half-edge lists with a tracked leftmost entry per vertex.
struct Embedding {
    cw: Vec<usize>,
    ccw: Vec<usize>,
    leftmost: Vec<Option<usize>>,
}

impl Embedding {
    fn new(n: usize, simple_edges: usize) -> Self {
        Self {
            cw: vec![usize::MAX; 2 * simple_edges],
            ccw: vec![usize::MAX; 2 * simple_edges],
            leftmost: vec![None; n],
        }
    }

    fn add_first_ever(&mut self, v: VertexId, h: usize) {
        debug_assert!(self.leftmost[v].is_none());
        self.cw[h] = h;
        self.ccw[h] = h;
        self.leftmost[v] = Some(h);
    }

    /// Inserts `h` immediately counterclockwise of `reference`; `h` becomes
    /// leftmost when `reference` was.
    fn add_cw_of(&mut self, v: VertexId, h: usize, reference: usize) {
        let r_ccw = self.ccw[reference];
        self.cw[h] = reference;
        self.ccw[h] = r_ccw;
        self.cw[r_ccw] = h;
        self.ccw[reference] = h;
        if self.leftmost[v] == Some(reference) {
            self.leftmost[v] = Some(h);
        }
    }

    /// Inserts `h` immediately clockwise of `reference`.
    fn add_ccw_of(&mut self, _v: VertexId, h: usize, reference: usize) {
        let r_cw = self.cw[reference];
        self.cw[h] = r_cw;
        self.ccw[h] = reference;
        self.ccw[r_cw] = h;
        self.cw[reference] = h;
    }

    fn add_first(&mut self, v: VertexId, h: usize) {
        match self.leftmost[v] {
            None => self.add_first_ever(v, h),
            Some(l) => self.add_cw_of(v, h, l),
        }
    }

    fn rotations(&self) -> Vec<Vec<usize>> {
        self.leftmost
            .iter()
            .map(|&start| {
                let mut rot = Vec::new();
                if let Some(s) = start {
                    let mut h = s;
                    loop {
                        rot.push(h);
                        h = self.ccw[h];
                        if h == s {
                            break;
                        }
                    }
                }
                rot
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<[usize; 2]> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect()
    }

    fn kmn(m: usize, n: usize) -> Vec<[usize; 2]> {
        (0..m).flat_map(|a| (m..m + n).map(move |b| [a, b])).collect()
    }

    #[test]
    fn small_verdicts() {
        assert!(is_planar(4, &complete(4)));
        assert!(!is_planar(5, &complete(5)));
        assert!(!is_planar(6, &kmn(3, 3)));
        assert!(is_planar(5, &kmn(2, 3)));
        assert!(is_planar(1, &[]));
        assert!(is_planar(0, &[]));
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let mut e = complete(5);
        e.pop();
        assert!(is_planar(5, &e));
        let mut k33 = kmn(3, 3);
        k33.remove(4);
        assert!(is_planar(6, &k33));
    }

    #[test]
    fn parallel_edges_embed() {
        let edges = [[0, 1], [0, 1], [1, 2], [2, 0], [0, 1]];
        match planarity_test(3, &edges) {
            Planarity::Planar(map) => {
                assert_eq!(map.edge_count(), 5);
                assert!(map.euler_check().is_planar());
            }
            Planarity::NonPlanar => panic!("a fat triangle is planar"),
        }
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push([i, (i + 1) % 5]);
            e.push([i, i + 5]);
            e.push([5 + i, 5 + (i + 2) % 5]);
        }
        assert!(!is_planar(10, &e));
    }

    #[test]
    fn grid_and_disconnected_graphs_embed() {
        let mut e = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                let v = r * 4 + c;
                if c < 3 {
                    e.push([v, v + 1]);
                }
                if r < 3 {
                    e.push([v, v + 4]);
                }
            }
        }
        e.push([16, 17]);
        e.push([17, 18]);
        assert!(is_planar(20, &e));
    }
}

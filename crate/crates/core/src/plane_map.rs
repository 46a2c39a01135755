//! Combinatorial maps (rotation systems) for embedded multigraphs.
//!
//! Every edge `e` owns the two darts `2e` and `2e + 1`; the opposite of a
//! dart is therefore `d ^ 1`. Each vertex keeps its darts in a cyclic
//! counterclockwise order, stored as a doubly linked ring so that local
//! insertions are O(1). Deletions compact all ids, keeping relative creation
//! order.
//!
//! Faces follow a single convention throughout the crate: the dart after `d`
//! on its face is the rotation successor of the opposite dart,
//! `succ(opp(d))`. A face walk `[d_0, .., d_{m-1}]` has one *corner* per
//! position `i`, located at the tail of `d_i` between `opp(d_{i-1})` and
//! `d_i`.

use std::collections::HashMap;
use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type DartId = usize;

const DETACHED: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("duplicate dart {0}")]
    DuplicateDart(usize),
    #[error("unpaired dart {0}")]
    UnpairedDart(usize),
    #[error("dart {0} listed in two rotations")]
    DartInTwoRotations(usize),
    #[error("dart {0} is paired but missing from every rotation")]
    UnknownDart(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
    #[error("vertex {0} does not exist")]
    MissingVertex(VertexId),
    #[error("edge {0} does not exist")]
    MissingEdge(EdgeId),
    #[error("face walk is not a face of this map")]
    StaleFace,
    #[error("attachment {0} is not a position on the face")]
    AttachmentNotOnFace(usize),
    #[error("attachments are not in cyclic face order")]
    UnrealizableOrder,
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    WrongDegree {
        vertex: VertexId,
        degree: usize,
        expected: usize,
    },
    #[error("corrupt rotation structure: {0}")]
    Corrupt(String),
}

/// One end of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub id: DartId,
    pub vertex: VertexId,
    pub edge: EdgeId,
}

/// A closed face walk, listed as darts in walking order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    darts: Vec<DartId>,
}

impl Face {
    pub fn darts(&self) -> &[DartId] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Tail vertices of the walk; position `i` is the corner at `darts[i]`.
    pub fn vertices(&self, map: &PlaneMap) -> Vec<VertexId> {
        self.darts.iter().map(|&d| map.origin(d)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Planar,
    PositiveGenus { genus: usize },
}

/// Euler-formula audit of a map.
///
/// `face_orbits` counts orbits of the face permutation; an isolated vertex
/// contributes one extra face so that each component is judged on its own.
/// The map is planar iff `vertices - edges + faces == 2 * components`, which
/// is the same as `V - E + F = 1 + components` once the outer faces of all
/// components are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerReport {
    pub vertices: usize,
    pub edges: usize,
    pub face_orbits: usize,
    pub faces: usize,
    pub components: usize,
    pub verdict: Verdict,
}

impl EulerReport {
    pub fn is_planar(&self) -> bool {
        self.verdict == Verdict::Planar
    }

    pub fn characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

/// Old-to-new id tables produced by deletions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabel {
    pub vertices: Vec<Option<VertexId>>,
    pub edges: Vec<Option<EdgeId>>,
}

#[derive(Debug, Clone, Default)]
pub struct PlaneMap {
    origin: Vec<VertexId>,
    succ: Vec<DartId>,
    pred: Vec<DartId>,
    first: Vec<Option<DartId>>,
    degree: Vec<usize>,
    labels: Vec<Option<String>>,
}

impl PlaneMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// A map with `n` isolated vertices.
    pub fn with_vertices(n: usize) -> Self {
        let mut map = Self::new();
        for _ in 0..n {
            map.add_vertex();
        }
        map
    }

    /// Builds a map from caller-chosen dart names.
    ///
    /// `rotations[v]` lists the darts around vertex `v` counterclockwise and
    /// `pairing` joins the two darts of each edge. Edge ids follow the order
    /// of `pairing`; within an edge, the first dart of the pair becomes the
    /// even dart.
    pub fn build_map(rotations: &[Vec<usize>], pairing: &[(usize, usize)]) -> Result<Self, MapError> {
        let mut owner: HashMap<usize, VertexId> = HashMap::new();
        for (v, rot) in rotations.iter().enumerate() {
            let mut local = HashSet::new();
            for &d in rot {
                if !local.insert(d) {
                    return Err(MapError::DuplicateDart(d));
                }
                if owner.insert(d, v).is_some() {
                    return Err(MapError::DartInTwoRotations(d));
                }
            }
        }
        let mut internal: HashMap<usize, DartId> = HashMap::new();
        let mut ends = Vec::with_capacity(pairing.len());
        for (e, &(a, b)) in pairing.iter().enumerate() {
            if a == b {
                return Err(MapError::UnpairedDart(a));
            }
            for (side, d) in [a, b].into_iter().enumerate() {
                if internal.insert(d, 2 * e + side).is_some() {
                    return Err(MapError::DuplicateDart(d));
                }
                if !owner.contains_key(&d) {
                    return Err(MapError::UnknownDart(d));
                }
            }
            let (va, vb) = (owner[&a], owner[&b]);
            if va == vb {
                return Err(MapError::LoopEdge(va));
            }
            ends.push([va, vb]);
        }
        for rot in rotations {
            for d in rot {
                if !internal.contains_key(d) {
                    return Err(MapError::UnpairedDart(*d));
                }
            }
        }
        let rots: Vec<Vec<DartId>> = rotations
            .iter()
            .map(|rot| rot.iter().map(|d| internal[d]).collect())
            .collect();
        Self::from_rotations(rotations.len(), &ends, &rots)
    }

    /// Builds a map from internal dart ids: edge `e` joins `ends[e][0]`
    /// (dart `2e`) and `ends[e][1]` (dart `2e + 1`).
    pub fn from_rotations(
        vertex_count: usize,
        ends: &[[VertexId; 2]],
        rotations: &[Vec<DartId>],
    ) -> Result<Self, MapError> {
        if rotations.len() != vertex_count {
            return Err(MapError::Corrupt("one rotation per vertex required".into()));
        }
        let mut map = Self::with_vertices(vertex_count);
        for &[a, b] in ends {
            if a >= vertex_count {
                return Err(MapError::MissingVertex(a));
            }
            if b >= vertex_count {
                return Err(MapError::MissingVertex(b));
            }
            if a == b {
                return Err(MapError::LoopEdge(a));
            }
            map.new_detached_edge(a, b);
        }
        let mut seen = vec![false; map.dart_count()];
        for (v, rot) in rotations.iter().enumerate() {
            let mut last = None;
            for &d in rot {
                if d >= seen.len() {
                    return Err(MapError::UnknownDart(d));
                }
                if seen[d] {
                    return Err(MapError::DuplicateDart(d));
                }
                seen[d] = true;
                if map.origin[d] != v {
                    return Err(MapError::DartInTwoRotations(d));
                }
                map.place_dart(d, last);
                last = Some(d);
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(MapError::UnpairedDart(d));
        }
        Ok(map)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.first.push(None);
        self.degree.push(0);
        self.labels.push(None);
        self.first.len() - 1
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart {
            id: d,
            vertex: self.origin[d],
            edge: d / 2,
        }
    }

    #[inline]
    pub fn opposite(d: DartId) -> DartId {
        d ^ 1
    }

    #[inline]
    pub fn origin(&self, d: DartId) -> VertexId {
        self.origin[d]
    }

    #[inline]
    pub fn target(&self, d: DartId) -> VertexId {
        self.origin[d ^ 1]
    }

    #[inline]
    pub fn succ(&self, d: DartId) -> DartId {
        self.succ[d]
    }

    #[inline]
    pub fn pred(&self, d: DartId) -> DartId {
        self.pred[d]
    }

    /// The dart following `d` on its face.
    #[inline]
    pub fn face_next(&self, d: DartId) -> DartId {
        self.succ[d ^ 1]
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        [self.origin[2 * e], self.origin[2 * e + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    /// Counterclockwise rotation at `v`, starting from its smallest dart.
    pub fn rotation(&self, v: VertexId) -> Vec<DartId> {
        let Some(start) = self.first[v] else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(self.degree[v]);
        let mut d = start;
        loop {
            out.push(d);
            d = self.succ[d];
            if d == start {
                break;
            }
        }
        let min_at = out
            .iter()
            .enumerate()
            .min_by_key(|(_, d)| **d)
            .map(|(i, _)| i)
            .unwrap_or(0);
        out.rotate_left(min_at);
        out
    }

    /// Neighbours of `v` in rotation order (repeated for parallel edges).
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.rotation(v).into_iter().map(|d| self.target(d)).collect()
    }

    pub fn trace_faces(&self) -> Vec<Face> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                darts.push(d);
                d = self.face_next(d);
            }
            faces.push(Face { darts });
        }
        faces
    }

    /// Checks that `face` is still a face walk of this map.
    pub fn is_face(&self, face: &Face) -> bool {
        let n = face.darts.len();
        n > 0
            && face.darts.iter().all(|&d| d < self.dart_count())
            && (0..n).all(|i| self.face_next(face.darts[i]) == face.darts[(i + 1) % n])
    }

    /// Connected component index of every vertex, numbered by smallest member.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for d in self.rotation(v) {
                    let w = self.target(d);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn euler_check(&self) -> EulerReport {
        let (comp, count) = self.component_ids();
        let mut chi = vec![0i64; count];
        for v in 0..self.vertex_count() {
            chi[comp[v]] += 1;
            if self.degree[v] == 0 {
                chi[comp[v]] += 1;
            }
        }
        for e in 0..self.edge_count() {
            chi[comp[self.origin[2 * e]]] -= 1;
        }
        let faces = self.trace_faces();
        for f in &faces {
            chi[comp[self.origin[f.darts[0]]]] += 1;
        }
        let isolated = self.degree.iter().filter(|&&d| d == 0).count();
        let deficit: i64 = chi.iter().map(|c| 2 - c).sum();
        let verdict = if chi.iter().all(|&c| c == 2) {
            Verdict::Planar
        } else {
            Verdict::PositiveGenus {
                genus: (deficit / 2).max(1) as usize,
            }
        };
        EulerReport {
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            face_orbits: faces.len(),
            faces: faces.len() + isolated,
            components: count,
            verdict,
        }
    }

    /// Adds a vertex inside `face`, joined to the corners at the given walk
    /// positions. Positions must be distinct and appear in walk order when
    /// read cyclically from the first one.
    pub fn insert_vertex_in_face(&mut self, face: &Face, attachments: &[usize]) -> Result<VertexId, MapError> {
        if !self.is_face(face) {
            return Err(MapError::StaleFace);
        }
        let m = face.darts.len();
        if let Some(&bad) = attachments.iter().find(|&&a| a >= m) {
            return Err(MapError::AttachmentNotOnFace(bad));
        }
        if let Some(&a0) = attachments.first() {
            let offsets: Vec<usize> = attachments.iter().map(|&a| (a + m - a0) % m).collect();
            if offsets.windows(2).any(|w| w[0] >= w[1]) {
                return Err(MapError::UnrealizableOrder);
            }
        }
        let v = self.add_vertex();
        let mut inner = Vec::with_capacity(attachments.len());
        for &a in attachments {
            let corner = face.darts[a];
            let e = self.new_detached_edge(self.origin[corner], v);
            self.place_dart(2 * e, Some(self.pred[corner]));
            inner.push(2 * e + 1);
        }
        let mut last = None;
        for &d in inner.iter().rev() {
            self.place_dart(d, last);
            last = Some(d);
        }
        self.debug_check();
        Ok(v)
    }

    /// Adds an edge across `face` between the corners at walk positions `i`
    /// and `j`, splitting the face in two.
    pub fn insert_edge_in_face(&mut self, face: &Face, i: usize, j: usize) -> Result<EdgeId, MapError> {
        if !self.is_face(face) {
            return Err(MapError::StaleFace);
        }
        let m = face.darts.len();
        for k in [i, j] {
            if k >= m {
                return Err(MapError::AttachmentNotOnFace(k));
            }
        }
        self.insert_edge_before(face.darts[i], face.darts[j])
    }

    /// Adds an edge whose two darts sit immediately before `a` and `b` in
    /// their rotations. Planarity is preserved iff `a` and `b` lie on one face.
    pub fn insert_edge_before(&mut self, a: DartId, b: DartId) -> Result<EdgeId, MapError> {
        let (u, v) = (self.origin[a], self.origin[b]);
        if u == v {
            return Err(MapError::LoopEdge(u));
        }
        let e = self.new_detached_edge(u, v);
        self.place_dart(2 * e, Some(self.pred[a]));
        self.place_dart(2 * e + 1, Some(self.pred[b]));
        self.debug_check();
        Ok(e)
    }

    pub fn delete_edge(&mut self, e: EdgeId) -> Result<Relabel, MapError> {
        self.delete_edges(&[e])
    }

    pub fn delete_edges(&mut self, edges: &[EdgeId]) -> Result<Relabel, MapError> {
        let mut keep_edge = vec![true; self.edge_count()];
        for &e in edges {
            if e >= keep_edge.len() {
                return Err(MapError::MissingEdge(e));
            }
            keep_edge[e] = false;
        }
        Ok(self.compact(&vec![true; self.vertex_count()], &keep_edge))
    }

    pub fn delete_vertex(&mut self, v: VertexId) -> Result<Relabel, MapError> {
        self.delete_vertices(&[v])
    }

    /// Removes the vertices and every incident edge.
    pub fn delete_vertices(&mut self, vertices: &[VertexId]) -> Result<Relabel, MapError> {
        let mut keep_vertex = vec![true; self.vertex_count()];
        for &v in vertices {
            if v >= keep_vertex.len() {
                return Err(MapError::MissingVertex(v));
            }
            keep_vertex[v] = false;
        }
        let keep_edge: Vec<bool> = (0..self.edge_count())
            .map(|e| keep_vertex[self.origin[2 * e]] && keep_vertex[self.origin[2 * e + 1]])
            .collect();
        Ok(self.compact(&keep_vertex, &keep_edge))
    }

    /// Replaces a degree-2 vertex and its two edges by one edge occupying the
    /// same rotation positions at the far ends. Returns the id of the merged
    /// edge in the relabelled map.
    pub fn smooth_vertex(&mut self, v: VertexId) -> Result<(EdgeId, Relabel), MapError> {
        if v >= self.vertex_count() {
            return Err(MapError::MissingVertex(v));
        }
        if self.degree[v] != 2 {
            return Err(MapError::WrongDegree {
                vertex: v,
                degree: self.degree[v],
                expected: 2,
            });
        }
        let rot = self.rotation(v);
        let (far_a, far_b) = (rot[0] ^ 1, rot[1] ^ 1);
        let merged = self.insert_edge_before(self.succ[far_a], self.succ[far_b])?;
        let relabel = self.delete_vertices(&[v])?;
        let merged = relabel.edges[merged].expect("merged edge survives");
        Ok((merged, relabel))
    }

    /// The mirror image: every rotation reversed.
    pub fn mirrored(&self) -> PlaneMap {
        let mut out = self.clone();
        std::mem::swap(&mut out.succ, &mut out.pred);
        out
    }

    /// Renumbers vertices: new vertex `i` is old vertex `order[i]`.
    pub fn relabel_vertices(&self, order: &[VertexId]) -> Result<PlaneMap, MapError> {
        let n = self.vertex_count();
        let mut new_id = vec![usize::MAX; n];
        if order.len() != n {
            return Err(MapError::Corrupt("vertex order must be a permutation".into()));
        }
        for (i, &old) in order.iter().enumerate() {
            if old >= n || new_id[old] != usize::MAX {
                return Err(MapError::Corrupt("vertex order must be a permutation".into()));
            }
            new_id[old] = i;
        }
        let mut out = self.clone();
        for d in 0..self.dart_count() {
            out.origin[d] = new_id[self.origin[d]];
        }
        for (i, &old) in order.iter().enumerate() {
            out.first[i] = self.first[old];
            out.degree[i] = self.degree[old];
            out.labels[i] = self.labels[old].clone();
        }
        Ok(out)
    }

    /// Equality up to renaming of edges: some bijection of darts preserves
    /// every vertex, the rotations, and the edge involution.
    pub fn equivalent(&self, other: &PlaneMap) -> bool {
        if self.vertex_count() != other.vertex_count()
            || self.edge_count() != other.edge_count()
            || self.degree != other.degree
        {
            return false;
        }
        let mut image = vec![usize::MAX; self.dart_count()];
        for v in 0..self.vertex_count() {
            let Some(root) = self.first[v] else { continue };
            if image[root] != usize::MAX {
                continue;
            }
            let candidates = other.rotation(v);
            let mut matched = false;
            for cand in candidates {
                let mut trial = image.clone();
                if self.extend_isomorphism(other, root, cand, &mut trial) {
                    image = trial;
                    matched = true;
                    break;
                }
            }
            if !matched {
                return false;
            }
        }
        true
    }

    fn extend_isomorphism(&self, other: &PlaneMap, root: DartId, cand: DartId, image: &mut [usize]) -> bool {
        let mut used: HashSet<DartId> = image.iter().copied().filter(|&d| d != usize::MAX).collect();
        let mut stack = vec![(root, cand)];
        while let Some((d, g)) = stack.pop() {
            if image[d] != usize::MAX {
                if image[d] != g {
                    return false;
                }
                continue;
            }
            if self.origin[d] != other.origin[g] || !used.insert(g) {
                return false;
            }
            image[d] = g;
            stack.push((self.succ[d], other.succ[g]));
            stack.push((d ^ 1, g ^ 1));
        }
        true
    }

    /// Verifies the ring and involution invariants.
    pub fn check_structure(&self) -> Result<(), MapError> {
        let darts = self.dart_count();
        if self.succ.len() != darts || self.pred.len() != darts {
            return Err(MapError::Corrupt("dart tables disagree in length".into()));
        }
        let mut seen = vec![false; darts];
        for v in 0..self.vertex_count() {
            let Some(start) = self.first[v] else {
                if self.degree[v] != 0 {
                    return Err(MapError::Corrupt(format!("vertex {v} lost its rotation")));
                }
                continue;
            };
            let mut d = start;
            let mut count = 0;
            loop {
                if d >= darts || seen[d] || self.origin[d] != v {
                    return Err(MapError::DartInTwoRotations(d.min(darts)));
                }
                if self.pred[self.succ[d]] != d {
                    return Err(MapError::Corrupt(format!("broken ring at dart {d}")));
                }
                seen[d] = true;
                count += 1;
                d = self.succ[d];
                if d == start {
                    break;
                }
            }
            if count != self.degree[v] {
                return Err(MapError::Corrupt(format!("degree mismatch at vertex {v}")));
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(MapError::UnpairedDart(d));
        }
        for e in 0..self.edge_count() {
            if self.origin[2 * e] == self.origin[2 * e + 1] {
                return Err(MapError::LoopEdge(self.origin[2 * e]));
            }
        }
        Ok(())
    }

    #[inline]
    fn debug_check(&self) {
        debug_assert_eq!(self.check_structure(), Ok(()));
    }

    /// Creates an edge whose darts are not yet part of any rotation; callers
    /// must place both darts with [`PlaneMap::place_dart`].
    pub(crate) fn new_detached_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        let e = self.edge_count();
        self.origin.extend([u, v]);
        self.succ.extend([DETACHED, DETACHED]);
        self.pred.extend([DETACHED, DETACHED]);
        e
    }

    /// Links a detached dart into its vertex's rotation right after `after`,
    /// or as the only dart when `after` is `None`.
    pub(crate) fn place_dart(&mut self, d: DartId, after: Option<DartId>) {
        let v = self.origin[d];
        match after {
            None => {
                debug_assert!(self.first[v].is_none(), "vertex {v} already has darts");
                self.succ[d] = d;
                self.pred[d] = d;
                self.first[v] = Some(d);
            }
            Some(a) => {
                debug_assert_eq!(self.origin[a], v);
                let b = self.succ[a];
                self.succ[a] = d;
                self.pred[d] = a;
                self.succ[d] = b;
                self.pred[b] = d;
            }
        }
        self.degree[v] += 1;
    }

    /// Rotation-preserving rebuild that keeps only the flagged elements.
    fn compact(&mut self, keep_vertex: &[bool], keep_edge: &[bool]) -> Relabel {
        let mut vmap = vec![None; keep_vertex.len()];
        let mut next = 0;
        for (v, &k) in keep_vertex.iter().enumerate() {
            if k {
                vmap[v] = Some(next);
                next += 1;
            }
        }
        let mut emap = vec![None; keep_edge.len()];
        let mut ends = Vec::new();
        for (e, &k) in keep_edge.iter().enumerate() {
            if k {
                emap[e] = Some(ends.len());
                ends.push([
                    vmap[self.origin[2 * e]].expect("kept edge has kept ends"),
                    vmap[self.origin[2 * e + 1]].expect("kept edge has kept ends"),
                ]);
            }
        }
        let mut rotations = vec![Vec::new(); next];
        let mut labels = vec![None; next];
        for v in 0..keep_vertex.len() {
            if let Some(nv) = vmap[v] {
                labels[nv] = self.labels[v].take();
                rotations[nv] = self
                    .rotation(v)
                    .into_iter()
                    .filter_map(|d| emap[d / 2].map(|ne| 2 * ne + (d & 1)))
                    .collect();
            }
        }
        let mut rebuilt =
            PlaneMap::from_rotations(next, &ends, &rotations).expect("compaction keeps a valid structure");
        rebuilt.labels = labels;
        *self = rebuilt;
        Relabel {
            vertices: vmap,
            edges: emap,
        }
    }
}

impl PartialEq for PlaneMap {
    fn eq(&self, other: &Self) -> bool {
        self.origin == other.origin
            && self.labels == other.labels
            && (0..self.vertex_count()).all(|v| self.rotation(v) == other.rotation(v))
    }
}

impl Eq for PlaneMap {}

impl fmt::Display for PlaneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.vertex_count() {
            let nbrs: Vec<String> = self.neighbors(v).iter().map(|w| w.to_string()).collect();
            writeln!(f, "{v}: [{}]", nbrs.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle a=0, b=1, c=2 with edges ab(0), bc(1), ca(2).
    fn triangle() -> PlaneMap {
        // darts: ab: 0 at a, 1 at b; bc: 2 at b, 3 at c; ca: 4 at c, 5 at a
        PlaneMap::build_map(&[vec![0, 5], vec![2, 1], vec![4, 3]], &[(0, 1), (2, 3), (4, 5)]).unwrap()
    }

    fn cycle(n: usize) -> PlaneMap {
        let ends: Vec<[usize; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
        let rotations: Vec<Vec<usize>> = (0..n).map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1]).collect();
        PlaneMap::from_rotations(n, &ends, &rotations).unwrap()
    }

    fn wheel(rim: usize) -> PlaneMap {
        let mut map = cycle(rim);
        let face = map.trace_faces().remove(0);
        let all: Vec<usize> = (0..face.len()).collect();
        map.insert_vertex_in_face(&face, &all).unwrap();
        map
    }

    #[test]
    fn triangle_is_valid_with_two_faces() {
        let t = triangle();
        assert_eq!(t.edge_count(), 3);
        let faces = t.trace_faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 3));
        let report = t.euler_check();
        assert_eq!(report.characteristic(), 2);
        assert!(report.is_planar());
    }

    #[test]
    fn single_edge_map() {
        let m = PlaneMap::build_map(&[vec![7], vec![9]], &[(7, 9)]).unwrap();
        assert_eq!(m.edge_count(), 1);
        assert_eq!(m.dart_count(), 2);
        assert_eq!(m.trace_faces().len(), 1);
        assert!(m.euler_check().is_planar());
    }

    #[test]
    fn build_map_errors() {
        assert_eq!(
            PlaneMap::build_map(&[vec![0], vec![1]], &[(0, 0)]).unwrap_err(),
            MapError::UnpairedDart(0)
        );
        assert_eq!(
            PlaneMap::build_map(&[vec![0, 0], vec![1]], &[(0, 1)]).unwrap_err(),
            MapError::DuplicateDart(0)
        );
        assert_eq!(
            PlaneMap::build_map(&[vec![0], vec![0, 1]], &[(0, 1)]).unwrap_err(),
            MapError::DartInTwoRotations(0)
        );
        assert_eq!(
            PlaneMap::build_map(&[vec![0, 1], vec![]], &[(0, 1)]).unwrap_err(),
            MapError::LoopEdge(0)
        );
        assert_eq!(
            PlaneMap::build_map(&[vec![0], vec![1, 2]], &[(0, 1)]).unwrap_err(),
            MapError::UnpairedDart(2)
        );
        assert_eq!(
            PlaneMap::build_map(&[vec![0], vec![1]], &[(0, 1), (2, 3)]).unwrap_err(),
            MapError::UnknownDart(2)
        );
    }

    #[test]
    fn cycle_and_path_faces() {
        let c4 = cycle(4);
        let faces = c4.trace_faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 4));

        let path = PlaneMap::from_rotations(3, &[[0, 1], [1, 2]], &[vec![0], vec![1, 2], vec![3]]).unwrap();
        let faces = path.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
        assert!(path.euler_check().is_planar());
    }

    #[test]
    fn k4_standard_rotation_is_planar() {
        let mut t = triangle();
        let face = t.trace_faces().remove(0);
        t.insert_vertex_in_face(&face, &[0, 1, 2]).unwrap();
        let r = t.euler_check();
        assert_eq!((r.vertices, r.edges, r.faces), (4, 6, 4));
        assert!(r.is_planar());
        assert!(t.trace_faces().iter().all(|f| f.len() == 3));
    }

    /// Enumerates every rotation system of K5: none is planar.
    #[test]
    fn k5_has_no_planar_rotation_system() {
        let mut ends = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                ends.push([a, b]);
            }
        }
        let darts_at: Vec<Vec<usize>> = (0..5)
            .map(|v| {
                (0..ends.len())
                    .flat_map(|e| {
                        let mut ds = Vec::new();
                        if ends[e][0] == v {
                            ds.push(2 * e);
                        }
                        if ends[e][1] == v {
                            ds.push(2 * e + 1);
                        }
                        ds
                    })
                    .collect()
            })
            .collect();
        // all cyclic orders of 4 darts: fix the first, permute the other three
        let perms3 = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut max_faces = 0;
        for code in 0..6usize.pow(5) {
            let mut c = code;
            let rotations: Vec<Vec<usize>> = (0..5)
                .map(|v| {
                    let p = perms3[c % 6];
                    c /= 6;
                    let ds = &darts_at[v];
                    vec![ds[0], ds[1 + p[0]], ds[1 + p[1]], ds[1 + p[2]]]
                })
                .collect();
            let map = PlaneMap::from_rotations(5, &ends, &rotations).unwrap();
            let r = map.euler_check();
            assert!(!r.is_planar());
            max_faces = max_faces.max(r.faces);
        }
        assert!(max_faces < 7);
    }

    #[test]
    fn insert_degree_two_vertex_into_cycle_face() {
        let mut c4 = cycle(4);
        let face = c4.trace_faces().remove(0);
        c4.insert_vertex_in_face(&face, &[0, 2]).unwrap();
        let r = c4.euler_check();
        assert_eq!((r.vertices, r.edges), (5, 6));
        assert!(r.is_planar());
    }

    #[test]
    fn insert_into_outer_face_of_four_cycle() {
        let c4 = cycle(4);
        for face in c4.trace_faces() {
            let mut m = c4.clone();
            m.insert_vertex_in_face(&face, &[0, 1, 2, 3]).unwrap();
            assert!(m.euler_check().is_planar());
            assert_eq!(m.trace_faces().len(), 5);
        }
    }

    #[test]
    fn insertion_errors() {
        let mut c4 = cycle(4);
        let face = c4.trace_faces().remove(0);
        assert_eq!(
            c4.insert_vertex_in_face(&face, &[0, 4]).unwrap_err(),
            MapError::AttachmentNotOnFace(4)
        );
        assert_eq!(
            c4.insert_vertex_in_face(&face, &[0, 2, 1]).unwrap_err(),
            MapError::UnrealizableOrder
        );
        assert_eq!(
            c4.insert_vertex_in_face(&face, &[1, 1]).unwrap_err(),
            MapError::UnrealizableOrder
        );
        // wrap-around orders are fine
        c4.insert_vertex_in_face(&face, &[2, 3, 0]).unwrap();
        assert_eq!(c4.insert_vertex_in_face(&face, &[0]).unwrap_err(), MapError::StaleFace);
    }

    #[test]
    fn deletions() {
        let mut t = triangle();
        t.delete_edge(0).unwrap();
        assert_eq!(t.trace_faces().len(), 1);
        assert!(t.euler_check().is_planar());

        let mut w = wheel(5);
        w.delete_vertex(5).unwrap();
        assert_eq!(w, {
            let mut c = cycle(5);
            c.labels = vec![None; 5];
            c
        });

        // K4 minus its outer triangle is a star
        let mut k4 = triangle();
        let face = k4.trace_faces().remove(0);
        k4.insert_vertex_in_face(&face, &[0, 1, 2]).unwrap();
        k4.delete_edges(&[0, 1, 2]).unwrap();
        assert_eq!(k4.edge_count(), 3);
        assert_eq!(k4.degree(3), 3);
        assert!(k4.euler_check().is_planar());
        assert_eq!(k4.delete_edge(9).unwrap_err(), MapError::MissingEdge(9));
        assert_eq!(k4.delete_vertex(9).unwrap_err(), MapError::MissingVertex(9));
    }

    #[test]
    fn smoothing_merges_two_edges() {
        let mut p = PlaneMap::from_rotations(3, &[[0, 1], [1, 2]], &[vec![0], vec![1, 2], vec![3]]).unwrap();
        let (e, relabel) = p.smooth_vertex(1).unwrap();
        assert_eq!(relabel.vertices, vec![Some(0), None, Some(1)]);
        assert_eq!(p.endpoints(e), [0, 1]);
        assert_eq!(p.edge_count(), 1);
    }

    #[test]
    fn mirror_and_relabel_keep_planarity() {
        let w = wheel(6);
        assert!(w.mirrored().euler_check().is_planar());
        let order: Vec<usize> = (0..w.vertex_count()).rev().collect();
        let r = w.relabel_vertices(&order).unwrap();
        assert!(r.euler_check().is_planar());
        assert_eq!(r.degree(0), 6);
    }

    #[test]
    fn equivalence_ignores_edge_names() {
        let a = triangle();
        let b = PlaneMap::from_rotations(3, &[[2, 0], [0, 1], [1, 2]], &[vec![1, 2], vec![3, 4], vec![5, 0]]).unwrap();
        assert!(a.equivalent(&b));
        assert!(a.equivalent(&a.clone()));
        let w = wheel(4);
        assert!(!w.equivalent(&w.mirrored()));
    }

    #[test]
    fn toroidal_rotation_detected() {
        // K3,3 with all rotations ascending has genus 1
        let mut ends = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                ends.push([a, b]);
            }
        }
        let rotations: Vec<Vec<usize>> = (0..6)
            .map(|v| {
                (0..9)
                    .filter_map(|e| {
                        if ends[e][0] == v {
                            Some(2 * e)
                        } else if ends[e][1] == v {
                            Some(2 * e + 1)
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        let m = PlaneMap::from_rotations(6, &ends, &rotations).unwrap();
        assert!(matches!(m.euler_check().verdict, Verdict::PositiveGenus { .. }));
    }
}

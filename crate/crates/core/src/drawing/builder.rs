//! Mutable workspace for drawing surgery.
//!
//! The builder owns a planified map whose edges are tagged either as scaffold
//! (helper edges that are deleted before finishing) or as a segment of a
//! registered graph edge. `finish` renumbers everything into the canonical
//! layout of [`OnePlanarDrawing`] and certifies the result.

use crate::plane_map::{DartId, EdgeId, Face, PlaneMap, Relabel, VertexId};

use super::{DrawingError, EdgePath, Graph, OnePlanarDrawing, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum VertexTag {
    True(Option<Side>),
    False,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SegmentTag {
    Scaffold,
    Edge(usize),
}

#[derive(Debug, Clone, Copy)]
struct Registered {
    ends: [VertexId; 2],
    alive: bool,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct DrawingBuilder {
    map: PlaneMap,
    vertices: Vec<VertexTag>,
    segments: Vec<SegmentTag>,
    registry: Vec<Registered>,
}

impl DrawingBuilder {
    /// Every vertex becomes a true vertex of `side`; every edge is scaffold.
    pub(crate) fn from_scaffold(map: PlaneMap, side: Option<Side>) -> Self {
        Self {
            vertices: vec![VertexTag::True(side); map.vertex_count()],
            segments: vec![SegmentTag::Scaffold; map.edge_count()],
            registry: Vec::new(),
            map,
        }
    }

    pub(crate) fn from_drawing(d: &OnePlanarDrawing) -> Self {
        let n = d.vertex_count();
        let vertices = (0..d.planified().vertex_count())
            .map(|v| {
                if v < n {
                    VertexTag::True(d.graph().side(v))
                } else {
                    VertexTag::False
                }
            })
            .collect();
        let segments = d.map_edge_owners().into_iter().map(SegmentTag::Edge).collect();
        let registry = d
            .graph()
            .edges()
            .iter()
            .map(|&ends| Registered { ends, alive: true })
            .collect();
        Self {
            map: d.planified().clone(),
            vertices,
            segments,
            registry,
        }
    }

    fn register(&mut self, a: VertexId, b: VertexId) -> usize {
        self.registry.push(Registered {
            ends: [a, b],
            alive: true,
        });
        self.registry.len() - 1
    }

    fn new_segment(&mut self, a: VertexId, b: VertexId, tag: SegmentTag) -> EdgeId {
        let e = self.map.new_detached_edge(a, b);
        self.segments.push(tag);
        e
    }

    /// Inserts `count` nested degree-2 vertices joined to the tails of `a`
    /// and `b`, which must be corner darts of one face. Each new vertex lies
    /// in the face bounded by its predecessor and the `a` side of the walk.
    pub(crate) fn add_degree2_fan(&mut self, a: DartId, b: DartId, count: usize, side: Option<Side>) -> Vec<VertexId> {
        let (u, v) = (self.map.origin(a), self.map.origin(b));
        let mut b = b;
        let mut added = Vec::with_capacity(count);
        for _ in 0..count {
            let w = self.map.add_vertex();
            self.vertices.push(VertexTag::True(side));
            let ru = self.register(u, w);
            let rv = self.register(v, w);
            let eu = self.new_segment(u, w, SegmentTag::Edge(ru));
            let ev = self.new_segment(v, w, SegmentTag::Edge(rv));
            let pa = self.map.pred(a);
            let pb = self.map.pred(b);
            self.map.place_dart(2 * eu, Some(pa));
            self.map.place_dart(2 * ev, Some(pb));
            self.map.place_dart(2 * eu + 1, None);
            self.map.place_dart(2 * ev + 1, Some(2 * eu + 1));
            b = 2 * ev;
            added.push(w);
        }
        debug_assert_eq!(self.map.check_structure(), Ok(()));
        added
    }

    /// Glues a drawing fragment into `host`. The fragment must have a face
    /// on which each vertex of `corners` appears exactly once, and `host`
    /// must have exactly `corners.len()` corners at distinct vertices. The
    /// corners are identified with the host corners in reverse walk order.
    /// Returns the builder vertex of each fragment vertex.
    pub(crate) fn glue(
        &mut self,
        host: &Face,
        fragment: &OnePlanarDrawing,
        corners: &[VertexId],
    ) -> Result<Vec<VertexId>, DrawingError> {
        let k = corners.len();
        if host.len() != k || !self.map.is_face(host) {
            return Err(crate::plane_map::MapError::StaleFace.into());
        }
        let tmap = fragment.planified();
        let outer = tmap
            .trace_faces()
            .into_iter()
            .find_map(|f| {
                let hits: Vec<(usize, DartId)> = f
                    .darts()
                    .iter()
                    .filter_map(|&d| corners.iter().position(|&c| c == tmap.origin(d)).map(|ci| (ci, d)))
                    .collect();
                let mut seen = vec![false; k];
                for &(ci, _) in &hits {
                    seen[ci] = true;
                }
                (hits.len() == k && seen.iter().all(|&s| s)).then_some(hits)
            })
            .ok_or_else(|| crate::plane_map::MapError::Corrupt("fragment has no face through all corners".into()))?;

        let n_t = fragment.vertex_count();
        let mut image = vec![usize::MAX; tmap.vertex_count()];
        let mut entry = vec![None; tmap.vertex_count()];
        let mut anchors = vec![None; tmap.vertex_count()];
        for (j, &(ci, d)) in outer.iter().enumerate() {
            let h = host.darts()[(k - j) % k];
            image[corners[ci]] = self.map.origin(h);
            entry[corners[ci]] = Some(d);
            anchors[corners[ci]] = Some(self.map.pred(h));
        }
        for v in 0..tmap.vertex_count() {
            if image[v] == usize::MAX {
                image[v] = self.map.add_vertex();
                self.vertices.push(if v < n_t {
                    VertexTag::True(fragment.graph().side(v))
                } else {
                    VertexTag::False
                });
            }
        }
        let reg_base = self.registry.len();
        for &[a, b] in fragment.graph().edges() {
            self.register(image[a], image[b]);
        }
        let edge_base = self.map.edge_count();
        for (me, owner) in fragment.map_edge_owners().into_iter().enumerate() {
            let [p, q] = tmap.endpoints(me);
            self.new_segment(image[p], image[q], SegmentTag::Edge(reg_base + owner));
        }
        let lift = |d: DartId| 2 * (edge_base + d / 2) + (d & 1);
        for v in 0..tmap.vertex_count() {
            let rotation = match entry[v] {
                Some(start) => {
                    let mut rot = vec![start];
                    let mut d = tmap.succ(start);
                    while d != start {
                        rot.push(d);
                        d = tmap.succ(d);
                    }
                    rot
                }
                None => tmap.rotation(v),
            };
            let mut last = anchors[v];
            for d in rotation {
                self.map.place_dart(lift(d), last);
                last = Some(lift(d));
            }
        }
        debug_assert_eq!(self.map.check_structure(), Ok(()));
        Ok(image)
    }

    /// Deletes every scaffold edge.
    pub(crate) fn remove_scaffold(&mut self) -> Result<(), DrawingError> {
        let scaffold: Vec<EdgeId> = (0..self.segments.len())
            .filter(|&e| self.segments[e] == SegmentTag::Scaffold)
            .collect();
        let relabel = self.map.delete_edges(&scaffold)?;
        self.apply(&relabel);
        Ok(())
    }

    /// Deletes true vertices with all their graph edges. A crossing that
    /// loses one of its edges is smoothed into an uncrossed edge.
    pub(crate) fn remove_true_vertices(&mut self, doomed: &[VertexId]) -> Result<(), DrawingError> {
        self.remove(doomed, &[])
    }

    /// Deletes registered graph edges, smoothing their crossings.
    pub(crate) fn remove_graph_edges(&mut self, edges: &[usize]) -> Result<(), DrawingError> {
        self.remove(&[], edges)
    }

    fn remove(&mut self, doomed: &[VertexId], edges: &[usize]) -> Result<(), DrawingError> {
        let mut dead = vec![false; self.vertices.len()];
        for &v in doomed {
            dead[v] = true;
        }
        for &r in edges {
            self.registry[r].alive = false;
        }
        for r in self.registry.iter_mut() {
            if r.alive && (dead[r.ends[0]] || dead[r.ends[1]]) {
                r.alive = false;
            }
        }
        let segments: Vec<EdgeId> = (0..self.segments.len())
            .filter(|&e| matches!(self.segments[e], SegmentTag::Edge(r) if !self.registry[r].alive))
            .collect();
        let relabel = self.map.delete_edges(&segments)?;
        self.apply(&relabel);
        let mut doomed: Vec<VertexId> = doomed.to_vec();
        doomed.extend(
            (0..self.vertices.len()).filter(|&v| self.vertices[v] == VertexTag::False && self.map.degree(v) == 0),
        );
        let relabel = self.map.delete_vertices(&doomed)?;
        self.apply(&relabel);
        while let Some(z) =
            (0..self.vertices.len()).find(|&v| self.vertices[v] == VertexTag::False && self.map.degree(v) == 2)
        {
            let tag = self.segments[self.map.rotation(z)[0] / 2];
            self.segments.push(tag);
            let (_, relabel) = self.map.smooth_vertex(z)?;
            self.apply(&relabel);
        }
        Ok(())
    }

    /// Replaces the colouring of the true vertices (in current order).
    pub(crate) fn recolour(&mut self, sides: Option<&[Side]>) {
        let mut next = 0;
        for tag in self.vertices.iter_mut() {
            if let VertexTag::True(s) = tag {
                *s = sides.map(|all| all[next]);
                next += 1;
            }
        }
    }

    fn apply(&mut self, relabel: &Relabel) {
        let mut vertices = vec![VertexTag::False; self.map.vertex_count()];
        for (old, new) in relabel.vertices.iter().enumerate() {
            if let Some(new) = *new {
                vertices[new] = self.vertices[old];
            }
        }
        let mut segments = vec![SegmentTag::Scaffold; self.map.edge_count()];
        for (old, new) in relabel.edges.iter().enumerate() {
            if let Some(new) = *new {
                segments[new] = self.segments[old];
            }
        }
        for r in self.registry.iter_mut().filter(|r| r.alive) {
            for end in r.ends.iter_mut() {
                *end = relabel.vertices[*end].expect("live edge keeps its ends");
            }
        }
        self.vertices = vertices;
        self.segments = segments;
    }

    /// Renumbers into canonical form and certifies the drawing.
    pub(crate) fn finish(self) -> Result<OnePlanarDrawing, DrawingError> {
        if self.segments.contains(&SegmentTag::Scaffold) {
            return Err(crate::plane_map::MapError::Corrupt("scaffold left in drawing".into()).into());
        }
        let total = self.vertices.len();
        let mut order: Vec<VertexId> = (0..total)
            .filter(|&v| matches!(self.vertices[v], VertexTag::True(_)))
            .collect();
        let n = order.len();
        order.extend((0..total).filter(|&v| self.vertices[v] == VertexTag::False));
        let mut new_id = vec![0; total];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let sides: Option<Vec<Side>> = order[..n]
            .iter()
            .map(|&v| match self.vertices[v] {
                VertexTag::True(s) => s,
                VertexTag::False => None,
            })
            .collect();

        let mut edge_index = vec![usize::MAX; self.registry.len()];
        let mut edges = Vec::new();
        for (r, reg) in self.registry.iter().enumerate() {
            if reg.alive {
                edge_index[r] = edges.len();
                let [a, b] = reg.ends;
                let (a, b) = (new_id[a], new_id[b]);
                let flip = sides
                    .as_ref()
                    .is_some_and(|s| s[a] == Side::White && s[b] == Side::Black);
                edges.push(if flip { [b, a] } else { [a, b] });
            }
        }
        let map = self.map.relabel_vertices(&order)?;
        let mut segs: Vec<Vec<EdgeId>> = vec![Vec::new(); edges.len()];
        for (me, tag) in self.segments.iter().enumerate() {
            if let SegmentTag::Edge(r) = *tag {
                segs[edge_index[r]].push(me);
            }
        }
        let edge_paths = segs
            .iter()
            .enumerate()
            .map(|(e, s)| match s.as_slice() {
                [m] => EdgePath::Direct(*m),
                [m0, m1] => {
                    if map.endpoints(*m0).contains(&edges[e][0]) {
                        EdgePath::Crossed([*m0, *m1])
                    } else {
                        EdgePath::Crossed([*m1, *m0])
                    }
                }
                _ => EdgePath::Crossed([usize::MAX, usize::MAX]),
            })
            .collect();
        let mut crossings = Vec::new();
        for z in n..total {
            let mut pair: Vec<EdgeId> = map
                .rotation(z)
                .into_iter()
                .filter_map(|d| match self.segments[d / 2] {
                    SegmentTag::Edge(r) => Some(edge_index[r]),
                    SegmentTag::Scaffold => None,
                })
                .collect();
            pair.sort_unstable();
            pair.dedup();
            match pair.as_slice() {
                [e, f] => crossings.push([*e, *f]),
                _ => crossings.push([usize::MAX, usize::MAX]),
            }
        }
        let graph = Graph::from_parts_unchecked(n, edges, sides);
        OnePlanarDrawing::assemble(graph, crossings, map, edge_paths)
    }
}

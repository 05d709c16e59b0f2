//! Cellularly embedded graphs as signed rotation systems.
//!
//! Every edge `e` owns two darts, `2e` (end 0) and `2e + 1` (end 1). A vertex
//! lists the darts located at it in cyclic order, and every edge carries a
//! sign. Face boundaries are traced with a local-orientation flag that is
//! toggled whenever a negative edge is crossed: with the flag clear the walk
//! continues at the successor of the arrival dart, with the flag set at its
//! predecessor. An embedding is orientable iff, after flipping some vertices
//! (reversing their rotation and negating their incident edges), every edge
//! is positive.

use std::fmt;

use thiserror::Error;

use crate::graph::{SimpleGraph, VertexId};

pub mod fixtures;
pub mod random;
mod surgery;

pub use surgery::{CutResult, Identified, Contracted, SidedFace};

pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(edge: EdgeId, end: usize) -> Self {
        debug_assert!(end < 2);
        Dart(2 * edge + end)
    }

    pub fn edge(self) -> EdgeId {
        self.0 / 2
    }

    pub fn end(self) -> usize {
        self.0 % 2
    }

    /// The other dart of the same edge.
    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("dart {0} listed more than once")]
    DuplicateDart(Dart),
    #[error("dart {0} does not appear in any rotation")]
    MissingDart(Dart),
    #[error("dart {dart} refers to edge {} but only {edges} edges have signs", dart.edge())]
    UnknownDart { dart: Dart, edges: usize },
    #[error("edge {0} is a loop")]
    Loop(EdgeId),
    #[error("edges {0} and {1} are parallel")]
    ParallelEdge(EdgeId, EdgeId),
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set does not induce a connected subgraph")]
    SetNotConnected,
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(VertexId, VertexId),
    #[error("cannot identify a vertex with itself ({0})")]
    SameVertex(VertexId),
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
}

/// A closed boundary walk. `darts[i]` is the dart by which the walk leaves
/// `vertices[i]`. An isolated vertex bounds a single face with no darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
    pub vertices: Vec<VertexId>,
}

impl FaceWalk {
    /// Number of edge traversals, `d(f)`.
    pub fn degree(&self) -> usize {
        self.darts.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotation: Vec<Vec<Dart>>,
    signs: Vec<Sign>,
    dart_vertex: Vec<VertexId>,
    dart_pos: Vec<usize>,
    /// Per vertex `(neighbor, edge)` sorted by neighbor.
    incident: Vec<Vec<(VertexId, EdgeId)>>,
    graph: SimpleGraph,
}

impl EmbeddedGraph {
    /// Validates a signed rotation system. `rotations[v]` is the cyclic dart
    /// order at `v`; `signs[e]` the sign of edge `e`. Disconnected systems are
    /// accepted; see [`EmbeddedGraph::is_connected`].
    pub fn new(rotations: Vec<Vec<Dart>>, signs: Vec<Sign>) -> Result<Self, EmbeddingError> {
        let m = signs.len();
        let mut dart_vertex = vec![usize::MAX; 2 * m];
        let mut dart_pos = vec![usize::MAX; 2 * m];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d.0 >= 2 * m {
                    return Err(EmbeddingError::UnknownDart { dart: d, edges: m });
                }
                if dart_vertex[d.0] != usize::MAX {
                    return Err(EmbeddingError::DuplicateDart(d));
                }
                dart_vertex[d.0] = v;
                dart_pos[d.0] = i;
            }
        }
        if let Some(d) = dart_vertex.iter().position(|&v| v == usize::MAX) {
            return Err(EmbeddingError::MissingDart(Dart(d)));
        }
        let n = rotations.len();
        let mut incident: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        for e in 0..m {
            let (u, v) = (dart_vertex[2 * e], dart_vertex[2 * e + 1]);
            if u == v {
                return Err(EmbeddingError::Loop(e));
            }
            incident[u].push((v, e));
            incident[v].push((u, e));
        }
        let mut adj = Vec::with_capacity(n);
        for list in &mut incident {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                let (a, b) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                return Err(EmbeddingError::ParallelEdge(a, b));
            }
            adj.push(list.iter().map(|&(w, _)| w).collect());
        }
        Ok(Self {
            rotation: rotations,
            signs,
            dart_vertex,
            dart_pos,
            incident,
            graph: SimpleGraph::from_adjacency_unchecked(adj),
        })
    }

    /// Convenience constructor from neighbor orders: `order[v]` lists the
    /// neighbors of `v` cyclically. Edge ids follow the lexicographic order of
    /// `(min, max)` endpoint pairs; end 0 sits at the smaller endpoint. Edges
    /// listed in `negative` get sign `-`.
    pub fn from_neighbor_orders(
        order: &[Vec<VertexId>],
        negative: &[(VertexId, VertexId)],
    ) -> Result<Self, EmbeddingError> {
        let n = order.len();
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        for (u, list) in order.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(EmbeddingError::UnknownVertex(v));
                }
                if u == v {
                    return Err(EmbeddingError::NotACycle(format!("loop at {u}")));
                }
                pairs.push((u.min(v), u.max(v)));
            }
        }
        pairs.sort_unstable();
        // Each edge must be listed once from each side.
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let mut j = i;
            while j < pairs.len() && pairs[j] == pairs[i] {
                j += 1;
            }
            match j - i {
                2 => edges.push(pairs[i]),
                1 => return Err(EmbeddingError::MissingDart(Dart::new(edges.len(), 1))),
                _ => {
                    return Err(EmbeddingError::ParallelEdge(edges.len(), edges.len()));
                }
            }
            i = j;
        }
        let edge_id = |a: VertexId, b: VertexId| {
            edges.binary_search(&(a.min(b), a.max(b))).expect("edge listed")
        };
        let rotations = order
            .iter()
            .enumerate()
            .map(|(u, list)| {
                list.iter()
                    .map(|&v| Dart::new(edge_id(u, v), usize::from(u > v)))
                    .collect()
            })
            .collect();
        let mut signs = vec![Sign::Plus; edges.len()];
        for &(a, b) in negative {
            let e = edges
                .binary_search(&(a.min(b), a.max(b)))
                .map_err(|_| EmbeddingError::NotACycle(format!("{a}-{b} is not an edge")))?;
            signs[e] = Sign::Minus;
        }
        Self::new(rotations, signs)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.signs.len()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, e: EdgeId) -> Sign {
        self.signs[e]
    }

    /// Vertex at which dart `d` is located.
    pub fn dart_vertex(&self, d: Dart) -> VertexId {
        self.dart_vertex[d.0]
    }

    /// Endpoints of edge `e` as `(end 0, end 1)`.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.dart_vertex[2 * e], self.dart_vertex[2 * e + 1])
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = self.incident.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    /// Dart of edge `e` located at `v`.
    pub fn dart_at(&self, e: EdgeId, v: VertexId) -> Dart {
        let d = Dart::new(e, 0);
        if self.dart_vertex[d.0] == v {
            d
        } else {
            d.twin()
        }
    }

    /// Neighbor of the dart's vertex across the dart's edge.
    pub fn head(&self, d: Dart) -> VertexId {
        self.dart_vertex[d.twin().0]
    }

    pub fn succ(&self, d: Dart) -> Dart {
        let v = self.dart_vertex[d.0];
        let rot = &self.rotation[v];
        rot[(self.dart_pos[d.0] + 1) % rot.len()]
    }

    pub fn pred(&self, d: Dart) -> Dart {
        let v = self.dart_vertex[d.0];
        let rot = &self.rotation[v];
        rot[(self.dart_pos[d.0] + rot.len() - 1) % rot.len()]
    }

    /// Neighbors of `v` in rotation order.
    pub fn rotation_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.rotation[v].iter().map(|&d| self.head(d)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn component_count(&self) -> usize {
        self.graph.components().len()
    }

    /// One step of the face-tracing permutation on `(dart, flag)` states.
    fn face_step(&self, d: Dart, flag: bool) -> (Dart, bool) {
        let arrive = d.twin();
        let flag = flag ^ self.signs[d.edge()].is_negative();
        let next = if flag { self.pred(arrive) } else { self.succ(arrive) };
        (next, flag)
    }

    /// Traces every face exactly once. Each face corresponds to a pair of
    /// mutually reverse orbits of the `(dart, flag)` permutation; the orbit
    /// containing the smallest unused state is reported and its reverse is
    /// marked as used.
    pub fn faces(&self) -> Vec<FaceWalk> {
        let m = self.edge_count();
        let state = |d: Dart, flag: bool| 2 * d.0 + usize::from(flag);
        let mut used = vec![false; 4 * m];
        let mut faces = Vec::new();
        for start in 0..4 * m {
            if used[start] {
                continue;
            }
            let (d0, f0) = (Dart(start / 2), start % 2 == 1);
            let mut darts = Vec::new();
            let mut vertices = Vec::new();
            let (mut d, mut flag) = (d0, f0);
            loop {
                used[state(d, flag)] = true;
                let reverse_flag = !(flag ^ self.signs[d.edge()].is_negative());
                used[state(d.twin(), reverse_flag)] = true;
                darts.push(d);
                vertices.push(self.dart_vertex[d.0]);
                (d, flag) = self.face_step(d, flag);
                if (d, flag) == (d0, f0) {
                    break;
                }
            }
            faces.push(FaceWalk { darts, vertices });
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            if rot.is_empty() {
                faces.push(FaceWalk { darts: Vec::new(), vertices: vec![v] });
            }
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// `|V| - |E| + |F|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Euler genus of the surface of a connected embedding.
    pub fn euler_genus(&self) -> Result<usize, EmbeddingError> {
        let comps = self.component_count();
        if comps != 1 {
            return Err(EmbeddingError::Disconnected(comps));
        }
        Ok(self.total_euler_genus())
    }

    /// Sum of the Euler genera of the components (defined for any input).
    pub fn total_euler_genus(&self) -> usize {
        let comps = self.component_count() as i64;
        let eg = 2 * comps - self.euler_characteristic();
        debug_assert!(eg >= 0, "negative Euler genus {eg}");
        eg as usize
    }

    /// Local orientations from a BFS spanning forest: `o[v]` is `true` when
    /// `v` has to be flipped so that every tree edge becomes positive.
    fn tree_orientation(&self) -> Vec<bool> {
        let n = self.vertex_count();
        let mut flip: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if flip[s].is_some() {
                continue;
            }
            flip[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, e) in &self.incident[u] {
                    if flip[w].is_none() {
                        flip[w] = Some(flip[u].unwrap() ^ self.signs[e].is_negative());
                        queue.push_back(w);
                    }
                }
            }
        }
        flip.into_iter().map(|f| f.unwrap_or(false)).collect()
    }

    /// Whether the (connected) embedding lives on an orientable surface.
    pub fn is_orientable(&self) -> Result<bool, EmbeddingError> {
        let comps = self.component_count();
        if comps != 1 {
            return Err(EmbeddingError::Disconnected(comps));
        }
        let flip = self.tree_orientation();
        Ok((0..self.edge_count()).all(|e| {
            let (u, v) = self.endpoints(e);
            !(self.signs[e].is_negative() ^ flip[u] ^ flip[v])
        }))
    }

    /// Sign product along a closed walk given by its edges.
    pub fn sign_product(&self, edges: impl IntoIterator<Item = EdgeId>) -> Sign {
        let negatives = edges.into_iter().filter(|&e| self.signs[e].is_negative()).count();
        if negatives % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// The same embedding described with `v`'s local orientation reversed.
    pub fn with_vertex_flipped(&self, v: VertexId) -> EmbeddedGraph {
        let mut rotation = self.rotation.clone();
        let mut signs = self.signs.clone();
        rotation[v].reverse();
        for &d in &self.rotation[v] {
            signs[d.edge()] = signs[d.edge()].flipped();
        }
        EmbeddedGraph::new(rotation, signs).expect("flipping preserves validity")
    }

    /// Restriction to the vertices in `keep` (sorted ascending in the result;
    /// new vertex `i` is `keep_sorted[i]`). Edges with an endpoint outside
    /// are deleted, which never increases the Euler genus.
    pub fn restrict(&self, keep: &[VertexId]) -> (EmbeddedGraph, Vec<VertexId>) {
        let mut verts = keep.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut edge_map = vec![usize::MAX; self.edge_count()];
        let mut signs = Vec::new();
        for e in 0..self.edge_count() {
            let (a, b) = self.endpoints(e);
            if index[a] != usize::MAX && index[b] != usize::MAX {
                edge_map[e] = signs.len();
                signs.push(self.signs[e]);
            }
        }
        let rotations = verts
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|d| edge_map[d.edge()] != usize::MAX)
                    .map(|d| Dart::new(edge_map[d.edge()], d.end()))
                    .collect()
            })
            .collect();
        let g = EmbeddedGraph::new(rotations, signs).expect("restriction stays valid");
        (g, verts)
    }

    /// Components as separate embeddings with their vertex lists.
    pub fn split_components(&self) -> Vec<(EmbeddedGraph, Vec<VertexId>)> {
        self.graph.components().iter().map(|c| self.restrict(c)).collect()
    }
}

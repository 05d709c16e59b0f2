//! Surface surgery on signed rotation systems: contracting a connected
//! subgraph, cutting along a cycle, identifying two vertices.

use super::{Dart, EdgeId, EmbeddedGraph, EmbeddingError, Sign};
use crate::graph::VertexId;

/// Mutable scratch copy of a rotation system. Vertices and edges are only
/// marked dead; [`Work::compact`] renumbers.
#[derive(Clone)]
struct Work {
    rot: Vec<Vec<Dart>>,
    vertex_alive: Vec<bool>,
    signs: Vec<Sign>,
    edge_alive: Vec<bool>,
    dart_vertex: Vec<VertexId>,
}

impl Work {
    fn new(g: &EmbeddedGraph) -> Self {
        Self {
            rot: g.rotation.clone(),
            vertex_alive: vec![true; g.vertex_count()],
            signs: g.signs.clone(),
            edge_alive: vec![true; g.edge_count()],
            dart_vertex: g.dart_vertex.clone(),
        }
    }

    /// Reverse the local orientation at `v`. Loops at `v` are negated twice.
    fn flip(&mut self, v: VertexId) {
        self.rot[v].reverse();
        for &d in &self.rot[v] {
            let e = d.edge();
            self.signs[e] = self.signs[e].flipped();
        }
    }

    fn rotate_to(&mut self, v: VertexId, d: Dart) {
        let i = self.rot[v].iter().position(|&x| x == d).expect("dart at vertex");
        self.rot[v].rotate_left(i);
    }

    /// Contract the non-loop edge `e`, keeping endpoint `keep`.
    fn contract_edge(&mut self, e: EdgeId, keep: VertexId) {
        let (d0, d1) = (Dart::new(e, 0), Dart::new(e, 1));
        let (dk, dr) = if self.dart_vertex[d0.0] == keep { (d0, d1) } else { (d1, d0) };
        let gone = self.dart_vertex[dr.0];
        debug_assert_ne!(gone, keep);
        if self.signs[e].is_negative() {
            self.flip(gone);
        }
        self.rotate_to(keep, dk);
        self.rotate_to(gone, dr);
        let tail = std::mem::take(&mut self.rot[gone]);
        for &d in &tail[1..] {
            self.dart_vertex[d.0] = keep;
        }
        let head = self.rot[keep].split_off(1);
        self.rot[keep] = head.into_iter().chain(tail.into_iter().skip(1)).collect();
        self.edge_alive[e] = false;
        self.vertex_alive[gone] = false;
    }

    fn delete_edge(&mut self, e: EdgeId) {
        for d in [Dart::new(e, 0), Dart::new(e, 1)] {
            let v = self.dart_vertex[d.0];
            self.rot[v].retain(|&x| x != d);
        }
        self.edge_alive[e] = false;
    }

    /// Delete loops and all but the lowest-id edge of each parallel class.
    fn simplify(&mut self) {
        let mut seen = std::collections::HashSet::new();
        for e in 0..self.edge_alive.len() {
            if !self.edge_alive[e] {
                continue;
            }
            let (a, b) = (self.dart_vertex[2 * e], self.dart_vertex[2 * e + 1]);
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                self.delete_edge(e);
            }
        }
    }

    /// Renumber alive vertices and edges in increasing order. Returns the
    /// graph and the old-to-new vertex map (`usize::MAX` for dead vertices).
    fn compact(&self) -> (EmbeddedGraph, Vec<VertexId>) {
        let mut vmap = vec![usize::MAX; self.rot.len()];
        let mut next = 0;
        for (v, &alive) in self.vertex_alive.iter().enumerate() {
            if alive {
                vmap[v] = next;
                next += 1;
            }
        }
        let mut emap = vec![usize::MAX; self.signs.len()];
        let mut signs = Vec::new();
        for (e, &alive) in self.edge_alive.iter().enumerate() {
            if alive {
                emap[e] = signs.len();
                signs.push(self.signs[e]);
            }
        }
        let rotations = self
            .rot
            .iter()
            .enumerate()
            .filter(|(v, _)| self.vertex_alive[*v])
            .map(|(_, r)| r.iter().map(|d| Dart::new(emap[d.edge()], d.end())).collect())
            .collect();
        let g = EmbeddedGraph::new(rotations, signs).expect("surgery keeps the system valid");
        (g, vmap)
    }
}

/// Result of contracting a connected vertex set.
#[derive(Clone, Debug)]
pub struct Contracted {
    pub graph: EmbeddedGraph,
    /// Old vertex to new vertex; every member of the set maps to `merged`.
    pub vertex_map: Vec<VertexId>,
    pub merged: VertexId,
}

/// A face created by cutting, as its boundary vertices in the cut graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidedFace {
    pub vertices: Vec<VertexId>,
}

/// Result of cutting along a cycle.
#[derive(Clone, Debug)]
pub struct CutResult {
    pub graph: EmbeddedGraph,
    /// New vertex to the original vertex it is a copy of.
    pub origin: Vec<VertexId>,
    /// One face (length `2l`) for a 1-sided cycle, two faces otherwise.
    pub faces: Vec<SidedFace>,
    pub one_sided: bool,
}

/// Result of identifying two vertices.
#[derive(Clone, Debug)]
pub struct Identified {
    pub graph: EmbeddedGraph,
    pub vertex_map: Vec<VertexId>,
    pub genus_before: usize,
    pub genus_after: usize,
}

impl EmbeddedGraph {
    /// `G/H` for a connected vertex set `H`. A BFS tree of `H` is contracted
    /// edge by edge (each contraction keeps the surface), then loops and
    /// parallel edges are deleted, which can only lower the Euler genus.
    /// Surviving vertices keep their relative order; the merged vertex sits
    /// in the slot of `min(H)`.
    pub fn contract_subgraph(&self, set: &[VertexId]) -> Result<Contracted, EmbeddingError> {
        if set.is_empty() {
            return Err(EmbeddingError::EmptySet);
        }
        if let Some(&v) = set.iter().find(|&&v| v >= self.vertex_count()) {
            return Err(EmbeddingError::UnknownVertex(v));
        }
        if !self.graph.induces_connected(set) {
            return Err(EmbeddingError::SetNotConnected);
        }
        let mut inside = vec![false; self.vertex_count()];
        for &v in set {
            inside[v] = true;
        }
        let root = *set.iter().min().unwrap();
        let mut work = Work::new(self);
        let mut reached = vec![false; self.vertex_count()];
        reached[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in self.graph.neighbors(u) {
                if inside[w] && !reached[w] {
                    reached[w] = true;
                    let e = self.edge_between(u, w).unwrap();
                    work.contract_edge(e, root);
                    queue.push_back(w);
                }
            }
        }
        work.simplify();
        let (graph, mut vmap) = work.compact();
        let merged = vmap[root];
        for v in 0..self.vertex_count() {
            if inside[v] {
                vmap[v] = merged;
            }
        }
        Ok(Contracted { graph, vertex_map: vmap, merged })
    }

    fn check_cycle(&self, cycle: &[VertexId]) -> Result<Vec<EdgeId>, EmbeddingError> {
        let l = cycle.len();
        if l < 3 {
            return Err(EmbeddingError::NotACycle(format!("length {l} < 3")));
        }
        let mut seen = vec![false; self.vertex_count()];
        for &v in cycle {
            if v >= self.vertex_count() {
                return Err(EmbeddingError::UnknownVertex(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(EmbeddingError::NotACycle(format!("vertex {v} repeated")));
            }
        }
        (0..l)
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % l]);
                self.edge_between(a, b)
                    .ok_or_else(|| EmbeddingError::NotACycle(format!("{a}-{b} is not an edge")))
            })
            .collect()
    }

    /// Cut the surface along the cycle `v_0 v_1 ... v_{l-1}`.
    ///
    /// Each cycle vertex `v_i` splits into two copies: `v_i` itself keeps the
    /// darts on one side of the cycle and the new vertex `n + i` the darts on
    /// the other; cycle edge `e_i` is doubled (the copy on the second side
    /// gets id `m + i`). Signs along `v_0 ... v_{l-1}` are first normalized
    /// to `+` by vertex flips; the closing edge then carries the sidedness.
    /// For a 2-sided cycle each side becomes a face of length `l`; for a
    /// 1-sided cycle the sides join into one face of length `2l`, its copies
    /// of the closing edge staying negative.
    pub fn cut_along_cycle(&self, cycle: &[VertexId]) -> Result<CutResult, EmbeddingError> {
        let cycle_edges = self.check_cycle(cycle)?;
        let (n, m, l) = (self.vertex_count(), self.edge_count(), cycle.len());
        let mut work = Work::new(self);
        for i in 1..l {
            if work.signs[cycle_edges[i - 1]].is_negative() {
                work.flip(cycle[i]);
            }
        }
        let one_sided = work.signs[cycle_edges[l - 1]].is_negative();

        // Dart of copy `side` (0 = kept, 1 = new) of cycle edge `i` at its
        // `v_i` end (`far == false`) or its `v_{i+1}` end.
        let copy_dart = |i: usize, side: usize, far: bool| -> Dart {
            if side == 0 {
                let d = self.dart_at(cycle_edges[i], cycle[i]);
                if far {
                    d.twin()
                } else {
                    d
                }
            } else {
                Dart::new(m + i, usize::from(far))
            }
        };
        let out_dart = |i: usize, side: usize| copy_dart(i, side, false);
        let in_dart = |i: usize, side: usize| {
            let prev = (i + l - 1) % l;
            if i == 0 && one_sided {
                copy_dart(prev, 1 - side, true)
            } else {
                copy_dart(prev, side, true)
            }
        };

        let mut rot = work.rot.clone();
        rot.resize(n + l, Vec::new());
        for i in 0..l {
            let v = cycle[i];
            let out = self.dart_at(cycle_edges[i], v);
            let inn = self.dart_at(cycle_edges[(i + l - 1) % l], v);
            let mut r = work.rot[v].clone();
            let p = r.iter().position(|&d| d == out).unwrap();
            r.rotate_left(p);
            let q = r.iter().position(|&d| d == inn).unwrap();
            let side_a = &r[1..q];
            let side_b = &r[q + 1..];
            let mut ra = vec![out_dart(i, 0)];
            ra.extend_from_slice(side_a);
            ra.push(in_dart(i, 0));
            let mut rb = vec![in_dart(i, 1)];
            rb.extend_from_slice(side_b);
            rb.push(out_dart(i, 1));
            rot[v] = ra;
            rot[n + i] = rb;
        }
        let mut signs = work.signs.clone();
        for &e in &cycle_edges {
            signs.push(work.signs[e]);
        }
        let graph = EmbeddedGraph::new(rot, signs).expect("cut system is valid");
        let mut origin: Vec<VertexId> = (0..n).collect();
        origin.extend_from_slice(cycle);
        let copies: Vec<VertexId> = (n..n + l).collect();
        let faces = if one_sided {
            let mut all = cycle.to_vec();
            all.extend(copies);
            vec![SidedFace { vertices: all }]
        } else {
            vec![SidedFace { vertices: cycle.to_vec() }, SidedFace { vertices: copies }]
        };
        Ok(CutResult { graph, origin, faces, one_sided })
    }

    /// Delete vertex `v` with its incident edges.
    pub fn remove_vertex(&self, v: VertexId) -> Result<(EmbeddedGraph, Vec<VertexId>), EmbeddingError> {
        if v >= self.vertex_count() {
            return Err(EmbeddingError::UnknownVertex(v));
        }
        let keep: Vec<VertexId> = (0..self.vertex_count()).filter(|&x| x != v).collect();
        Ok(self.restrict(&keep))
    }

    /// Identify the non-adjacent vertices `u` and `w`. Every pair of corners
    /// (one at `u`, one at `w`, with `w` optionally flipped) is tried and the
    /// splice of lowest resulting Euler genus kept; ties go to the lowest
    /// dart ids. The merged vertex takes `u`'s slot when `u < w`.
    pub fn identify_vertices(&self, u: VertexId, w: VertexId) -> Result<Identified, EmbeddingError> {
        for x in [u, w] {
            if x >= self.vertex_count() {
                return Err(EmbeddingError::UnknownVertex(x));
            }
        }
        if u == w {
            return Err(EmbeddingError::SameVertex(u));
        }
        if self.graph.has_edge(u, w) {
            return Err(EmbeddingError::Adjacent(u, w));
        }
        let (keep, gone) = (u.min(w), u.max(w));
        let genus_before = self.total_euler_genus();
        let corners = |len: usize| 0..len.max(1);
        let mut best: Option<((usize, usize, usize, bool), EmbeddedGraph, Vec<VertexId>)> = None;
        for flip in [false, true] {
            let mut base = Work::new(self);
            if flip {
                base.flip(gone);
            }
            for i in corners(base.rot[keep].len()) {
                for j in corners(base.rot[gone].len()) {
                    let mut work = base.clone();
                    let open = |r: &Vec<Dart>, at: usize| -> Vec<Dart> {
                        if r.is_empty() {
                            return Vec::new();
                        }
                        r[at + 1..].iter().chain(&r[..=at]).copied().collect()
                    };
                    let a = open(&work.rot[keep], i);
                    let b = open(&work.rot[gone], j);
                    for &d in &b {
                        work.dart_vertex[d.0] = keep;
                    }
                    work.rot[keep] = a.into_iter().chain(b).collect();
                    work.rot[gone].clear();
                    work.vertex_alive[gone] = false;
                    work.simplify();
                    let (g, vmap) = work.compact();
                    let genus = g.total_euler_genus();
                    let dart_key = |r: &Vec<Dart>, at: usize| r.get(at).map_or(0, |d| d.0);
                    let key = (genus, dart_key(&base.rot[keep], i), dart_key(&base.rot[gone], j), flip);
                    if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                        best = Some((key, g, vmap));
                    }
                }
            }
        }
        let (key, graph, mut vertex_map) = best.expect("at least one splice");
        vertex_map[gone] = vertex_map[keep];
        Ok(Identified { graph, vertex_map, genus_before, genus_after: key.0 })
    }
}

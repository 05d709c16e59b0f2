//! Cycle classification and shortest non-contractible cycles.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::embedding::{Dart, EmbeddedGraph, EmbeddingError, Sign};
use crate::graph::{SimpleGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertices {0} and {1} lie in different components")]
    DifferentComponents(VertexId, VertexId),
}

/// A cycle given by its cyclic vertex sequence; `darts[i]` leaves
/// `vertices[i]` towards `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWalk {
    pub vertices: Vec<VertexId>,
    pub darts: Vec<Dart>,
}

impl CycleWalk {
    pub fn new(g: &EmbeddedGraph, vertices: Vec<VertexId>) -> Result<Self, EmbeddingError> {
        let l = vertices.len();
        if l < 3 {
            return Err(EmbeddingError::NotACycle(format!("length {l} < 3")));
        }
        let mut seen = BTreeSet::new();
        let mut darts = Vec::with_capacity(l);
        for i in 0..l {
            let (a, b) = (vertices[i], vertices[(i + 1) % l]);
            if a >= g.vertex_count() {
                return Err(EmbeddingError::UnknownVertex(a));
            }
            if !seen.insert(a) {
                return Err(EmbeddingError::NotACycle(format!("vertex {a} repeated")));
            }
            let e = g
                .edge_between(a, b)
                .ok_or_else(|| EmbeddingError::NotACycle(format!("{a}-{b} is not an edge")))?;
            darts.push(g.dart_at(e, a));
        }
        Ok(Self { vertices, darts })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d.edge())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleClass {
    Contractible,
    TwoSidedSeparating,
    TwoSidedNonseparating,
    OneSided,
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleClass::Contractible => "contractible",
            CycleClass::TwoSidedSeparating => "two_sided_separating",
            CycleClass::TwoSidedNonseparating => "two_sided_nonseparating",
            CycleClass::OneSided => "one_sided",
        })
    }
}

/// BFS from `u`, scanning neighbors in increasing id order; the returned
/// path runs from `u` to `w`.
pub fn shortest_path(g: &SimpleGraph, u: VertexId, w: VertexId) -> Result<Vec<VertexId>, TopologyError> {
    shortest_path_between(g, &[u], &[w])
        .map_err(|e| match e {
            TopologyError::DifferentComponents(..) => TopologyError::DifferentComponents(u, w),
            other => other,
        })
}

/// Shortest path from any vertex of `from` to any vertex of `to`
/// (multi-source BFS with lowest-id tie-breaking). For single-vertex ends,
/// the "at most 3 neighbors on a shortest path" property is asserted.
pub fn shortest_path_between(
    g: &SimpleGraph,
    from: &[VertexId],
    to: &[VertexId],
) -> Result<Vec<VertexId>, TopologyError> {
    let n = g.vertex_count();
    for &v in from.iter().chain(to) {
        if v >= n {
            return Err(TopologyError::UnknownVertex(v));
        }
    }
    let mut target = vec![false; n];
    for &v in to {
        target[v] = true;
    }
    let mut sources = from.to_vec();
    sources.sort_unstable();
    sources.dedup();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in &sources {
        seen[s] = true;
        queue.push_back(s);
    }
    let mut end = None;
    while let Some(x) = queue.pop_front() {
        if target[x] {
            end = Some(x);
            break;
        }
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let Some(mut x) = end else {
        let a = sources.first().copied().unwrap_or(0);
        let b = to.iter().min().copied().unwrap_or(0);
        return Err(TopologyError::DifferentComponents(a, b));
    };
    let mut path = vec![x];
    while parent[x] != usize::MAX {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    if from.len() == 1 && to.len() == 1 {
        assert!(
            g.max_neighbors_in(&path) <= 3,
            "a shortest path has at most 3 neighbors of any vertex"
        );
    }
    Ok(path)
}

/// Decide the class of a cycle by cutting along it: sidedness is the sign
/// product, separation the component count of the cut, and a separating
/// cycle is contractible iff one side caps off to a sphere (a disk).
pub fn classify_cycle(g: &EmbeddedGraph, cycle: &[VertexId]) -> Result<CycleClass, TopologyError> {
    let walk = CycleWalk::new(g, cycle.to_vec())?;
    let cut = g.cut_along_cycle(cycle)?;
    if g.sign_product(walk.edges()) == Sign::Minus {
        debug_assert!(cut.one_sided);
        return Ok(CycleClass::OneSided);
    }
    let base = g.component_count();
    let after = cut.graph.component_count();
    if after == base {
        return Ok(CycleClass::TwoSidedNonseparating);
    }
    // The two pieces are the components holding the two marked faces.
    let comps = cut.graph.graph().components();
    let piece_of = |v: VertexId| comps.iter().position(|c| c.contains(&v)).unwrap();
    let pieces = [piece_of(cut.faces[0].vertices[0]), piece_of(cut.faces[1].vertices[0])];
    let disk = pieces.iter().any(|&p| {
        let (piece, _) = cut.graph.restrict(&comps[p]);
        piece.euler_genus() == Ok(0)
    });
    Ok(if disk { CycleClass::Contractible } else { CycleClass::TwoSidedSeparating })
}

pub fn is_contractible(g: &EmbeddedGraph, cycle: &[VertexId]) -> Result<bool, TopologyError> {
    Ok(classify_cycle(g, cycle)? == CycleClass::Contractible)
}

/// Rotate and orient a cyclic sequence so that it starts at its minimum and
/// continues towards the smaller of that vertex's two cycle neighbors.
pub fn canonical_cycle(cycle: &[VertexId]) -> Vec<VertexId> {
    let l = cycle.len();
    let (i, _) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).unwrap();
    let forward: Vec<VertexId> = (0..l).map(|k| cycle[(i + k) % l]).collect();
    let backward: Vec<VertexId> = (0..l).map(|k| cycle[(i + l - k) % l]).collect();
    forward.min(backward)
}

/// Fundamental cycles of the BFS tree rooted at `root` (neighbors scanned in
/// increasing id order), in canonical form.
fn fundamental_cycles(g: &SimpleGraph, root: VertexId) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        if depth[a] == usize::MAX || parent[a] == b || parent[b] == a {
            continue;
        }
        let (mut x, mut y) = (a, b);
        let mut left = vec![x];
        let mut right = vec![y];
        while depth[x] > depth[y] {
            x = parent[x];
            left.push(x);
        }
        while depth[y] > depth[x] {
            y = parent[y];
            right.push(y);
        }
        while x != y {
            x = parent[x];
            y = parent[y];
            left.push(x);
            right.push(y);
        }
        right.pop();
        right.reverse();
        left.extend(right);
        out.push(canonical_cycle(&left));
    }
    out
}

/// A shortest non-contractible cycle, or `None` on the sphere.
///
/// Candidates are the fundamental cycles of BFS trees from every root; they
/// are tested in order of length, then lexicographic canonical sequence, and
/// the first non-contractible one is returned.
pub fn shortest_noncontractible_cycle(g: &EmbeddedGraph) -> Result<Option<CycleWalk>, TopologyError> {
    if g.euler_genus()? == 0 {
        return Ok(None);
    }
    let mut candidates = BTreeSet::new();
    for root in 0..g.vertex_count() {
        for c in fundamental_cycles(g.graph(), root) {
            candidates.insert((c.len(), c));
        }
    }
    for (_, c) in candidates {
        if !is_contractible(g, &c)? {
            return Ok(Some(CycleWalk::new(g, c)?));
        }
    }
    unreachable!("an embedding of positive genus has a non-contractible fundamental cycle")
}

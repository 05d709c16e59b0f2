//! Simple undirected graphs with sorted adjacency lists.
//!
//! Every algorithm that does not care about the embedding (BFS, girth,
//! quotients, coloring) works on [`SimpleGraph`]. Vertices are `0..n`.

use std::collections::VecDeque;

use thiserror::Error;

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<VertexId>>,
    edges: usize,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n], edges: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self { adj, edges: count })
    }

    /// Builds from adjacency lists that are already known to be simple and
    /// symmetric; lists are sorted here.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<VertexId>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            twice += list.len();
        }
        Self { adj, edges: twice / 2 }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// BFS distances from `source`; unreachable vertices get `None`.
    pub fn distances(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Whether `set` is nonempty and induces a connected subgraph.
    pub fn induces_connected(&self, set: &[VertexId]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.vertex_count()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.vertex_count()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        reached == distinct
    }

    /// Induced subgraph on `set`; returns it with the list of original ids
    /// (new vertex `i` is `set_sorted[i]`).
    pub fn induced(&self, set: &[VertexId]) -> (SimpleGraph, Vec<VertexId>) {
        let mut verts = set.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        (SimpleGraph::from_adjacency_unchecked(adj), verts)
    }

    /// The simple quotient `G/S`: every vertex of `set` is merged into one
    /// vertex, loops and parallel edges are dropped. Surviving vertices keep
    /// their relative order and the merged vertex takes the slot of the
    /// smallest member of `set`. Returns the quotient and the vertex map.
    pub fn contract(&self, set: &[VertexId]) -> (SimpleGraph, Vec<VertexId>) {
        let n = self.vertex_count();
        let mut inside = vec![false; n];
        for &v in set {
            inside[v] = true;
        }
        let anchor = set.iter().copied().min();
        let mut map = vec![0; n];
        let mut next = 0;
        let mut merged_id = None;
        for v in 0..n {
            if inside[v] {
                if Some(v) == anchor {
                    merged_id = Some(next);
                    map[v] = next;
                    next += 1;
                }
            } else {
                map[v] = next;
                next += 1;
            }
        }
        if let Some(m) = merged_id {
            for v in 0..n {
                if inside[v] {
                    map[v] = m;
                }
            }
        }
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); next];
        for (u, v) in self.edges() {
            let (a, b) = (map[u], map[v]);
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        (SimpleGraph::from_adjacency_unchecked(adj), map)
    }

    /// Largest number of neighbors any vertex has inside `set`.
    pub fn max_neighbors_in(&self, set: &[VertexId]) -> usize {
        let mut inside = vec![false; self.vertex_count()];
        for &v in set {
            inside[v] = true;
        }
        self.adj
            .iter()
            .map(|list| list.iter().filter(|&&w| inside[w]).count())
            .max()
            .unwrap_or(0)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return true,
                }
            }
            false
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Self::from_adjacency_unchecked(adj)
    }

    /// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }
}

/// Incremental builder used by the generators. Edges are validated once in
/// [`GraphBuilder::finish`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    adj: Vec<Vec<VertexId>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_vertices(&mut self, count: usize) -> std::ops::Range<VertexId> {
        let start = self.adj.len();
        self.adj.resize(start + count, Vec::new());
        start..start + count
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    /// Adds a disjoint copy of `g`, returning the id of its vertex 0.
    pub fn add_copy(&mut self, g: &SimpleGraph) -> VertexId {
        let offset = self.add_vertices(g.vertex_count()).start;
        for (u, v) in g.edges() {
            self.add_edge(offset + u, offset + v);
        }
        offset
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn adjacency(&self) -> &[Vec<VertexId>] {
        &self.adj
    }

    pub fn finish(mut self) -> Result<SimpleGraph, GraphError> {
        let mut twice = 0;
        for (u, list) in self.adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.binary_search(&u).is_ok() {
                return Err(GraphError::Loop(u));
            }
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
            twice += list.len();
        }
        Ok(SimpleGraph { adj: self.adj, edges: twice / 2 })
    }
}

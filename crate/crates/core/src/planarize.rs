//! Connected subgraphs whose contraction leaves a planar graph while every
//! vertex keeps few neighbors inside them.
//!
//! The recursion cuts along a shortest non-contractible cycle `C`:
//!
//! * separating: each side gets its copy of `C` contracted; the side holding
//!   the root is solved with the two-point variant (root and contracted
//!   face), the other side with the rooted variant;
//! * 1-sided: the single face left by `C` is contracted and the two-point
//!   variant is run on the root and that vertex;
//! * non-separating: the two faces left by `C` are joined by a shortest path
//!   `P`, everything is contracted, and the two-point variant is run.
//!
//! The two-point variant contracts a shortest path between its two vertices
//! and recurses with the rooted variant unless the result is planar. Each
//! level checks its own result (connectivity, roots, planarity of the
//! quotient, neighbor bound) and reports a violation as an error.

use rustworkx_core::petgraph::graph::UnGraph;
use thiserror::Error;

use crate::embedding::{EmbeddedGraph, EmbeddingError};
use crate::graph::{SimpleGraph, VertexId};
use crate::topology::{self, CycleClass, TopologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarizeError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("embedding has Euler genus 0; nothing to planarize")]
    PlanarInput,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarizeResult {
    /// Vertices of `H`, ascending.
    pub h_vertices: Vec<VertexId>,
    /// `G/H`, with the vertex numbering of [`SimpleGraph::contract`].
    pub quotient: SimpleGraph,
    /// Vertex of `G` to vertex of the quotient.
    pub quotient_map: Vec<VertexId>,
    /// The quotient vertex that `H` became.
    pub h_vertex: VertexId,
    pub max_neighbors_in_h: usize,
    pub bound: usize,
    /// Euler genus of the input embedding.
    pub genus: usize,
    /// Class of the cycle cut at the top level (`None` for a planar
    /// two-point instance).
    pub top_case: Option<CycleClass>,
}

/// Planarity test (left-right planarity).
pub fn is_planar(g: &SimpleGraph) -> bool {
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(g.vertex_count(), g.edge_count());
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    rustworkx_core::planar::is_planar(&pg)
}

/// `9g - 4`.
pub fn rooted_bound(genus: usize) -> usize {
    (9 * genus).saturating_sub(4)
}

/// `max{3, 9g' - 2}`.
pub fn two_point_bound(genus: usize) -> usize {
    (9 * genus).saturating_sub(2).max(3)
}

/// `H` containing `root` with `G/H` planar and at most `9g - 4` neighbors in
/// `H` for every vertex, where `g > 0` is the Euler genus of `g`.
pub fn planarizing_subgraph(g: &EmbeddedGraph, root: VertexId) -> Result<PlanarizeResult, PlanarizeError> {
    if root >= g.vertex_count() {
        return Err(PlanarizeError::UnknownVertex(root));
    }
    let genus = g.euler_genus()?;
    if genus == 0 {
        return Err(PlanarizeError::PlanarInput);
    }
    let (h, case) = rooted(g, root)?;
    Ok(summarize(g, h, rooted_bound(genus), genus, Some(case)))
}

/// `H` containing `u` and `w` with `G/H` planar and at most
/// `max{3, 9g' - 2}` neighbors in `H` for every vertex. On the sphere `H` is a
/// shortest `u`-`w` path.
pub fn planarizing_subgraph_2pt(
    g: &EmbeddedGraph,
    u: VertexId,
    w: VertexId,
) -> Result<PlanarizeResult, PlanarizeError> {
    for x in [u, w] {
        if x >= g.vertex_count() {
            return Err(PlanarizeError::UnknownVertex(x));
        }
    }
    let genus = g.euler_genus()?;
    let (h, case) = two_point(g, u, w)?;
    Ok(summarize(g, h, two_point_bound(genus), genus, case))
}

fn summarize(
    g: &EmbeddedGraph,
    h: Vec<VertexId>,
    bound: usize,
    genus: usize,
    top_case: Option<CycleClass>,
) -> PlanarizeResult {
    let (quotient, quotient_map) = g.graph().contract(&h);
    let h_vertex = quotient_map[h[0]];
    let max_neighbors_in_h = g.graph().max_neighbors_in(&h);
    PlanarizeResult { h_vertices: h, quotient, quotient_map, h_vertex, max_neighbors_in_h, bound, genus, top_case }
}

fn check(
    g: &EmbeddedGraph,
    h: &[VertexId],
    roots: &[VertexId],
    bound: usize,
    what: &str,
) -> Result<(), PlanarizeError> {
    let fail = |msg: String| Err(PlanarizeError::Invariant(format!("{what}: {msg}")));
    if !g.graph().induces_connected(h) {
        return fail("H is not connected".into());
    }
    if let Some(r) = roots.iter().find(|r| h.binary_search(r).is_err()) {
        return fail(format!("H misses vertex {r}"));
    }
    let (quotient, _) = g.graph().contract(h);
    if !is_planar(&quotient) {
        return fail("G/H is not planar".into());
    }
    let most = g.graph().max_neighbors_in(h);
    if most > bound {
        return fail(format!("a vertex has {most} neighbors in H, bound {bound}"));
    }
    Ok(())
}

fn sorted(mut set: Vec<VertexId>) -> Vec<VertexId> {
    set.sort_unstable();
    set.dedup();
    set
}

/// All vertices `x` (in the numbering `ids`) with `map[x]` in `star`.
fn preimage(star: &[VertexId], map: &[VertexId], ids: impl Fn(VertexId) -> VertexId) -> Vec<VertexId> {
    (0..map.len()).filter(|&x| star.binary_search(&map[x]).is_ok()).map(ids).collect()
}

fn rooted(g: &EmbeddedGraph, v: VertexId) -> Result<(Vec<VertexId>, CycleClass), PlanarizeError> {
    let genus = g.euler_genus()?;
    debug_assert!(genus > 0);
    let cycle = topology::shortest_noncontractible_cycle(g)?
        .ok_or_else(|| PlanarizeError::Invariant("positive genus but no non-contractible cycle".into()))?;
    let c = cycle.vertices;
    let cut = g.cut_along_cycle(&c)?;
    let origin = |x: VertexId| cut.origin[x];

    if cut.one_sided {
        let g_cut = &cut.graph;
        let sub = g_cut.euler_genus()?;
        if sub + 1 > genus {
            return Err(PlanarizeError::Invariant(format!("1-sided cut left genus {sub} from {genus}")));
        }
        let contracted = g_cut.contract_subgraph(&cut.faces[0].vertices)?;
        let star = contracted.merged;
        let (h_star, _) = two_point(&contracted.graph, contracted.vertex_map[v], star)?;
        let mut h = preimage(&h_star, &contracted.vertex_map, origin);
        h.extend_from_slice(&c);
        let h = sorted(h);
        // A vertex sees at most 2 (on C) or 3 (off C, one of them standing
        // in for v*) vertices of C on top of its neighbors in H*.
        let bound = (two_point_bound(sub) + 2).min(rooted_bound(genus));
        check(g, &h, &[v], bound, "1-sided case")?;
        return Ok((h, CycleClass::OneSided));
    }

    let pieces = cut.graph.split_components();
    match pieces.len() {
        1 => {
            let g_cut = &cut.graph;
            let sub = g_cut.euler_genus()?;
            if sub + 2 > genus {
                return Err(PlanarizeError::Invariant(format!(
                    "non-separating cut left genus {sub} from {genus}"
                )));
            }
            let path = topology::shortest_path_between(
                g_cut.graph(),
                &cut.faces[0].vertices,
                &cut.faces[1].vertices,
            )?;
            let mut blob = cut.faces[0].vertices.clone();
            blob.extend_from_slice(&cut.faces[1].vertices);
            blob.extend_from_slice(&path);
            let contracted = g_cut.contract_subgraph(&sorted(blob))?;
            let star = contracted.merged;
            let (h_star, _) = two_point(&contracted.graph, contracted.vertex_map[v], star)?;
            let mut h = preimage(&h_star, &contracted.vertex_map, origin);
            h.extend_from_slice(&c);
            h.extend(path.iter().map(|&x| origin(x)));
            let h = sorted(h);
            let bound = (two_point_bound(sub) + 5).min(9 * genus - 10);
            check(g, &h, &[v], bound, "non-separating case")?;
            Ok((h, CycleClass::TwoSidedNonseparating))
        }
        2 => {
            let side_of = |x: VertexId| pieces.iter().position(|(_, verts)| verts.binary_search(&x).is_ok()).unwrap();
            let first = side_of(v);
            let face_in = |p: usize| {
                cut.faces
                    .iter()
                    .find(|f| side_of(f.vertices[0]) == p)
                    .expect("each side holds one copy of the cycle")
            };
            let local = |p: usize, x: VertexId| pieces[p].1.binary_search(&x).unwrap();
            let mut h = c.clone();
            for (p, is_root_side) in [(first, true), (1 - first, false)] {
                let (piece, verts) = &pieces[p];
                let face: Vec<VertexId> = face_in(p).vertices.iter().map(|&x| local(p, x)).collect();
                let contracted = piece.contract_subgraph(&face)?;
                let star = contracted.merged;
                let h_star = if is_root_side {
                    two_point(&contracted.graph, contracted.vertex_map[local(p, v)], star)?.0
                } else if contracted.graph.euler_genus()? == 0 {
                    vec![star]
                } else {
                    rooted(&contracted.graph, star)?.0
                };
                h.extend(preimage(&h_star, &contracted.vertex_map, |x| origin(verts[x])));
            }
            let h = sorted(h);
            check(g, &h, &[v], rooted_bound(genus), "separating case")?;
            Ok((h, CycleClass::TwoSidedSeparating))
        }
        k => Err(PlanarizeError::Invariant(format!("cutting along a cycle left {k} components"))),
    }
}

fn two_point(
    g: &EmbeddedGraph,
    u: VertexId,
    w: VertexId,
) -> Result<(Vec<VertexId>, Option<CycleClass>), PlanarizeError> {
    let genus = g.euler_genus()?;
    let path = topology::shortest_path(g.graph(), u, w)?;
    let (h, case) = if genus == 0 {
        (sorted(path), None)
    } else {
        let contracted = g.contract_subgraph(&path)?;
        let star = contracted.merged;
        let (h_star, case) = if contracted.graph.euler_genus()? == 0 {
            (vec![star], None)
        } else {
            let (h, case) = rooted(&contracted.graph, star)?;
            (h, Some(case))
        };
        let mut h = preimage(&h_star, &contracted.vertex_map, |x| x);
        h.extend_from_slice(&path);
        (sorted(h), case)
    };
    check(g, &h, &[u, w], two_point_bound(genus), "two-point variant")?;
    Ok((h, case))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::fixtures;

    #[test]
    fn planarity_of_small_graphs() {
        assert!(is_planar(&SimpleGraph::complete(4)));
        assert!(!is_planar(&SimpleGraph::complete(5)));
        let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        assert!(!is_planar(&SimpleGraph::from_edges(6, k33.clone()).unwrap()));
        assert!(is_planar(&SimpleGraph::from_edges(6, k33[1..].to_vec()).unwrap()));
    }

    #[test]
    fn planar_input_is_rejected() {
        assert_eq!(planarizing_subgraph(&fixtures::planar_k4(), 0), Err(PlanarizeError::PlanarInput));
    }

    #[test]
    fn fixtures_meet_the_bound() {
        for g in [fixtures::torus_grid(3, 3), fixtures::toroidal_k7(), fixtures::projective_k5()] {
            for root in 0..g.vertex_count() {
                let r = planarizing_subgraph(&g, root).unwrap();
                assert!(r.h_vertices.contains(&root));
                assert!(is_planar(&r.quotient));
                assert!(r.max_neighbors_in_h <= r.bound);
                assert_eq!(r.bound, rooted_bound(r.genus));
            }
        }
    }

    #[test]
    fn two_point_on_the_sphere_is_a_shortest_path() {
        let w = fixtures::planar_wheel(6);
        let r = planarizing_subgraph_2pt(&w, 1, 4).unwrap();
        assert_eq!(r.h_vertices, vec![0, 1, 4]);
        assert!(r.max_neighbors_in_h <= 3);
        assert_eq!(r.bound, 3);
    }

    #[test]
    fn two_point_on_the_torus() {
        let g = fixtures::torus_grid(3, 3);
        let r = planarizing_subgraph_2pt(&g, 0, 1).unwrap();
        assert_eq!(r.bound, 16);
        assert!(r.h_vertices.contains(&0) && r.h_vertices.contains(&1));
        assert!(is_planar(&r.quotient));
        let same = planarizing_subgraph_2pt(&g, 4, 4).unwrap();
        assert!(same.h_vertices.contains(&4));
    }
}

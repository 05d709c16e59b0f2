//! Generators for the graphs showing that the defect bounds cannot be
//! improved much: sprouted cliques `S(H, k)`, the `K_4`-support graphs
//! `G_k`, thickened-edge gadgets (planar graphs that are not
//! `(1,k,k)`-colorable), the Descartes-style girth-6 graphs `H_k`, and the
//! double 2-star of girth 7.
//!
//! Every generator records the closed-form vertex and edge counts it is
//! supposed to meet and checks the materialized graph against them.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::{solve_exact, Color, ColoringError, DefectVector, SolveOptions, SolveOutcome};
use crate::graph::{GraphBuilder, GraphError, SimpleGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),
    #[error("the full graph has {edges} edges, above the limit of {limit}; use a sample or raise the limit")]
    TooLarge { edges: u128, limit: u128 },
    #[error("cannot add a 7-cycle: {0}")]
    TooClose(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimStatus {
    Verified,
    Unverified,
    Refuted,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Unverified => "unverified",
            ClaimStatus::Refuted => "refuted",
        })
    }
}

/// "No `defects`-coloring exists in which every pinned vertex has its
/// pinned color."
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonColorability {
    pub defects: DefectVector,
    pub pins: Vec<(VertexId, Color)>,
    pub status: ClaimStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleInfo {
    pub seed: u64,
    /// Index of the first 7-tuple (lexicographic order) in the window.
    pub start: u64,
    pub sets: u64,
    pub total_sets: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meta {
    pub family: String,
    pub parameter: u64,
    pub vertices: u64,
    pub edges: u64,
    pub girth_at_least: Option<usize>,
    pub claim: Option<NonColorability>,
    /// `m - n + 2` (the graphs are connected).
    pub euler_genus_at_most: u64,
    pub sample: Option<SampleInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedGraph {
    pub graph: SimpleGraph,
    pub meta: Meta,
}

fn finish(
    builder: GraphBuilder,
    family: &str,
    parameter: u64,
    vertices: u64,
    edges: u64,
    girth_at_least: Option<usize>,
    claim: Option<(DefectVector, Vec<(VertexId, Color)>)>,
) -> Result<GeneratedGraph, ConstructionError> {
    let graph = builder.finish()?;
    if graph.vertex_count() as u64 != vertices || graph.edge_count() as u64 != edges {
        return Err(ConstructionError::Invariant(format!(
            "{family}: built {} vertices / {} edges, expected {vertices} / {edges}",
            graph.vertex_count(),
            graph.edge_count()
        )));
    }
    if let Some(want) = girth_at_least {
        if graph.girth().is_some_and(|got| got < want) {
            return Err(ConstructionError::Invariant(format!("{family}: girth below {want}")));
        }
    }
    let meta = Meta {
        family: family.to_string(),
        parameter,
        vertices,
        edges,
        girth_at_least,
        claim: claim.map(|(defects, pins)| NonColorability { defects, pins, status: ClaimStatus::Unverified }),
        euler_genus_at_most: (edges + 2).saturating_sub(vertices),
        sample: None,
    };
    Ok(GeneratedGraph { graph, meta })
}

fn defects(d: &[usize]) -> DefectVector {
    DefectVector::new(d.to_vec()).expect("nonempty")
}

/// `(vertices, edges)` of `S(H, k)` for `H` with `n` vertices, `m` edges.
pub fn sprout_counts(n: u64, m: u64, k: u64) -> (u64, u64) {
    (n + k * n * n, m + k * n * (n + m))
}

/// `S(H, k)`: a basic copy of `H` and, for every basic vertex, `k` fresh
/// copies of `H` joined completely to it. Basic vertex `v` is vertex `v`;
/// its `j`-th copy starts at `n + (v * k + j) * n`.
pub fn sprout(h: &SimpleGraph, k: u64) -> Result<GeneratedGraph, ConstructionError> {
    let mut b = GraphBuilder::new();
    let n = h.vertex_count();
    b.add_copy(h);
    for v in 0..n {
        for _ in 0..k {
            let start = b.add_copy(h);
            for x in start..start + n {
                b.add_edge(v, x);
            }
        }
    }
    let (vc, ec) = sprout_counts(n as u64, h.edge_count() as u64, k);
    finish(b, "sprout", k, vc, ec, None, None)
}

/// `S(K_4, k + 1)`, not `(0,0,0,k)`-colorable.
pub fn g1(k: u64) -> Result<GeneratedGraph, ConstructionError> {
    let mut out = sprout(&SimpleGraph::complete(4), k + 1)?;
    out.meta.family = "g1".into();
    out.meta.parameter = k;
    out.meta.claim = Some(NonColorability {
        defects: defects(&[0, 0, 0, k as usize]),
        pins: Vec::new(),
        status: ClaimStatus::Unverified,
    });
    Ok(out)
}

/// `S(K_7, k + 1)`, not `(2,2,k)`-colorable.
pub fn g2(k: u64) -> Result<GeneratedGraph, ConstructionError> {
    let mut out = sprout(&SimpleGraph::complete(7), k + 1)?;
    out.meta.family = "g2".into();
    out.meta.parameter = k;
    out.meta.claim = Some(NonColorability {
        defects: defects(&[2, 2, k as usize]),
        pins: Vec::new(),
        status: ClaimStatus::Unverified,
    });
    Ok(out)
}

pub fn gk_counts(k: u64) -> (u64, u64) {
    (128 * k * k + 196 * k + 72, 448 * k * k + 694 * k + 252)
}

/// `G_k`: a basic `K_4` joined to `k + 1` further `K_4`s; each of those
/// support edges `uv` gets `2k + 1` new `K_4`s joined to both `u` and `v`.
/// Not `(2,k,k)`-colorable (nor `(0,0,k,k)`-colorable).
pub fn gk_2kk(k: u64) -> Result<GeneratedGraph, ConstructionError> {
    let k4 = SimpleGraph::complete(4);
    let mut b = GraphBuilder::new();
    b.add_copy(&k4);
    let mut support = Vec::new();
    for _ in 0..=k {
        let start = b.add_copy(&k4);
        for u in 0..4 {
            for x in start..start + 4 {
                b.add_edge(u, x);
                support.push((u, x));
            }
        }
    }
    for (u, v) in support {
        for _ in 0..2 * k + 1 {
            let start = b.add_copy(&k4);
            for x in start..start + 4 {
                b.add_edge(u, x);
                b.add_edge(v, x);
            }
        }
    }
    let (vc, ec) = gk_counts(k);
    finish(b, "gk", k, vc, ec, None, Some((defects(&[2, k as usize, k as usize]), Vec::new())))
}

fn add_thickening(b: &mut GraphBuilder, x: VertexId, y: VertexId, k: u64) {
    for _ in 0..2 * k + 1 {
        let p = b.add_vertices(3);
        b.add_edge(p.start, p.start + 1);
        b.add_edge(p.start + 1, p.start + 2);
        for v in p {
            b.add_edge(x, v);
            b.add_edge(y, v);
        }
    }
}

/// Thicken the edge `xy`: add `2k + 1` paths on 3 vertices, every new vertex
/// adjacent to both `x` and `y`. New vertices are appended.
pub fn thicken_edge(g: &SimpleGraph, x: VertexId, y: VertexId, k: u64) -> Result<GeneratedGraph, ConstructionError> {
    if x >= g.vertex_count() || y >= g.vertex_count() || !g.has_edge(x, y) {
        return Err(ConstructionError::NotAnEdge(x, y));
    }
    let mut b = GraphBuilder::new();
    b.add_copy(g);
    add_thickening(&mut b, x, y, k);
    let paths = 2 * k + 1;
    let vc = g.vertex_count() as u64 + 3 * paths;
    let ec = g.edge_count() as u64 + 8 * paths;
    finish(b, "thicken", k, vc, ec, None, None)
}

/// A single thickened edge `01`: no `(1,k,k)`-coloring gives its ends the
/// two colors of defect `k`.
pub fn thickened_edge_gadget(k: u64) -> Result<GeneratedGraph, ConstructionError> {
    let edge = SimpleGraph::from_edges(2, [(0, 1)])?;
    let mut out = thicken_edge(&edge, 0, 1, k)?;
    out.meta.family = "thickened_edge".into();
    out.meta.claim = Some(NonColorability {
        defects: defects(&[1, k as usize, k as usize]),
        pins: vec![(0, 1), (1, 2)],
        status: ClaimStatus::Unverified,
    });
    Ok(out)
}

pub fn hv_gadget_counts(k: u64) -> (u64, u64) {
    let rim = 3 * k + 1;
    let paths = rim * (2 * k + 1);
    (1 + rim + 3 * paths, 2 * rim + 8 * paths)
}

/// `H_v`: apex `0` over the cycle `1..=3k+1`, every spoke thickened. The
/// apex has color 1 in every `(1,k,k)`-coloring, so pinning it to color 2
/// leaves no coloring.
pub fn hv_gadget(k: u64) -> Result<GeneratedGraph, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::Parameter("H_v needs k >= 1".into()));
    }
    let mut b = GraphBuilder::new();
    add_hv(&mut b, k);
    let (vc, ec) = hv_gadget_counts(k);
    finish(
        b,
        "hv_gadget",
        k,
        vc,
        ec,
        None,
        Some((defects(&[1, k as usize, k as usize]), vec![(0, 1)])),
    )
}

/// Appends a copy of `H_v` and returns its apex.
fn add_hv(b: &mut GraphBuilder, k: u64) -> VertexId {
    let rim = 3 * k as usize + 1;
    let apex = b.add_vertex();
    let cycle = b.add_vertices(rim);
    for i in 0..rim {
        b.add_edge(cycle.start + i, cycle.start + (i + 1) % rim);
        b.add_edge(apex, cycle.start + i);
    }
    for c in cycle {
        add_thickening(b, apex, c, k);
    }
    apex
}

/// A triangle whose corners are the apexes of three copies of `H_v`;
/// planar and not `(1,k,k)`-colorable. The apexes are `0`, `|H_v|`,
/// `2|H_v|`.
pub fn not_1kk(k: u64) -> Result<GeneratedGraph, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::Parameter("the construction needs k >= 1".into()));
    }
    let mut b = GraphBuilder::new();
    let apexes: Vec<VertexId> = (0..3).map(|_| add_hv(&mut b, k)).collect();
    b.add_edge(apexes[0], apexes[1]);
    b.add_edge(apexes[1], apexes[2]);
    b.add_edge(apexes[2], apexes[0]);
    let (hv, he) = hv_gadget_counts(k);
    finish(b, "not1kk", k, 3 * hv, 3 * he + 3, None, Some((defects(&[1, k as usize, k as usize]), Vec::new())))
}

/// Each step of the argument for [`not_1kk`] as its own solver instance,
/// every one of which must have no coloring:
///
/// - the thickened edge with its ends in the two defect-`k` colors;
/// - the wheel with `3k + 1` spokes, hub in a defect-`k` color and rim
///   restricted to that color and color 1 (colors `(1, k)`), which is what
///   `H_v` leaves once the thickened spokes rule out the other color;
/// - the triangle with every corner in color 1.
pub fn not_1kk_subclaims(k: u64) -> Result<Vec<(String, GeneratedGraph)>, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::Parameter("the construction needs k >= 1".into()));
    }
    let edge = thickened_edge_gadget(k)?;
    let rim = 3 * k as usize + 1;
    let mut b = GraphBuilder::new();
    let hub = b.add_vertex();
    let cycle = b.add_vertices(rim);
    for i in 0..rim {
        b.add_edge(cycle.start + i, cycle.start + (i + 1) % rim);
        b.add_edge(hub, cycle.start + i);
    }
    let wheel = finish(
        b,
        "wheel",
        k,
        rim as u64 + 1,
        2 * rim as u64,
        None,
        Some((defects(&[1, k as usize]), vec![(hub, 1)])),
    )?;
    let mut b = GraphBuilder::new();
    b.add_vertices(3);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 0);
    let triangle = finish(
        b,
        "triangle",
        k,
        3,
        3,
        None,
        Some((defects(&[1, k as usize, k as usize]), vec![(0, 0), (1, 0), (2, 0)])),
    )?;
    Ok(vec![
        ("thickened edge with ends in colors 2 and 3".into(), edge),
        ("wheel with hub in color 2 and rim in colors 1 and 2".into(), wheel),
        ("triangle with every corner in color 1".into(), triangle),
    ])
}

/// Number of 7-tuples `(v_1, ..., v_7)`, `v_i` in `D_i`.
pub const DESCARTES_SETS: u64 = 823_543;

/// Closed-form `(vertices, edges)` of the full `H_k`:
/// `49 + 7^8 (7k+1)` and `2 * 7^8 (7k+1) + 49`.
pub fn descartes_counts(k: u64) -> (u128, u128) {
    let p8 = 7u128.pow(8);
    let copies = 7 * k as u128 + 1;
    (49 + p8 * copies, 2 * p8 * copies + 49)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescartesSets {
    /// All `7^7` tuples; refused above `max_edges`.
    All { max_edges: u128 },
    /// `sets` consecutive tuples (lexicographic, wrapping) starting at a
    /// position drawn from `seed`.
    Sample { sets: u64, seed: u64 },
}

fn tuple_of(index: u64) -> [usize; 7] {
    let mut t = [0; 7];
    let mut x = index;
    for slot in t.iter_mut().rev() {
        *slot = (x % 7) as usize;
        x /= 7;
    }
    t
}

/// `H_k`: seven disjoint 7-cycles `D_1..D_7` (vertex `7i + j` is position
/// `j` of `D_(i+1)`); for every chosen tuple `(v_1, ..., v_7)` add `7k + 1`
/// fresh 7-cycles, each matched position by position to the tuple. The
/// tuple's vertices are checked to be pairwise at distance at least 3
/// before every addition.
pub fn descartes_girth6(k: u64, sets: DescartesSets) -> Result<GeneratedGraph, ConstructionError> {
    let (tuples, sample): (Box<dyn Iterator<Item = u64>>, Option<SampleInfo>) = match sets {
        DescartesSets::All { max_edges } => {
            let (_, edges) = descartes_counts(k);
            if edges > max_edges {
                return Err(ConstructionError::TooLarge { edges, limit: max_edges });
            }
            (Box::new(0..DESCARTES_SETS), None)
        }
        DescartesSets::Sample { sets, seed } => {
            if sets == 0 || sets > DESCARTES_SETS {
                return Err(ConstructionError::Parameter(format!("sample size must be in 1..={DESCARTES_SETS}")));
            }
            let start = ChaCha8Rng::seed_from_u64(seed).random_range(0..DESCARTES_SETS);
            let info = SampleInfo { seed, start, sets, total_sets: DESCARTES_SETS };
            (Box::new((0..sets).map(move |i| (start + i) % DESCARTES_SETS)), Some(info))
        }
    };
    let copies = 7 * k + 1;
    let mut b = GraphBuilder::new();
    for _ in 0..7 {
        b.add_copy(&SimpleGraph::cycle(7));
    }
    let mut used = 0u64;
    for index in tuples {
        let t = tuple_of(index);
        let targets: Vec<VertexId> = (0..7).map(|i| 7 * i + t[i]).collect();
        check_far_apart(b.adjacency(), &targets)?;
        for _ in 0..copies {
            let c = b.add_copy(&SimpleGraph::cycle(7));
            for (i, &v) in targets.iter().enumerate() {
                b.add_edge(v, c + i);
            }
        }
        used += 1;
    }
    let vc = 49 + 7 * copies * used;
    let ec = 49 + 14 * copies * used;
    let mut out = finish(b, "descartes6", k, vc, ec, Some(6), Some((defects(&[0, 0, k as usize]), Vec::new())))?;
    out.meta.sample = sample;
    Ok(out)
}

/// Pairwise distance at least 3: no two targets adjacent or sharing a
/// neighbor.
fn check_far_apart(adj: &[Vec<VertexId>], targets: &[VertexId]) -> Result<(), ConstructionError> {
    let mut owner = std::collections::HashMap::new();
    for (i, &t) in targets.iter().enumerate() {
        for &x in std::iter::once(&t).chain(&adj[t]) {
            if let Some(&j) = owner.get(&x) {
                if j != i {
                    return Err(ConstructionError::TooClose(format!(
                        "vertices {} and {t} are within distance 2",
                        targets[j]
                    )));
                }
            }
            owner.insert(x, i);
        }
    }
    Ok(())
}

pub fn two_star_counts(big_k: u64) -> (u64, u64) {
    let l = 3 * big_k + 2;
    (2 * (1 + 2 * l + l * (l - 1)), 27 * big_k * big_k + 39 * big_k + 15)
}

/// Two copies of `S_K` with their centers joined, where `S_K` is a 2-star
/// with `3K + 2` leaves plus, for every pair of leaves, a path with 3 edges
/// between them. Girth 7; not `(0,K)`-colorable.
pub fn two_star_girth7(big_k: u64) -> Result<GeneratedGraph, ConstructionError> {
    let l = 3 * big_k as usize + 2;
    let mut b = GraphBuilder::new();
    let mut centers = Vec::new();
    for _ in 0..2 {
        let center = b.add_vertex();
        let mids = b.add_vertices(l);
        let leaves = b.add_vertices(l);
        for i in 0..l {
            b.add_edge(center, mids.start + i);
            b.add_edge(mids.start + i, leaves.start + i);
        }
        for i in 0..l {
            for j in i + 1..l {
                let p = b.add_vertices(2);
                b.add_edge(leaves.start + i, p.start);
                b.add_edge(p.start, p.start + 1);
                b.add_edge(p.start + 1, leaves.start + j);
            }
        }
        centers.push(center);
    }
    b.add_edge(centers[0], centers[1]);
    let (vc, ec) = two_star_counts(big_k);
    finish(b, "twostar7", big_k, vc, ec, Some(7), Some((defects(&[0, big_k as usize]), Vec::new())))
}

/// Run the solver on the graph's non-colorability claim. `Verified` when it
/// proves there is no coloring, `Refuted` when it finds one, `Unverified`
/// when the budget runs out or there is no claim.
pub fn verify_claim(gen: &GeneratedGraph, options: &SolveOptions) -> Result<ClaimStatus, ConstructionError> {
    let Some(claim) = &gen.meta.claim else {
        return Ok(ClaimStatus::Unverified);
    };
    let opts = SolveOptions { pins: claim.pins.clone(), ..options.clone() };
    Ok(match solve_exact(&gen.graph, &claim.defects, &opts)? {
        SolveOutcome::Unsat(_) => ClaimStatus::Verified,
        SolveOutcome::Sat(_) => ClaimStatus::Refuted,
        SolveOutcome::Aborted { .. } => ClaimStatus::Unverified,
    })
}

//! Recoloring procedures for defect vectors `d_1 = ... = d_j = K > d_(j+1),
//! ..., d_k`: extending a coloring of `G - v` to `v`, and coloring a graph
//! whose `(K + k)`-or-more-degree vertices are few.

use super::{partial_violations, Color, Coloring, ColoringError, DefectVector};
use crate::graph::{SimpleGraph, VertexId};

/// Whether recoloring `u` (currently colored) to `c` keeps every colored
/// vertex within its defect.
fn can_recolor(g: &SimpleGraph, d: &DefectVector, col: &Coloring, u: VertexId, c: Color) -> bool {
    let mut same = 0;
    for &w in g.neighbors(u) {
        if col.get(w) == Some(c) {
            same += 1;
            if col.defect(g, w) >= d.get(c) {
                return false;
            }
        }
    }
    same <= d.get(c)
}

fn missing_color(g: &SimpleGraph, col: &Coloring, v: VertexId, k: usize, skip: Option<Color>) -> Option<Color> {
    let mut seen = vec![false; k];
    for &w in g.neighbors(v) {
        if let Some(c) = col.get(w) {
            seen[c] = true;
        }
    }
    (0..k).find(|&c| !seen[c] && Some(c) != skip)
}

/// Extend a coloring of `G - v` to `v`:
///
/// 1. recolor each neighbor of `v` (in id order) with the first of colors
///    `j+1..k` that keeps the coloring valid, if any;
/// 2. if some color is absent around `v`, give it to `v`;
/// 3. otherwise pick the lowest `l <= j` carried by no neighbor of degree at
///    least `K + k`; every `c_l`-saturated neighbor is moved to a color absent
///    from its own neighborhood, and `v` gets `c_l`.
///
/// Returns `None` when a step has no valid choice. Succeeds whenever
/// `deg(v) <= K + k - 1` and fewer than `j` neighbors have degree `>= K + k`.
pub fn extend_to_vertex(
    g: &SimpleGraph,
    defects: &DefectVector,
    partial: &Coloring,
    v: VertexId,
) -> Result<Option<Coloring>, ColoringError> {
    let (j, big) = defects.high_params().ok_or_else(|| ColoringError::NoHighParameters(defects.clone()))?;
    let k = defects.k();
    if v >= g.vertex_count() {
        return Err(ColoringError::UnknownVertex(v));
    }
    super::check_shape(g, defects, partial)?;
    if partial.get(v).is_some() {
        return Err(ColoringError::AlreadyColored(v));
    }
    if let Some(u) = (0..g.vertex_count()).find(|&u| u != v && partial.get(u).is_none()) {
        return Err(ColoringError::Uncolored(u));
    }
    if let Some(bad) = partial_violations(g, defects, partial).first() {
        return Err(ColoringError::Precondition(format!("coloring of G - v is invalid: {bad}")));
    }

    let mut col = partial.clone();
    for &u in g.neighbors(v) {
        if col.get(u).is_some_and(|c| c >= j) {
            continue;
        }
        if let Some(c) = (j..k).find(|&c| can_recolor(g, defects, &col, u, c)) {
            col.set(u, c);
        }
    }
    if let Some(c) = missing_color(g, &col, v, k, None) {
        col.set(v, c);
        return Ok(Some(col));
    }
    let high = |u: VertexId| g.degree(u) >= big + k;
    let Some(l) = (0..j).find(|&l| g.neighbors(v).iter().all(|&u| !high(u) || col.get(u) != Some(l))) else {
        return Ok(None);
    };
    for &u in g.neighbors(v) {
        if col.get(u) == Some(l) && col.is_saturated(g, defects, u) {
            match missing_color(g, &col, u, k, Some(l)) {
                Some(c) => col.set(u, c),
                None => return Ok(None),
            }
        }
    }
    col.set(v, l);
    Ok(partial_violations(g, defects, &col).is_empty().then_some(col))
}

/// Output of [`color_via_high_partition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighPartition {
    pub coloring: Coloring,
    /// Vertices of degree at least `K + k`.
    pub high: Vec<VertexId>,
    /// Valid for `(d_1 + 1, d_2, ..., d_k)`.
    pub relaxed_valid: bool,
    /// Valid for `(d_1, ..., d_k)` itself.
    pub strict_valid: bool,
}

/// Color the vertices of degree at least `K + k` with colors `2..k` (the
/// lowest ids go to color 2 until it holds `d_2 + 1` of them, then color 3,
/// and so on), then greedily color the others in id order with the lowest
/// color among `2..k` missing from their colored neighbors, or color 1.
pub fn color_via_high_partition(g: &SimpleGraph, defects: &DefectVector) -> Result<HighPartition, ColoringError> {
    let (_, big) = defects.high_params().ok_or_else(|| ColoringError::NoHighParameters(defects.clone()))?;
    let k = defects.k();
    let high: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= big + k).collect();
    let capacity: usize = (1..k).map(|i| defects.get(i) + 1).sum();
    if high.len() > capacity {
        return Err(ColoringError::TooManyHigh { high: high.len(), capacity });
    }
    let mut col = Coloring::uncolored(g.vertex_count());
    let mut slots = (1..k).flat_map(|i| std::iter::repeat_n(i, defects.get(i) + 1));
    for &v in &high {
        col.set(v, slots.next().expect("capacity checked"));
    }
    for v in 0..g.vertex_count() {
        if col.get(v).is_none() {
            let mut seen = vec![false; k];
            for &w in g.neighbors(v) {
                if let Some(c) = col.get(w) {
                    seen[c] = true;
                }
            }
            col.set(v, (1..k).find(|&c| !seen[c]).unwrap_or(0));
        }
    }
    let mut relaxed = defects.as_slice().to_vec();
    relaxed[0] += 1;
    let relaxed = DefectVector::new(relaxed)?;
    let relaxed_valid = partial_violations(g, &relaxed, &col).is_empty();
    let strict_valid = partial_violations(g, defects, &col).is_empty();
    Ok(HighPartition { coloring: col, high, relaxed_valid, strict_valid })
}

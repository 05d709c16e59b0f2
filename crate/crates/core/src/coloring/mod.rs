//! Defective colorings: a `(d_1, ..., d_k)`-coloring gives every vertex one
//! of `k` colors so that a vertex of color `i` has at most `d_i` neighbors of
//! color `i`. Colors are 0-based in the API and 1-based in files and on the
//! command line.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{SimpleGraph, VertexId};
use crate::planarize::PlanarizeError;

mod recolor;
mod pipeline;
mod solver;
pub mod threshold;

pub use recolor::{color_via_high_partition, extend_to_vertex, HighPartition};
pub use pipeline::{color_000_9g4, color_22_9g4, PipelineColoring};
pub use solver::{solve_exact, SolveOptions, SolveOutcome, UnsatReason};

pub type Color = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("invalid defect vector: {0}")]
    InvalidDefects(String),
    #[error("vertex {vertex} has color {} but only {k} colors exist", color + 1)]
    ColorOutOfRange { vertex: VertexId, color: Color, k: usize },
    #[error("vertex {0} is uncolored")]
    Uncolored(VertexId),
    #[error("vertex {0} is already colored")]
    AlreadyColored(VertexId),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("coloring covers {coloring} vertices, graph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },
    #[error("defect vector {0} is not of the form K = d_1 = ... = d_j > d_(j+1), ..., d_k")]
    NoHighParameters(DefectVector),
    #[error("{high} high vertices exceed the capacity {capacity} of colors 2..k")]
    TooManyHigh { high: usize, capacity: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Planarize(#[from] PlanarizeError),
}

/// `(d_1, ..., d_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefectVector {
    defects: Vec<usize>,
}

impl DefectVector {
    pub fn new(defects: Vec<usize>) -> Result<Self, ColoringError> {
        if defects.is_empty() {
            return Err(ColoringError::InvalidDefects("need at least one color".into()));
        }
        if defects.len() > 64 {
            return Err(ColoringError::InvalidDefects(format!("{} colors, at most 64 supported", defects.len())));
        }
        Ok(Self { defects })
    }

    pub fn k(&self) -> usize {
        self.defects.len()
    }

    pub fn get(&self, color: Color) -> usize {
        self.defects[color]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.defects
    }

    /// `(j, K)` when `d_1 = ... = d_j = K > max(d_(j+1), ..., d_k)` with
    /// `j < k`.
    pub fn high_params(&self) -> Option<(usize, usize)> {
        let big = self.defects[0];
        let j = self.defects.iter().take_while(|&&d| d == big).count();
        (j < self.k() && self.defects[j..].iter().all(|&d| d < big)).then_some((j, big))
    }
}

impl fmt::Display for DefectVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.defects.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for DefectVector {
    type Err = ColoringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let defects = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| ColoringError::InvalidDefects(format!("`{p}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(defects)
    }
}

/// A possibly partial assignment of colors to vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Self { colors: vec![None; n] }
    }

    pub fn from_colors(colors: Vec<Color>) -> Self {
        Self { colors: colors.into_iter().map(Some).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: VertexId, c: Color) {
        self.colors[v] = Some(c);
    }

    pub fn unset(&mut self, v: VertexId) {
        self.colors[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// Number of neighbors of `v` sharing its color (0 if uncolored).
    pub fn defect(&self, g: &SimpleGraph, v: VertexId) -> usize {
        match self.colors[v] {
            Some(c) => g.neighbors(v).iter().filter(|&&w| self.colors[w] == Some(c)).count(),
            None => 0,
        }
    }

    /// Per-vertex count of same-colored neighbors.
    pub fn defect_counts(&self, g: &SimpleGraph) -> Vec<usize> {
        (0..self.colors.len()).map(|v| self.defect(g, v)).collect()
    }

    /// `v` has color `c` and exactly `d_c` neighbors of color `c`.
    pub fn is_saturated(&self, g: &SimpleGraph, defects: &DefectVector, v: VertexId) -> bool {
        self.colors[v].is_some_and(|c| self.defect(g, v) == defects.get(c))
    }
}

/// A vertex with more same-colored neighbors than its color allows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: VertexId,
    pub color: Color,
    pub same_colored_neighbors: usize,
    pub allowed: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} color {} has {} neighbors of its color, allowed {}",
            self.vertex,
            self.color + 1,
            self.same_colored_neighbors,
            self.allowed
        )
    }
}

fn check_shape(g: &SimpleGraph, defects: &DefectVector, coloring: &Coloring) -> Result<(), ColoringError> {
    if coloring.vertex_count() != g.vertex_count() {
        return Err(ColoringError::SizeMismatch { coloring: coloring.vertex_count(), graph: g.vertex_count() });
    }
    for (v, c) in coloring.colors.iter().enumerate() {
        if let Some(c) = *c {
            if c >= defects.k() {
                return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k: defects.k() });
            }
        }
    }
    Ok(())
}

/// Violations of a total coloring, in vertex order; empty iff valid.
pub fn verify_coloring(
    g: &SimpleGraph,
    defects: &DefectVector,
    coloring: &Coloring,
) -> Result<Vec<Violation>, ColoringError> {
    check_shape(g, defects, coloring)?;
    if let Some(v) = coloring.colors.iter().position(Option::is_none) {
        return Err(ColoringError::Uncolored(v));
    }
    Ok(partial_violations(g, defects, coloring))
}

/// Violations among the colored vertices of a partial coloring.
pub(crate) fn partial_violations(g: &SimpleGraph, defects: &DefectVector, coloring: &Coloring) -> Vec<Violation> {
    (0..g.vertex_count())
        .filter_map(|v| {
            let color = coloring.colors[v]?;
            let same = coloring.defect(g, v);
            let allowed = defects.get(color);
            (same > allowed).then_some(Violation { vertex: v, color, same_colored_neighbors: same, allowed })
        })
        .collect()
}

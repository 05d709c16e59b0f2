//! Colorings of embedded graphs of Euler genus `g > 0` built from a
//! planarizing subgraph `H`: color the planar quotient `G/H`, then give all
//! of `H` the color of its quotient vertex.

use super::{solve_exact, verify_coloring, Color, Coloring, ColoringError, DefectVector, SolveOptions, SolveOutcome};
use crate::embedding::EmbeddedGraph;
use crate::planarize::{self, PlanarizeError, PlanarizeResult};

#[derive(Clone, Debug)]
pub struct PipelineColoring {
    pub coloring: Coloring,
    /// The defect vector the coloring was verified against.
    pub defects: DefectVector,
    pub planarized: PlanarizeResult,
}

fn planarize_at_zero(g: &EmbeddedGraph) -> Result<PlanarizeResult, ColoringError> {
    if g.vertex_count() == 0 {
        return Err(ColoringError::Precondition("empty graph".into()));
    }
    planarize::planarizing_subgraph(g, 0).map_err(|e| match e {
        PlanarizeError::PlanarInput => ColoringError::Precondition("input has Euler genus 0".into()),
        other => ColoringError::Planarize(other),
    })
}

fn lift(
    g: &EmbeddedGraph,
    p: PlanarizeResult,
    quotient_defects: &str,
    h_color: Color,
    isolated: bool,
    target: DefectVector,
    options: &SolveOptions,
    known_result: &str,
) -> Result<PipelineColoring, ColoringError> {
    let defects: DefectVector = quotient_defects.parse()?;
    let opts = SolveOptions {
        pins: vec![(p.h_vertex, h_color)],
        isolated: if isolated { vec![p.h_vertex] } else { Vec::new() },
        ..options.clone()
    };
    let quotient_coloring = match solve_exact(&p.quotient, &defects, &opts)? {
        SolveOutcome::Sat(c) => c,
        SolveOutcome::Unsat(reason) => {
            return Err(ColoringError::Invariant(format!(
                "planar quotient has no ({quotient_defects})-coloring with H pinned ({reason:?}); contradicts {known_result}"
            )))
        }
        SolveOutcome::Aborted { nodes } => {
            return Err(ColoringError::Invariant(format!("quotient search gave up after {nodes} nodes")))
        }
    };
    let colors: Vec<Color> = (0..g.vertex_count())
        .map(|v| quotient_coloring.get(p.quotient_map[v]).expect("solver output is total"))
        .collect();
    let coloring = Coloring::from_colors(colors);
    let violations = verify_coloring(g.graph(), &target, &coloring)?;
    if let Some(bad) = violations.first() {
        return Err(ColoringError::Invariant(format!("lifted coloring is not a ({target})-coloring: {bad}")));
    }
    Ok(PipelineColoring { coloring, defects: target, planarized: p })
}

/// A `(0, 0, 0, 9g - 4)`-coloring: `G/H` is properly 4-colored with `H`'s
/// vertex in color 4, which then covers all of `H`.
pub fn color_000_9g4(g: &EmbeddedGraph, options: &SolveOptions) -> Result<PipelineColoring, ColoringError> {
    let p = planarize_at_zero(g)?;
    let target = DefectVector::new(vec![0, 0, 0, p.bound])?;
    lift(g, p, "0,0,0,0", 3, false, target, options, "the Four Color Theorem")
}

/// A `(2, 2, 9g - 4)`-coloring: `G/H` is `(2, 2, 2)`-colored with `H`'s
/// vertex in color 3 and no neighbor of that color.
pub fn color_22_9g4(g: &EmbeddedGraph, options: &SolveOptions) -> Result<PipelineColoring, ColoringError> {
    let p = planarize_at_zero(g)?;
    let target = DefectVector::new(vec![2, 2, p.bound])?;
    lift(g, p, "2,2,2", 2, true, target, options, "(2,2,2)-colorability of planar graphs")
}

//! Embedded graphs on surfaces, planarizing subgraphs, defective colorings.

pub mod coloring;
pub mod discharging;
pub mod constructions;
pub mod embedding;
pub mod format;
pub mod graph;
pub mod planarize;
pub mod topology;

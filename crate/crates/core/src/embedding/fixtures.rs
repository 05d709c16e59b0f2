//! Small named embeddings used by the tests, the acceptance suite and the
//! CLI examples.

use super::EmbeddedGraph;

/// K4 with the tetrahedral (spherical) rotation.
pub fn planar_k4() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_orders(
        &[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        &[],
    )
    .expect("valid fixture")
}

/// K7 triangulating the torus: the rotation at `i` is
/// `i+1, i+3, i+2, i+6, i+4, i+5 (mod 7)`.
pub fn toroidal_k7() -> EmbeddedGraph {
    let order: Vec<Vec<usize>> = (0..7)
        .map(|i| [1, 3, 2, 6, 4, 5].iter().map(|d| (i + d) % 7).collect())
        .collect();
    EmbeddedGraph::from_neighbor_orders(&order, &[]).expect("valid fixture")
}

/// The `rows x cols` grid `C_rows x C_cols` quadrangulating the torus.
/// Vertex `(i, j)` has id `i * cols + j`. Needs `rows, cols >= 3`.
pub fn torus_grid(rows: usize, cols: usize) -> EmbeddedGraph {
    assert!(rows >= 3 && cols >= 3, "torus grid needs both sides >= 3");
    let id = |i: usize, j: usize| (i % rows) * cols + (j % cols);
    let order: Vec<Vec<usize>> = (0..rows * cols)
        .map(|v| {
            let (i, j) = (v / cols, v % cols);
            vec![id(i, j + 1), id(i + rows - 1, j), id(i, j + cols - 1), id(i + 1, j)]
        })
        .collect();
    EmbeddedGraph::from_neighbor_orders(&order, &[]).expect("valid fixture")
}

/// K5 in the projective plane (6 faces, one cross-cap).
pub fn projective_k5() -> EmbeddedGraph {
    EmbeddedGraph::from_neighbor_orders(
        &[
            vec![1, 2, 3, 4],
            vec![0, 2, 3, 4],
            vec![0, 4, 1, 3],
            vec![0, 2, 1, 4],
            vec![0, 3, 1, 2],
        ],
        &[(1, 2), (1, 3), (1, 4), (2, 4)],
    )
    .expect("valid fixture")
}

/// The cycle `C_n` drawn on the sphere.
pub fn planar_cycle(n: usize) -> EmbeddedGraph {
    assert!(n >= 3);
    let order: Vec<Vec<usize>> = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
    EmbeddedGraph::from_neighbor_orders(&order, &[]).expect("valid fixture")
}

/// The wheel with hub `0` and rim `1..=n` drawn on the sphere.
pub fn planar_wheel(n: usize) -> EmbeddedGraph {
    assert!(n >= 3);
    let rim = |i: usize| 1 + (i + n) % n;
    let mut order = vec![(0..n).map(rim).collect::<Vec<_>>()];
    for i in 0..n {
        order.push(vec![rim(i + 1), 0, rim(i + n - 1)]);
    }
    EmbeddedGraph::from_neighbor_orders(&order, &[]).expect("valid fixture")
}

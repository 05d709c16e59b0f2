//! Seeded random connected signed rotation systems.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::EmbeddedGraph;

/// A connected simple graph on `n` vertices (random spanning tree plus up to
/// `extra_edges` further edges) with uniformly shuffled rotations. Each edge
/// is negative with probability `p_negative`.
pub fn random_embedding<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    extra_edges: usize,
    p_negative: f64,
) -> EmbeddedGraph {
    assert!(n >= 1);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push((u, v));
    }
    let max_edges = n * (n - 1) / 2;
    let target = (edges.len() + extra_edges).min(max_edges);
    while edges.len() < target {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v && !adj[u][v] {
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u.min(v), u.max(v)));
        }
    }
    let mut order: Vec<Vec<usize>> = adj
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, &b)| b).map(|(w, _)| w).collect())
        .collect();
    for list in &mut order {
        list.shuffle(rng);
    }
    let negative: Vec<(usize, usize)> =
        edges.iter().copied().filter(|_| rng.random_bool(p_negative)).collect();
    EmbeddedGraph::from_neighbor_orders(&order, &negative).expect("random system is valid")
}

/// Deterministic stream of random embeddings for a seed; `n` is drawn from
/// `n_range` and the number of extra edges from `extra_range`.
pub fn seeded_embeddings(
    seed: u64,
    count: usize,
    n_range: std::ops::RangeInclusive<usize>,
    extra_range: std::ops::RangeInclusive<usize>,
    p_negative: f64,
) -> Vec<EmbeddedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(n_range.clone());
            let extra = rng.random_range(extra_range.clone());
            random_embedding(&mut rng, n, extra, p_negative)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_embeddings_are_connected_and_reproducible() {
        let a = seeded_embeddings(7, 20, 2..=10, 0..=8, 0.3);
        let b = seeded_embeddings(7, 20, 2..=10, 0..=8, 0.3);
        assert_eq!(a, b);
        for g in &a {
            assert!(g.is_connected());
            let faces = g.faces();
            let total: usize = faces.iter().map(|f| f.degree()).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }
}

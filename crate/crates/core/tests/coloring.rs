mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use surfcolor_core::coloring::threshold::{self, Family};
use surfcolor_core::coloring::{
    color_000_9g4, color_22_9g4, extend_to_vertex, solve_exact, verify_coloring, Coloring, DefectVector, SolveOptions,
    SolveOutcome,
};
use surfcolor_core::embedding::random::{random_embedding, seeded_embeddings};
use surfcolor_core::graph::SimpleGraph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (any::<u64>(), 1..=max_n, 0usize..=14)
        .prop_map(|(seed, n, extra)| random_embedding(&mut ChaCha8Rng::seed_from_u64(seed), n, extra, 0.0).graph().clone())
}

fn arb_defects() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..=2, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn solver_matches_exhaustive_search(g in arb_graph(8), d in arb_defects()) {
        let defects = DefectVector::new(d.clone()).unwrap();
        let outcome = solve_exact(&g, &defects, &SolveOptions::default()).unwrap();
        let oracle = common::exhaustive_coloring(&g, &d, &[]);
        prop_assert_eq!(outcome.is_sat(), oracle.is_some());
        if let Some(c) = outcome.coloring() {
            let colors: Vec<usize> = c.as_slice().iter().map(|x| x.unwrap()).collect();
            prop_assert!(common::is_defective_coloring(&g, &d, &colors));
        }
    }

    #[test]
    fn pinned_solver_matches_exhaustive_search(g in arb_graph(7), d in arb_defects(), v in 0usize..7, c in 0usize..3) {
        let v = v % g.vertex_count();
        let c = c % d.len();
        let defects = DefectVector::new(d.clone()).unwrap();
        let opts = SolveOptions { pins: vec![(v, c)], ..SolveOptions::default() };
        let outcome = solve_exact(&g, &defects, &opts).unwrap();
        prop_assert_eq!(outcome.is_sat(), common::exhaustive_coloring(&g, &d, &[(v, c)]).is_some());
        if let Some(col) = outcome.coloring() {
            prop_assert_eq!(col.get(v), Some(c));
        }
    }

    #[test]
    fn verify_agrees_with_definition(g in arb_graph(8), d in arb_defects(), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let colors: Vec<usize> = (0..g.vertex_count()).map(|_| rng.random_range(0..d.len())).collect();
        let defects = DefectVector::new(d.clone()).unwrap();
        let violations = verify_coloring(&g, &defects, &Coloring::from_colors(colors.clone())).unwrap();
        prop_assert_eq!(violations.is_empty(), common::is_defective_coloring(&g, &d, &colors));
    }
}

#[test]
fn parallel_search_gives_the_sequential_witness() {
    for g in seeded_embeddings(4, 30, 6..=14, 4..=20, 0.0) {
        let d: DefectVector = "1,1,0".parse().unwrap();
        let seq = solve_exact(g.graph(), &d, &SolveOptions::default()).unwrap();
        let par = solve_exact(g.graph(), &d, &SolveOptions { jobs: 4, ..SolveOptions::default() }).unwrap();
        assert_eq!(seq.is_sat(), par.is_sat());
        assert_eq!(seq.coloring(), par.coloring());
    }
}

#[test]
fn budget_aborts() {
    let d: DefectVector = "0,0,0,0".parse().unwrap();
    let out = solve_exact(&SimpleGraph::complete(12), &d, &SolveOptions { node_budget: Some(3), ..SolveOptions::default() });
    assert!(matches!(out.unwrap(), SolveOutcome::Aborted { .. } | SolveOutcome::Unsat(_)));
}

#[test]
fn extension_succeeds_under_its_degree_conditions() {
    let defects: DefectVector = "3,3,1".parse().unwrap();
    let (j, big) = defects.high_params().unwrap();
    let k = defects.k();
    let mut tried = 0;
    for emb in seeded_embeddings(17, 300, 4..=9, 2..=14, 0.0) {
        let g = emb.graph();
        let high = |u: usize| g.degree(u) >= big + k;
        let Some(v) = (0..g.vertex_count())
            .find(|&v| g.degree(v) < big + k && g.neighbors(v).iter().filter(|&&u| high(u)).count() < j)
        else {
            continue;
        };
        // Color G - v by brute force on the other vertices; v stays uncolored.
        let keep: Vec<usize> = (0..g.vertex_count()).filter(|&u| u != v).collect();
        let (sub, _) = g.induced(&keep);
        let Some(colors) = common::exhaustive_coloring(&sub, defects.as_slice(), &[]) else { continue };
        let mut partial = Coloring::uncolored(g.vertex_count());
        for (i, &u) in keep.iter().enumerate() {
            partial.set(u, colors[i]);
        }
        let out = extend_to_vertex(g, &defects, &partial, v).unwrap().expect("extension exists");
        assert!(verify_coloring(g, &defects, &out).unwrap().is_empty());
        tried += 1;
    }
    assert!(tried > 50);
}

#[test]
fn pipelines_on_random_positive_genus_embeddings() {
    let mut done = 0;
    for g in seeded_embeddings(31, 300, 5..=9, 2..=8, 0.3) {
        let eg = g.euler_genus().unwrap();
        if eg == 0 || eg > 4 {
            continue;
        }
        let a = color_000_9g4(&g, &SolveOptions::default()).unwrap();
        let b = color_22_9g4(&g, &SolveOptions::default()).unwrap();
        for (out, d) in [(&a, vec![0, 0, 0, 9 * eg - 4]), (&b, vec![2, 2, 9 * eg - 4])] {
            let colors: Vec<usize> = out.coloring.as_slice().iter().map(|c| c.unwrap()).collect();
            assert!(common::is_defective_coloring(g.graph(), &d, &colors));
        }
        done += 1;
    }
    assert!(done > 20);
}

#[test]
fn threshold_values() {
    for g in 1..=100u64 {
        let lin = threshold::threshold(Family::Linear, g).unwrap();
        assert_eq!(lin.integer, 9 * g - 4);
        let t = threshold::threshold(Family::TwoKK, g).unwrap();
        assert!((t.integer as f64) <= t.value && t.value < t.integer as f64 + 1.0);
    }
    assert_eq!(threshold::threshold(Family::TriangleFree, 1).unwrap().integer, 14);
}

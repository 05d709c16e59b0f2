mod common;

use surfcolor_core::embedding::{fixtures, random::seeded_embeddings};
use surfcolor_core::topology::{classify_cycle, is_contractible, shortest_noncontractible_cycle, CycleClass};

#[test]
fn classification_agrees_with_the_homology_oracle() {
    let mut checked = 0;
    for g in seeded_embeddings(11, 60, 3..=8, 0..=6, 0.3) {
        for c in common::all_cycles(g.graph()).into_iter().take(200) {
            let lib = is_contractible(&g, &c).unwrap();
            assert_eq!(lib, common::cycle_is_contractible(&g, &c), "cycle {c:?}");
            checked += 1;
        }
    }
    assert!(checked > 500);
}

#[test]
fn shortest_noncontractible_matches_enumeration() {
    for g in seeded_embeddings(5, 120, 3..=9, 1..=7, 0.25) {
        let lib = shortest_noncontractible_cycle(&g).unwrap();
        let oracle = common::brute_force_ncc_length(&g);
        assert_eq!(lib.as_ref().map(|c| c.len()), oracle);
        if g.euler_genus().unwrap() == 0 {
            assert!(lib.is_none());
        }
        if let Some(c) = lib {
            let graph = g.graph();
            for (i, &u) in c.vertices.iter().enumerate() {
                for &w in &c.vertices[i + 1..] {
                    let consecutive = c.vertices.len() > 2
                        && (c.vertices[(i + 1) % c.len()] == w || c.vertices[(i + c.len() - 1) % c.len()] == w);
                    assert!(!graph.has_edge(u, w) || consecutive, "chord {u}-{w}");
                }
            }
            assert!(graph.max_neighbors_in(&c.vertices) <= 3);
        }
    }
}

#[test]
fn classes_are_consistent_with_sidedness() {
    for g in seeded_embeddings(3, 40, 3..=8, 0..=6, 0.4) {
        for c in common::all_cycles(g.graph()).into_iter().take(100) {
            let class = classify_cycle(&g, &c).unwrap();
            let edges: Vec<usize> = (0..c.len())
                .map(|i| g.edge_between(c[i], c[(i + 1) % c.len()]).unwrap())
                .collect();
            let one_sided = g.sign_product(edges).is_negative();
            assert_eq!(class == CycleClass::OneSided, one_sided);
        }
    }
}

#[test]
fn fixture_cycles() {
    let k7 = fixtures::toroidal_k7();
    assert_eq!(shortest_noncontractible_cycle(&k7).unwrap().unwrap().len(), 3);
    assert_eq!(common::brute_force_ncc_length(&k7), Some(3));
    let k5 = fixtures::projective_k5();
    assert_eq!(common::brute_force_ncc_length(&k5), shortest_noncontractible_cycle(&k5).unwrap().map(|c| c.len()));
}

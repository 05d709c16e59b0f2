//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the
//! elapsed time against the criterion's time limit.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surfcolor_core::coloring::threshold::{self, Family};
use surfcolor_core::coloring::{color_000_9g4, color_22_9g4, solve_exact, verify_coloring, DefectVector, SolveOptions};
use surfcolor_core::constructions::{self as c, DescartesSets};
use surfcolor_core::discharging::{apply_rules, initial_charges, Scheme};
use surfcolor_core::embedding::random::random_embedding;
use surfcolor_core::embedding::{fixtures, EmbeddedGraph};
use surfcolor_core::graph::SimpleGraph;
use surfcolor_core::planarize::{is_planar, planarizing_subgraph, rooted_bound};
use surfcolor_core::topology::shortest_noncontractible_cycle;

const EULER_TOLERANCE: f64 = 1e-9;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_fixtures() -> Vec<(&'static str, EmbeddedGraph)> {
    vec![
        ("planar K4", fixtures::planar_k4()),
        ("toroidal K7", fixtures::toroidal_k7()),
        ("toroidal C3xC3", fixtures::torus_grid(3, 3)),
        ("projective K5", fixtures::projective_k5()),
    ]
}

/// Random connected signed rotation systems with Euler genus accepted by
/// `keep`, drawn deterministically from `seed`.
fn random_embeddings(seed: u64, count: usize, n: std::ops::RangeInclusive<usize>, keep: impl Fn(usize) -> bool) -> Vec<EmbeddedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let size = rng.random_range(n.clone());
        let extra = rng.random_range(0..=size + 2);
        let g = random_embedding(&mut rng, size, extra, 0.3);
        if keep(g.euler_genus().unwrap()) {
            out.push(g);
        }
    }
    out
}

fn euler_identity() -> Result<String, String> {
    let mut graphs: Vec<EmbeddedGraph> = all_fixtures().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_embeddings(1, 100, 1..=10, |_| true));
    for g in &graphs {
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + g.faces().len() as i64;
        let eg = g.euler_genus().map_err(|e| e.to_string())? as i64;
        ensure(chi == 2 - eg && eg >= 0, || format!("V-E+F = {chi}, eg = {eg}"))?;
    }
    Ok(format!("{} embeddings", graphs.len()))
}

fn shortest_noncontractible() -> Result<String, String> {
    let graphs = random_embeddings(2, 200, 3..=12, |eg| eg > 0);
    let mut compared = 0;
    for g in &graphs {
        let cycle = shortest_noncontractible_cycle(g).map_err(|e| e.to_string())?.ok_or("no cycle found")?;
        let graph = g.graph();
        let (induced, _) = graph.induced(&cycle.vertices);
        ensure(induced.edge_count() == cycle.len(), || format!("cycle {:?} has a chord", cycle.vertices))?;
        ensure(graph.max_neighbors_in(&cycle.vertices) <= 3, || format!("a vertex sees more than 3 of {:?}", cycle.vertices))?;
        if g.vertex_count() <= 12 {
            let oracle = common::brute_force_ncc_length(g);
            ensure(oracle == Some(cycle.len()), || format!("length {} vs enumeration {oracle:?}", cycle.len()))?;
            compared += 1;
        }
    }
    Ok(format!("{} embeddings, {compared} against enumeration", graphs.len()))
}

fn planarizing_postconditions() -> Result<String, String> {
    let mut graphs: Vec<EmbeddedGraph> = all_fixtures().into_iter().map(|(_, g)| g).filter(|g| g.euler_genus().unwrap() > 0).collect();
    graphs.extend(random_embeddings(3, 50, 4..=12, |eg| eg == 1 || eg == 2));
    for g in &graphs {
        let eg = g.euler_genus().unwrap();
        let root = 0;
        let p = planarizing_subgraph(g, root).map_err(|e| e.to_string())?;
        ensure(g.graph().induces_connected(&p.h_vertices), || "H is not connected".into())?;
        ensure(p.h_vertices.contains(&root), || "H misses the root".into())?;
        ensure(is_planar(&p.quotient), || "G/H is not planar".into())?;
        let seen = g.graph().max_neighbors_in(&p.h_vertices);
        ensure(seen <= rooted_bound(eg) && rooted_bound(eg) == 9 * eg - 4, || format!("{seen} neighbors in H at eg {eg}"))?;
    }
    Ok(format!("{} embeddings", graphs.len()))
}

fn pipelines() -> Result<String, String> {
    let mut runs = 0;
    for (name, g) in all_fixtures().into_iter().filter(|(_, g)| g.euler_genus().unwrap() > 0) {
        let eg = g.euler_genus().unwrap();
        let a = color_000_9g4(&g, &SolveOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        let b = color_22_9g4(&g, &SolveOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        for (out, want) in [(a, vec![0, 0, 0, 9 * eg - 4]), (b, vec![2, 2, 9 * eg - 4])] {
            let d = DefectVector::new(want).unwrap();
            ensure(out.defects == d, || format!("{name}: produced defects {}", out.defects))?;
            let bad = verify_coloring(g.graph(), &d, &out.coloring).map_err(|e| e.to_string())?;
            ensure(bad.is_empty(), || format!("{name}: {}", bad[0]))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} verified colorings"))
}

fn threshold_identities() -> Result<String, String> {
    for g in 1..=100 {
        let a = threshold::two_k_k_residual_f64(g);
        let b = threshold::zero_zero_k_k_residual_f64(g);
        ensure((a - 1.0).abs() < EULER_TOLERANCE, || format!("(2,K,K) residual {a} at g={g}"))?;
        ensure((b - 1.0).abs() < EULER_TOLERANCE, || format!("(0,0,K,K) residual {b} at g={g}"))?;
        let exact = (threshold::two_k_k_residual(g), threshold::zero_zero_k_k_residual(g));
        ensure(exact.0.rational == 1 && exact.0.coefficient == 0, || format!("exact residual {} at g={g}", exact.0))?;
        ensure(exact.1.rational == 1 && exact.1.coefficient == 0, || format!("exact residual {} at g={g}", exact.1))?;
        ensure(threshold::girth7_residual(g) >= 1, || format!("girth-7 residual below 1 at g={g}"))?;
    }
    let tf = threshold::threshold(Family::TriangleFree, 1).map_err(|e| e.to_string())?.integer;
    ensure(tf == 14, || format!("triangle-free value {tf} at g=1"))?;
    Ok(format!("g = 1..100, tolerance {EULER_TOLERANCE:e}"))
}

fn construction_counts() -> Result<String, String> {
    for k in 0..=5u64 {
        let e1 = c::g1(k).map_err(|e| e.to_string())?.graph.edge_count() as u64;
        ensure(e1 == 40 * k + 46, || format!("S(K4,{}) has {e1} edges", k + 1))?;
        let e2 = c::g2(k).map_err(|e| e.to_string())?.graph.edge_count() as u64;
        ensure(e2 == 196 * k + 217, || format!("S(K7,{}) has {e2} edges", k + 1))?;
        let t = c::two_star_girth7(k).map_err(|e| e.to_string())?.graph.edge_count() as u64;
        ensure(t == 27 * k * k + 39 * k + 15, || format!("two-star K={k} has {t} edges"))?;
    }
    for k in 0..=3u64 {
        let g = c::gk_2kk(k).map_err(|e| e.to_string())?;
        let (v, e) = (g.graph.vertex_count() as u64, g.graph.edge_count() as u64);
        ensure(v == 128 * k * k + 196 * k + 72 && e == 448 * k * k + 694 * k + 252, || format!("G_{k}: {v} / {e}"))?;
        let h = c::descartes_counts(k).1;
        ensure(h == 2 * 7u128.pow(8) * (7 * k as u128 + 1) + 49, || format!("H_{k}: {h} edges"))?;
    }
    Ok("k = 0..5 (G_k, H_k: 0..3)".into())
}

fn non_colorability() -> Result<String, String> {
    let limit = Duration::from_secs(60);
    let cases: Vec<(&str, SimpleGraph, &str, Vec<(usize, usize)>)> = vec![
        ("S(K4,1)", c::g1(0).unwrap().graph, "0,0,0,0", vec![]),
        ("thickened edge k=1", c::thickened_edge_gadget(1).unwrap().graph, "1,1,1", vec![(0, 1), (1, 2)]),
        ("two-star K=1", c::two_star_girth7(1).unwrap().graph, "0,1", vec![]),
        ("C7", SimpleGraph::cycle(7), "0,0", vec![]),
    ];
    let mut report = Vec::new();
    for (name, g, d, pins) in cases {
        let start = Instant::now();
        let opts = SolveOptions { pins, ..SolveOptions::default() };
        let out = solve_exact(&g, &d.parse().unwrap(), &opts).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure(out.is_unsat(), || format!("{name}: expected UNSAT, got {out:?}"))?;
        ensure(took < limit, || format!("{name}: {took:?}"))?;
        report.push(format!("{name} {took:.1?}"));
    }
    Ok(report.join(", "))
}

fn solver_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut sat, mut unsat) = (0, 0);
    for _ in 0..50 {
        let n = rng.random_range(1..=8);
        let extra = rng.random_range(0..=12);
        let g = random_embedding(&mut rng, n, extra, 0.0).graph().clone();
        let k = rng.random_range(1..=3);
        let d: Vec<usize> = (0..k).map(|_| rng.random_range(0..=2)).collect();
        let out = solve_exact(&g, &DefectVector::new(d.clone()).unwrap(), &SolveOptions::default()).map_err(|e| e.to_string())?;
        let oracle = common::exhaustive_coloring(&g, &d, &[]);
        ensure(out.is_sat() == oracle.is_some(), || format!("disagreement on n={n}, d={d:?}"))?;
        if let Some(col) = out.coloring() {
            let colors: Vec<usize> = col.as_slice().iter().map(|x| x.unwrap()).collect();
            ensure(common::is_defective_coloring(&g, &d, &colors), || "invalid witness".into())?;
            sat += 1;
        } else {
            unsat += 1;
        }
    }
    Ok(format!("50 instances ({sat} sat, {unsat} unsat)"))
}

fn discharging_audit() -> Result<String, String> {
    let mut graphs: Vec<EmbeddedGraph> = all_fixtures().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_embeddings(9, 100, 1..=10, |_| true));
    let thresholds = [BigRational::from_integer(BigInt::from(0)), BigRational::new(BigInt::from(5), BigInt::from(2))];
    let mut transfers = 0;
    for g in &graphs {
        let eg = g.euler_genus().unwrap() as i64;
        for scheme in Scheme::ALL {
            let (a, b) = scheme.euler_total();
            let expected = BigRational::from_integer(BigInt::from(a * eg - b));
            let init = initial_charges(g, scheme).map_err(|e| e.to_string())?;
            ensure(init.initial_total() == expected, || format!("{scheme}: initial {} vs {expected}", init.initial_total()))?;
            for big_k in &thresholds {
                let l = apply_rules(g, scheme, big_k).map_err(|e| e.to_string())?;
                l.check_conservation().map_err(|e| e.to_string())?;
                ensure(l.total() == expected, || format!("{scheme}: final {}", l.total()))?;
                transfers += l.transfers.len();
            }
        }
    }
    Ok(format!("{} embeddings x 4 schemes, {transfers} transfers", graphs.len()))
}

fn girth_claims() -> Result<String, String> {
    let mut checked = Vec::new();
    for (k, sets, seed) in [(0, 2, 1), (0, 25, 2), (1, 4, 3), (2, 2, 4)] {
        let g = c::descartes_girth6(k, DescartesSets::Sample { sets, seed }).map_err(|e| e.to_string())?;
        let girth = common::girth_by_edge_removal(&g.graph);
        ensure(girth.is_some_and(|x| x >= 6), || format!("H_{k} sample girth {girth:?}"))?;
        checked.push(format!("H_{k}[{sets}]={}", girth.unwrap()));
    }
    for big_k in 0..=3 {
        let g = c::two_star_girth7(big_k).map_err(|e| e.to_string())?;
        let girth = common::girth_by_edge_removal(&g.graph);
        ensure(girth.is_some_and(|x| x >= 7), || format!("two-star K={big_k} girth {girth:?}"))?;
        checked.push(format!("S_{big_k}={}", girth.unwrap()));
    }
    Ok(checked.join(" "))
}

fn main() {
    let criteria: [(&str, Check, u64); 10] = [
        ("Euler identity on fixtures and 100 random rotation systems", euler_identity, 5),
        ("shortest non-contractible cycles on 200 random embeddings", shortest_noncontractible, 120),
        ("planarizing subgraph postconditions", planarizing_postconditions, 120),
        ("(0,0,0,9g-4) and (2,2,9g-4) pipelines on fixtures", pipelines, 60),
        ("threshold identities", threshold_identities, 1),
        ("construction counts", construction_counts, 5),
        ("non-colorability of small constructions", non_colorability, 240),
        ("exact solver against exhaustive enumeration", solver_oracle, 120),
        ("discharging totals and conservation", discharging_audit, 60),
        ("girth of sampled constructions", girth_claims, 30),
    ];
    let mut failures = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let result = result.and_then(|detail| {
            if took > Duration::from_secs(limit) {
                Err(format!("took {took:.2?}, limit {limit}s"))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [{took:.2?} / {limit}s] {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name} [{took:.2?} / {limit}s] {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 passed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}

use std::path::PathBuf;
use std::process::{Command, Output};

use surfcolor_core::embedding::fixtures;
use surfcolor_core::format;
use surfcolor_core::graph::SimpleGraph;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_surfcolor"))
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output { status, stdout, stderr } = bin().args(args).output().unwrap();
    (status.code().unwrap(), String::from_utf8(stdout).unwrap(), String::from_utf8(stderr).unwrap())
}

fn p(path: &std::path::Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn genus_of_planar_k4() {
    let f = tmp("k4.emb", &format::print_embedding(&fixtures::planar_k4()));
    let (code, out, _) = run(&["genus", p(&f)]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("eg 0"));
    let f = tmp("k7.emb", &format::print_embedding(&fixtures::toroidal_k7()));
    assert!(run(&["genus", p(&f)]).1.starts_with("eg 2\n"));
}

#[test]
fn k5_is_not_four_colorable() {
    let f = tmp("k5.txt", &format::print_edge_list(&SimpleGraph::complete(5)));
    let (code, out, _) = run(&["color", p(&f), "--defects", "0,0,0,0"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("UNSAT"));
    let (code, out, _) = run(&["color", p(&f), "--defects", "0,0,0,0,0"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("k 5 d 0,0,0,0,0\n"));
}

#[test]
fn count_only_generation() {
    let (code, out, _) = run(&["generate", "--family", "g1", "--k", "2", "--count-only"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "edges 126"));
    let (_, out, _) = run(&["generate", "--family", "descartes6", "--k", "0", "--count-only"]);
    assert!(out.lines().any(|l| l == "edges 11529651"));
}

#[test]
fn exit_codes_and_error_prefixes() {
    let (code, _, err) = run(&["genus", "/nonexistent/file"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[io]"));
    let bad = tmp("bad.txt", "p 3 1\ne 0 9\n");
    let (code, _, err) = run(&["color", p(&bad), "--defects", "1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[format]"), "{err}");
    let k4 = tmp("k4b.emb", &format::print_embedding(&fixtures::planar_k4()));
    let (code, _, err) = run(&["color", p(&k4), "--pipeline", "22"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[precondition]"), "{err}");
    let (code, _, _) = run(&["genus"]);
    assert_eq!(code, 2);
    let (code, out, _) = run(&["ncc", p(&k4)]);
    assert_eq!(code, 1);
    assert!(out.starts_with("NONE"));
}

#[test]
fn coloring_output_round_trips_through_verify() {
    let g = tmp("k7b.emb", &format::print_embedding(&fixtures::toroidal_k7()));
    let col = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join("k7.col");
    let (code, _, _) = run(&["color", p(&g), "--pipeline", "000", "-o", p(&col)]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["verify", p(&g), p(&col)]);
    assert_eq!((code, out.as_str()), (0, "VALID (0,0,0,14)\n"));
    let text = std::fs::read_to_string(&col).unwrap();
    let parsed = format::parse_coloring(&text).unwrap();
    assert_eq!(format::print_coloring(&parsed.defects, &parsed.to_coloring(7).unwrap()), text);
    let wrong = tmp("k7-wrong.col", "k 2 d 0,0\nc 0 1\nc 1 1\nc 2 1\nc 3 1\nc 4 1\nc 5 1\nc 6 2\n");
    let (code, out, _) = run(&["verify", p(&g), p(&wrong)]);
    assert_eq!(code, 1);
    assert!(out.starts_with("INVALID"));
}

#[test]
fn generated_files_round_trip_and_are_deterministic() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("h0-a.txt");
    let b = dir.join("h0-b.txt");
    for path in [&a, &b] {
        let (code, _, _) = run(&["generate", "--family", "descartes6", "--k", "0", "--sample", "3", "--seed", "5", "-o", p(path)]);
        assert_eq!(code, 0);
    }
    let ga = std::fs::read_to_string(&a).unwrap();
    assert_eq!(ga, std::fs::read_to_string(&b).unwrap());
    let graph = format::parse_edge_list(&ga).unwrap();
    assert_eq!(format::print_edge_list(&graph), ga);
    let meta = std::fs::read_to_string(dir.join("h0-a.txt.meta")).unwrap();
    assert!(meta.contains("sample_seed 5\n"));
    let parsed = format::parse_meta(&meta).unwrap();
    assert_eq!(parsed.edges as usize, graph.edge_count());
    assert_eq!(format::print_meta(&parsed), meta);
    let (code, out1, _) = run(&["generate", "--family", "twostar7", "--k", "1", "--verify-budget", "1000000"]);
    assert_eq!(code, 0);
    assert!(out1.contains("# claim_status verified\n"));
    let (_, out2, _) = run(&["generate", "--family", "twostar7", "--k", "1", "--verify-budget", "1000000"]);
    assert_eq!(out1, out2);
    assert!(format::parse_graph(&out1).is_ok());
}

#[test]
fn other_commands() {
    let g = tmp("k5p.emb", &format::print_embedding(&fixtures::projective_k5()));
    let (code, out, _) = run(&["faces", p(&g)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("faces 6\n"));
    let (code, out, _) = run(&["ncc", p(&g)]);
    assert_eq!(code, 0);
    assert!(out.contains("class one_sided"));
    let (code, out, _) = run(&["planarize", p(&g), "--root", "0"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("eg 1\nh "));
    let quotient = &out[out.find("p ").unwrap()..];
    assert!(format::parse_edge_list(quotient).is_ok());
    let (code, out, _) = run(&["threshold", "--family", "trianglefree", "--genus", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("K 14\n"));
    let (code, out, _) = run(&["audit", p(&g), "--scheme", "s51", "--K", "5/2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("scheme s51\nK 5/2\neg 1\nexpected_total -14\n"));
    let (code, _, err) = run(&["audit", p(&g), "--scheme", "s99", "--K", "1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[precondition]"));
    let (code, out, _) = run(&["classify", p(&g), "--cycle", "0,1,2"]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
    let k4 = tmp("k4c.txt", &format::print_edge_list(&SimpleGraph::complete(4)));
    let (code, out, _) = run(&["color", p(&k4), "--defects", "0,0,0,0", "--pin", "0=4", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("c 0 4\n"));
}

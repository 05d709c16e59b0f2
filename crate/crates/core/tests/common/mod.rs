//! Independent oracles for the integration and acceptance tests. None of
//! these call the library routine they are used to check.
#![allow(dead_code)]

use std::collections::VecDeque;

use surfcolor_core::embedding::EmbeddedGraph;
use surfcolor_core::graph::SimpleGraph;

/// Every simple cycle (length >= 3) once, starting at its smallest vertex,
/// with the second vertex smaller than the last.
pub fn all_cycles(g: &SimpleGraph) -> Vec<Vec<usize>> {
    fn walk(g: &SimpleGraph, s: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        for &w in g.neighbors(v) {
            if w == s && path.len() >= 3 && path[1] < v {
                out.push(path.clone());
            } else if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                walk(g, s, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        on[s] = true;
        walk(g, s, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Contractibility by homology plus a disk test: the cycle must bound a set
/// of faces mod 2, and on one side that set must close up to a disk
/// (Euler characteristic 1).
pub fn cycle_is_contractible(g: &EmbeddedGraph, cycle: &[usize]) -> bool {
    let faces = g.faces();
    let m = g.edge_count();
    let mut sides: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, f) in faces.iter().enumerate() {
        for d in &f.darts {
            sides[d.edge()].push(i);
        }
    }
    assert!(sides.iter().all(|s| s.len() == 2), "every edge has two face sides");
    let mut on_cycle = vec![false; m];
    for i in 0..cycle.len() {
        let e = g.edge_between(cycle[i], cycle[(i + 1) % cycle.len()]).expect("cycle edge");
        on_cycle[e] = true;
    }
    let mut member: Vec<Option<bool>> = vec![None; faces.len()];
    member[0] = Some(true);
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        let mine = member[f].unwrap();
        for d in &faces[f].darts {
            let e = d.edge();
            let other = if sides[e][0] == f { sides[e][1] } else { sides[e][0] };
            let want = mine ^ on_cycle[e];
            match member[other] {
                Some(x) if x != want => return false,
                Some(_) => {}
                None => {
                    member[other] = Some(want);
                    queue.push_back(other);
                }
            }
        }
    }
    [true, false].into_iter().any(|side| {
        let chosen: Vec<usize> = (0..faces.len()).filter(|&i| member[i] == Some(side)).collect();
        if chosen.is_empty() {
            return false;
        }
        let mut vs = vec![false; g.vertex_count()];
        let mut es = vec![false; m];
        for &i in &chosen {
            for &v in &faces[i].vertices {
                vs[v] = true;
            }
            for d in &faces[i].darts {
                es[d.edge()] = true;
            }
        }
        let chi = vs.iter().filter(|&&b| b).count() as i64 - es.iter().filter(|&&b| b).count() as i64
            + chosen.len() as i64;
        chi == 1
    })
}

/// Length of a shortest non-contractible cycle by exhaustive enumeration.
pub fn brute_force_ncc_length(g: &EmbeddedGraph) -> Option<usize> {
    all_cycles(g.graph())
        .into_iter()
        .filter(|c| !cycle_is_contractible(g, c))
        .map(|c| c.len())
        .min()
}

/// Faces of the orientable rotation system given by neighbor orders.
fn orientable_face_count(order: &[Vec<usize>]) -> usize {
    let pos = |v: usize, u: usize| order[v].iter().position(|&x| x == u).unwrap();
    let mut seen = std::collections::HashSet::new();
    let mut faces = 0;
    for u in 0..order.len() {
        for &v in &order[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                let next = order[b][(pos(b, a) + 1) % order[b].len()];
                (a, b) = (b, next);
            }
        }
    }
    faces
}

/// Planarity of a connected graph by trying every orientable rotation
/// system; `None` when there are more than `cap` of them.
pub fn rotation_planarity(g: &SimpleGraph, cap: u64) -> Option<bool> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(true);
    }
    let mut total: u64 = 1;
    for v in 0..n {
        for i in 2..g.degree(v).max(1) as u64 {
            total = total.saturating_mul(i);
        }
    }
    if total > cap {
        return None;
    }
    let mut per_vertex: Vec<Vec<Vec<usize>>> = Vec::new();
    for v in 0..n {
        let nb = g.neighbors(v).to_vec();
        if nb.len() <= 2 {
            per_vertex.push(vec![nb]);
            continue;
        }
        let mut perms = Vec::new();
        let mut rest = nb[1..].to_vec();
        permute(&mut rest, 0, &mut |p| {
            let mut r = vec![nb[0]];
            r.extend_from_slice(p);
            perms.push(r);
        });
        per_vertex.push(perms);
    }
    let target = 2 + g.edge_count() as i64 - n as i64;
    let mut idx = vec![0usize; n];
    loop {
        let order: Vec<Vec<usize>> = (0..n).map(|v| per_vertex[v][idx[v]].clone()).collect();
        let f = if g.edge_count() == 0 { 1 } else { orientable_face_count(&order) };
        if f as i64 == target {
            return Some(true);
        }
        let mut v = 0;
        loop {
            if v == n {
                return Some(false);
            }
            idx[v] += 1;
            if idx[v] < per_vertex[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn permute(xs: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}

/// Defect check written from the definition.
pub fn is_defective_coloring(g: &SimpleGraph, defects: &[usize], colors: &[usize]) -> bool {
    (0..g.vertex_count()).all(|v| {
        colors[v] < defects.len()
            && g.neighbors(v).iter().filter(|&&w| colors[w] == colors[v]).count() <= defects[colors[v]]
    })
}

/// Try all `k^n` colorings (respecting pins).
pub fn exhaustive_coloring(g: &SimpleGraph, defects: &[usize], pins: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let k = defects.len();
    let mut colors = vec![0usize; n];
    loop {
        if pins.iter().all(|&(v, c)| colors[v] == c) && is_defective_coloring(g, defects, &colors) {
            return Some(colors);
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Girth: for every edge `uv`, one plus the distance from `u` to `v`
/// avoiding that edge.
pub fn girth_by_edge_removal(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut q = VecDeque::from([u]);
        while let Some(x) = q.pop_front() {
            if best.is_some_and(|b| dist[x] + 2 > b) {
                break;
            }
            for &y in g.neighbors(x) {
                if (x == u && y == v) || dist[y] != usize::MAX {
                    continue;
                }
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
        if dist[v] != usize::MAX {
            let len = dist[v] + 1;
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

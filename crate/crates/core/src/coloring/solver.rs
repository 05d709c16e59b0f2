//! Exact defective-coloring search.
//!
//! Vertices are colored in a static order: pinned vertices first (by id),
//! then the rest by descending degree with ties broken by id. A color is
//! tried at `v` only if neither `v` nor any same-colored neighbor would exceed
//! its defect; after each assignment every uncolored vertex whose options may
//! have shrunk is checked for a remaining color (forward checking). Unpinned
//! colors with equal defects are interchangeable, so among those not used
//! yet only the lowest is tried.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{Color, Coloring, ColoringError, DefectVector};
use crate::graph::{SimpleGraph, VertexId};

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Vertices with a prescribed color.
    pub pins: Vec<(VertexId, Color)>,
    /// Vertices that must have no neighbor of their own color.
    pub isolated: Vec<VertexId>,
    /// Give up after this many search nodes.
    pub node_budget: Option<u64>,
    /// Worker threads; 0 or 1 searches sequentially. The answer and the
    /// witness do not depend on this (unless the budget runs out).
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnsatReason {
    Exhausted { nodes: u64 },
    ContradictoryPins(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Sat(Coloring),
    Unsat(UnsatReason),
    Aborted { nodes: u64 },
}

impl SolveOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            SolveOutcome::Sat(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self, SolveOutcome::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, SolveOutcome::Unsat(_))
    }
}

struct Aborted;

struct Budget {
    nodes: AtomicU64,
    limit: Option<u64>,
}

impl Budget {
    fn tick(&self) -> Result<(), Aborted> {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        match self.limit {
            Some(limit) if used > limit => Err(Aborted),
            _ => Ok(()),
        }
    }

    fn used(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

struct Problem<'a> {
    g: &'a SimpleGraph,
    d: &'a [usize],
    k: usize,
    order: Vec<VertexId>,
    pin: Vec<Option<Color>>,
    isolated: Vec<bool>,
    /// Colors sharing a class id are interchangeable.
    class: Vec<usize>,
}

#[derive(Clone)]
struct State {
    color: Vec<Option<Color>>,
    same: Vec<usize>,
    /// `count[v * k + c]`: colored neighbors of `v` with color `c`.
    count: Vec<u32>,
    used: Vec<usize>,
}

impl Problem<'_> {
    fn fresh(&self) -> State {
        let n = self.g.vertex_count();
        State { color: vec![None; n], same: vec![0; n], count: vec![0; n * self.k], used: vec![0; self.k] }
    }

    fn cap(&self, v: VertexId, c: Color) -> usize {
        if self.isolated[v] {
            0
        } else {
            self.d[c]
        }
    }

    fn feasible(&self, st: &State, v: VertexId, c: Color) -> bool {
        if self.pin[v].is_some_and(|p| p != c) {
            return false;
        }
        if st.count[v * self.k + c] as usize > self.cap(v, c) {
            return false;
        }
        self.g.neighbors(v).iter().all(|&u| st.color[u] != Some(c) || st.same[u] < self.cap(u, c))
    }

    fn has_option(&self, st: &State, v: VertexId) -> bool {
        (0..self.k).any(|c| self.feasible(st, v, c))
    }

    fn assign(&self, st: &mut State, v: VertexId, c: Color) {
        st.color[v] = Some(c);
        st.same[v] = st.count[v * self.k + c] as usize;
        st.used[c] += 1;
        for &u in self.g.neighbors(v) {
            st.count[u * self.k + c] += 1;
            if st.color[u] == Some(c) {
                st.same[u] += 1;
            }
        }
    }

    fn unassign(&self, st: &mut State, v: VertexId) {
        let c = st.color[v].take().expect("assigned");
        st.same[v] = 0;
        st.used[c] -= 1;
        for &u in self.g.neighbors(v) {
            st.count[u * self.k + c] -= 1;
            if st.color[u] == Some(c) {
                st.same[u] -= 1;
            }
        }
    }

    fn candidates(&self, st: &State, v: VertexId) -> Vec<Color> {
        (0..self.k)
            .filter(|&c| self.feasible(st, v, c))
            .filter(|&c| {
                st.used[c] > 0 || !(0..c).any(|b| self.class[b] == self.class[c] && st.used[b] == 0)
            })
            .collect()
    }

    /// After coloring `v` with `c`, every uncolored vertex next to `v` or to
    /// a `c`-colored neighbor of `v` must still have an option.
    fn forward_ok(&self, st: &State, v: VertexId, c: Color) -> bool {
        let uncolored_ok = |x: VertexId| {
            self.g.neighbors(x).iter().all(|&y| st.color[y].is_some() || self.has_option(st, y))
        };
        uncolored_ok(v)
            && self.g.neighbors(v).iter().all(|&u| st.color[u] != Some(c) || uncolored_ok(u))
    }

    /// Depth-first search over `order[start..stop]`. At depth `stop`, `leaf`
    /// decides whether to accept (returning with the state kept) or to
    /// backtrack.
    fn search(
        &self,
        st: &mut State,
        start: usize,
        stop: usize,
        budget: &Budget,
        leaf: &mut dyn FnMut(&State) -> bool,
    ) -> Result<bool, Aborted> {
        let mut frames: Vec<(Vec<Color>, usize)> = Vec::new();
        let mut depth = start;
        loop {
            if depth == stop {
                if leaf(st) {
                    return Ok(true);
                }
            } else if frames.len() == depth - start {
                let v = self.order[depth];
                frames.push((self.candidates(st, v), 0));
            }
            let advanced = if depth == stop {
                false
            } else {
                let v = self.order[depth];
                let frame = frames.last_mut().unwrap();
                let mut advanced = false;
                while frame.1 < frame.0.len() {
                    let c = frame.0[frame.1];
                    frame.1 += 1;
                    budget.tick()?;
                    self.assign(st, v, c);
                    if self.forward_ok(st, v, c) {
                        advanced = true;
                        break;
                    }
                    self.unassign(st, v);
                }
                if !advanced {
                    frames.pop();
                }
                advanced
            };
            if advanced {
                depth += 1;
                continue;
            }
            if depth == start {
                return Ok(false);
            }
            depth -= 1;
            self.unassign(st, self.order[depth]);
        }
    }
}

/// Decide whether `g` has a `defects`-coloring honoring the options' pins,
/// returning the first coloring in search order.
pub fn solve_exact(
    g: &SimpleGraph,
    defects: &DefectVector,
    options: &SolveOptions,
) -> Result<SolveOutcome, ColoringError> {
    let n = g.vertex_count();
    let k = defects.k();
    let mut pin = vec![None; n];
    for &(v, c) in &options.pins {
        if v >= n {
            return Err(ColoringError::UnknownVertex(v));
        }
        if c >= k {
            return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k });
        }
        match pin[v] {
            Some(p) if p != c => {
                return Ok(SolveOutcome::Unsat(UnsatReason::ContradictoryPins(format!(
                    "vertex {v} pinned to colors {} and {}",
                    p + 1,
                    c + 1
                ))))
            }
            _ => pin[v] = Some(c),
        }
    }
    let mut isolated = vec![false; n];
    for &v in &options.isolated {
        if v >= n {
            return Err(ColoringError::UnknownVertex(v));
        }
        isolated[v] = true;
    }
    for v in 0..n {
        if let Some(c) = pin[v] {
            let same = g.neighbors(v).iter().filter(|&&u| pin[u] == Some(c)).count();
            let cap = if isolated[v] { 0 } else { defects.get(c) };
            if same > cap {
                return Ok(SolveOutcome::Unsat(UnsatReason::ContradictoryPins(format!(
                    "vertex {v} pinned to color {} has {same} neighbors pinned to it, allowed {cap}",
                    c + 1
                ))));
            }
        }
    }

    let pinned_color: Vec<bool> = (0..k).map(|c| pin.contains(&Some(c))).collect();
    let class: Vec<usize> = (0..k)
        .map(|c| {
            if pinned_color[c] {
                k + c
            } else {
                (0..=c).find(|&b| !pinned_color[b] && defects.get(b) == defects.get(c)).unwrap()
            }
        })
        .collect();
    let mut order: Vec<VertexId> = (0..n).filter(|&v| pin[v].is_some()).collect();
    let mut rest: Vec<VertexId> = (0..n).filter(|&v| pin[v].is_none()).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order.extend(rest);

    let problem = Problem { g, d: defects.as_slice(), k, order, pin, isolated, class };
    let budget = Budget { nodes: AtomicU64::new(0), limit: options.node_budget };
    let to_coloring = |st: &State| Coloring { colors: st.color.clone() };

    if options.jobs <= 1 || n < 2 {
        let mut st = problem.fresh();
        return Ok(match problem.search(&mut st, 0, n, &budget, &mut |_| true) {
            Ok(true) => SolveOutcome::Sat(to_coloring(&st)),
            Ok(false) => SolveOutcome::Unsat(UnsatReason::Exhausted { nodes: budget.used() }),
            Err(Aborted) => SolveOutcome::Aborted { nodes: budget.used() },
        });
    }

    // Split the tree at the shallowest depth giving enough subtrees; the
    // subtrees are searched in parallel and the first success in sequential
    // order wins.
    let want = 8 * options.jobs;
    let mut depth = 0;
    let mut prefixes: Vec<Vec<Color>> = vec![Vec::new()];
    while depth < n && prefixes.len() < want {
        depth += 1;
        let mut found = Vec::new();
        let mut st = problem.fresh();
        let record = &mut |s: &State| {
            found.push(problem.order[..depth].iter().map(|&v| s.color[v].unwrap()).collect());
            false
        };
        if problem.search(&mut st, 0, depth, &budget, record).is_err() {
            return Ok(SolveOutcome::Aborted { nodes: budget.used() });
        }
        prefixes = found;
        if prefixes.is_empty() {
            return Ok(SolveOutcome::Unsat(UnsatReason::Exhausted { nodes: budget.used() }));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| ColoringError::Invariant(format!("thread pool: {e}")))?;
    let found = pool.install(|| {
        prefixes.par_iter().find_map_first(|prefix| {
            let mut st = problem.fresh();
            for (&v, &c) in problem.order.iter().zip(prefix) {
                problem.assign(&mut st, v, c);
            }
            match problem.search(&mut st, depth, n, &budget, &mut |_| true) {
                Ok(true) => Some(Ok(to_coloring(&st))),
                Ok(false) => None,
                Err(Aborted) => Some(Err(Aborted)),
            }
        })
    });
    Ok(match found {
        Some(Ok(c)) => SolveOutcome::Sat(c),
        Some(Err(Aborted)) => SolveOutcome::Aborted { nodes: budget.used() },
        None => SolveOutcome::Unsat(UnsatReason::Exhausted { nodes: budget.used() }),
    })
}

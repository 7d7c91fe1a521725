//! Edge-slot backtracking that needs no structural assumption.
//!
//! Vertices are completed one at a time in non-increasing degree order;
//! vertex `i` picks all of its remaining neighbours among the later
//! vertices. Later vertices with the same target degree and the same
//! neighbours so far are interchangeable, so only prefixes of each such
//! class are tried. Branches die when the residual demand stops being
//! graphical or the partial graph stops being planar.

use alloc::vec::Vec;

use super::Collector;
use crate::graph::Graph;
use crate::planarity::is_planar;
use crate::sequence::{erdos_gallai_sorted, DegreeSequence};

/// A partial realization: vertices `0..next` are complete.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericState {
    graph: Graph,
    next: usize,
}

impl GenericState {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn completed(&self) -> usize {
        self.next
    }
}

pub fn enumerate_generic(s: &DegreeSequence, limit: Option<usize>) -> Vec<Graph> {
    let mut sink = Collector::new(limit);
    if let Some(root) = root(s) {
        explore(s, &root, &mut sink);
    }
    sink.into_graphs()
}

/// The empty partial realization, or `None` when the necessary conditions
/// already fail.
pub fn root(s: &DegreeSequence) -> Option<GenericState> {
    if !s.polyhedral_feasible().polyhedral_necessary || !s.is_graphical() {
        return None;
    }
    Some(GenericState { graph: Graph::empty(s.len()), next: 0 })
}

/// All live states after completing the first `depth` vertices, in search
/// order. Exploring each of them covers the same leaves as exploring the
/// root.
pub fn branches(s: &DegreeSequence, depth: usize) -> Vec<GenericState> {
    let mut frontier: Vec<GenericState> = root(s).into_iter().collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for st in &frontier {
            if st.next >= s.len() {
                next.push(st.clone());
                continue;
            }
            children(s, st, &mut |child| {
                next.push(child.clone());
                true
            });
        }
        frontier = next;
    }
    frontier
}

/// Searches below `state`; returns `false` once the collector is full.
pub fn explore(s: &DegreeSequence, state: &GenericState, sink: &mut Collector) -> bool {
    if state.next == s.len() {
        return sink.offer(&state.graph);
    }
    children(s, state, &mut |child| explore(s, child, sink))
}

/// Calls `f` on every pruned child of `state`, stopping when it returns
/// `false`.
fn children(s: &DegreeSequence, state: &GenericState, f: &mut dyn FnMut(&GenericState) -> bool) -> bool {
    let d = s.degrees();
    let p = d.len();
    let i = state.next;
    let g = &state.graph;
    let need = d[i] as usize - g.degree(i);
    // Interchangeable classes among the later vertices that still need edges.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut keys: Vec<(u32, u64)> = Vec::new();
    for j in i + 1..p {
        if g.degree(j) >= d[j] as usize {
            continue;
        }
        let key = (d[j], g.neighbor_mask(j));
        match keys.iter().position(|k| *k == key) {
            Some(c) => classes[c].push(j),
            None => {
                keys.push(key);
                classes.push(alloc::vec![j]);
            }
        }
    }
    let available: usize = classes.iter().map(|c| c.len()).sum();
    if need > available {
        return true;
    }
    let mut counts = alloc::vec![0usize; classes.len()];
    distribute(&classes, 0, need, &mut counts, &mut |counts| {
        let mut child = GenericState { graph: g.clone(), next: i + 1 };
        for (class, &c) in classes.iter().zip(counts) {
            for &j in &class[..c] {
                child.graph.add_edge(i, j);
            }
        }
        if !viable(d, &child) {
            return true;
        }
        f(&child)
    })
}

/// Every way to split `left` edges over the classes, as per-class counts.
fn distribute(
    classes: &[Vec<usize>],
    k: usize,
    left: usize,
    counts: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if k == classes.len() {
        return left > 0 || f(counts);
    }
    let room: usize = classes[k + 1..].iter().map(|c| c.len()).sum();
    let lo = left.saturating_sub(room);
    let hi = left.min(classes[k].len());
    for c in lo..=hi {
        counts[k] = c;
        if !distribute(classes, k + 1, left - c, counts, f) {
            counts[k] = 0;
            return false;
        }
    }
    counts[k] = 0;
    true
}

/// The residual demand of the unfinished vertices must be realizable among
/// themselves, and the partial graph must be planar.
fn viable(d: &[u32], st: &GenericState) -> bool {
    let g = &st.graph;
    let mut residual: Vec<u64> = (st.next..d.len()).map(|j| d[j] as u64 - g.degree(j) as u64).collect();
    residual.sort_unstable_by(|a, b| b.cmp(a));
    if !erdos_gallai_sorted(&residual) {
        return false;
    }
    is_planar(g)
}

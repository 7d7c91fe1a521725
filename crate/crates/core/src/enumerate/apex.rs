//! Enumeration through a vertex `y` of degree `p - 2`.
//!
//! Let `a` be the vertex not adjacent to `y`, `F = G - y` and
//! `W = V(F) - a`. In a polyhedron the face of `F` that held `y` is bounded
//! by a cycle `C` through all of `W`, so either `C` is exactly `W` with `a`
//! strictly inside, or `C` also passes through `a` and `F` is outerplanar.
//! The remaining edges of `F` are spokes from `a` and chords of `C`, which
//! must be pairwise non-crossing on the side away from `y`.

use alloc::vec::Vec;

use super::necklace::{bracelet_paths, necklaces};
use super::Collector;
use crate::connectivity::is_3_connected;
use crate::graph::Graph;
use crate::planarity::is_planar;
use crate::sequence::DegreeSequence;
use crate::{Error, Result};

/// A polyhedron with an apex, split along the cycle `C` of `F = G - y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ApexDecomposition {
    pub order: usize,
    pub y: usize,
    pub a: usize,
    /// Vertex ids of `C` in cyclic order. Contains every vertex except `y`,
    /// and `a` too when `a` lies on `C`.
    pub cycle: Vec<usize>,
    /// Edges of `F` not on `C`: spokes at `a` and chords of `C`.
    pub interior: Vec<(usize, usize)>,
}

impl ApexDecomposition {
    /// `y` joined to every vertex but `a`, plus the cycle and interior edges.
    pub fn assemble(&self) -> Result<Graph> {
        let mut g = Graph::try_empty(self.order)?;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for v in 0..self.order {
            if v != self.y && v != self.a {
                edges.push((self.y, v));
            }
        }
        let n = self.cycle.len();
        for i in 0..n {
            edges.push((self.cycle[i], self.cycle[(i + 1) % n]));
        }
        edges.extend_from_slice(&self.interior);
        for (u, v) in edges {
            if u == v || u >= self.order || v >= self.order {
                return Err(Error::InvalidEdge { u, v });
            }
            if !g.add_edge(u, v) {
                return Err(Error::ConstructionFailed(alloc::format!("edge {u}-{v} placed twice")));
            }
        }
        Ok(g)
    }
}

/// One independent subtree of the apex search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ApexTask {
    pub a_degree: u32,
    /// Whether `a` lies on `C`.
    pub a_on_cycle: bool,
    /// Degrees of the `W` vertices in their order around `C` (for `a` on
    /// `C`, the order from `a`'s successor to its predecessor).
    pub arrangement: Vec<u32>,
}

/// All subtrees, in a fixed order.
pub fn tasks(s: &DegreeSequence) -> Result<Vec<ApexTask>> {
    let p = s.len();
    if p < 4 || s.max() as usize != p - 2 {
        return Err(Error::ApexPreconditionViolated);
    }
    let mut out = Vec::new();
    if !s.polyhedral_feasible().polyhedral_necessary {
        return Ok(out);
    }
    let rest = &s.degrees()[1..];
    let mut a_values: Vec<u32> = rest.to_vec();
    a_values.dedup();
    for &da in &a_values {
        let mut w: Vec<u32> = rest.to_vec();
        let at = w.iter().position(|&d| d == da).unwrap();
        w.remove(at);
        // Every W vertex has y and its two cycle neighbours.
        if w.iter().any(|&d| d < 3) {
            continue;
        }
        if (da as usize) <= w.len() {
            for arrangement in necklaces(&w) {
                out.push(ApexTask { a_degree: da, a_on_cycle: false, arrangement });
            }
        }
        if da >= 3 {
            for arrangement in bracelet_paths(&w) {
                out.push(ApexTask { a_degree: da, a_on_cycle: true, arrangement });
            }
        }
    }
    Ok(out)
}

/// Polyhedral realizations of `s`, which must start with `p - 2`.
pub fn enumerate_apex(s: &DegreeSequence, limit: Option<usize>) -> Result<Vec<Graph>> {
    let mut sink = Collector::new(limit);
    for task in tasks(s)? {
        if !run(&task, &mut sink) {
            break;
        }
    }
    Ok(sink.into_graphs())
}

/// Explores one subtree; returns `false` once the collector is full.
pub fn run(task: &ApexTask, sink: &mut Collector) -> bool {
    if task.a_on_cycle {
        run_on_cycle(task, sink)
    } else {
        run_inside(task, sink)
    }
}

#[derive(Clone, Copy)]
struct Region {
    lo: usize,
    hi: usize,
    allow_hi: bool,
    exhaust: bool,
}

/// Receives each complete chord set; returns `false` to stop.
type ChordSink<'a> = dyn FnMut(&[(usize, usize)]) -> bool + 'a;

/// Non-crossing chord placement on positions of a polygon. Positions may run
/// past `n` for a wrapping sector; `budget` is indexed modulo `n`.
struct Chords<'a> {
    n: usize,
    budget: Vec<u32>,
    chords: Vec<(usize, usize)>,
    emit: &'a mut ChordSink<'a>,
}

impl Chords<'_> {
    fn solve(&mut self, stack: &mut Vec<Region>) -> bool {
        let Some(r) = stack.pop() else {
            if self.budget.iter().all(|&b| b == 0) {
                let chords = core::mem::take(&mut self.chords);
                let go_on = (self.emit)(&chords);
                self.chords = chords;
                return go_on;
            }
            return true;
        };
        let go_on = if r.hi <= r.lo { self.solve(stack) } else { self.place(r, stack) };
        stack.push(r);
        go_on
    }

    fn place(&mut self, r: Region, stack: &mut Vec<Region>) -> bool {
        let n = self.n;
        let lo = r.lo % n;
        let mut cand: Vec<usize> = (r.lo + 2..r.hi).filter(|&j| self.budget[j % n] > 0).collect();
        if r.allow_hi && r.hi - r.lo >= 2 && self.budget[r.hi % n] > 0 {
            cand.push(r.hi);
        }
        let need = self.budget[lo] as usize;
        if need > cand.len() && r.exhaust {
            return true;
        }
        let sizes = if r.exhaust { need..=need } else { 0..=need.min(cand.len()) };
        for k in sizes {
            let mut chosen: Vec<usize> = Vec::with_capacity(k);
            if !self.subsets(r, &cand, 0, k, &mut chosen, stack) {
                return false;
            }
        }
        true
    }

    fn subsets(
        &mut self,
        r: Region,
        cand: &[usize],
        from: usize,
        k: usize,
        chosen: &mut Vec<usize>,
        stack: &mut Vec<Region>,
    ) -> bool {
        if chosen.len() == k {
            return self.commit(r, chosen, stack);
        }
        let left = k - chosen.len();
        for i in from..cand.len() {
            if cand.len() - i < left {
                break;
            }
            chosen.push(cand[i]);
            let ok = self.subsets(r, cand, i + 1, k, chosen, stack);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    fn commit(&mut self, r: Region, chosen: &[usize], stack: &mut Vec<Region>) -> bool {
        let n = self.n;
        self.budget[r.lo % n] -= chosen.len() as u32;
        for &j in chosen {
            self.budget[j % n] -= 1;
            self.chords.push((r.lo % n, j % n));
        }
        let depth = stack.len();
        // Sub-regions pushed right to left so they are solved left to right.
        let mut ends: Vec<usize> = Vec::with_capacity(chosen.len() + 2);
        ends.push(r.lo + 1);
        ends.extend_from_slice(chosen);
        if *ends.last().unwrap() != r.hi {
            ends.push(r.hi);
        }
        for w in ends.windows(2).rev() {
            stack.push(Region { lo: w[0], hi: w[1], allow_hi: true, exhaust: true });
        }
        let go_on = self.solve(stack);
        stack.truncate(depth);
        for &j in chosen {
            self.budget[j % n] += 1;
            self.chords.pop();
        }
        self.budget[r.lo % n] += chosen.len() as u32;
        go_on
    }
}

/// `a` strictly inside `C`: choose spokes, then chords sector by sector.
fn run_inside(task: &ApexTask, sink: &mut Collector) -> bool {
    let w = &task.arrangement;
    let n = w.len();
    let da = task.a_degree as usize;
    let p = n + 2;
    // Vertex ids: y = 0, a = 1, position i = 2 + i.
    let open: Vec<usize> = (0..n).filter(|&i| w[i] >= 4).collect();
    if open.len() < da {
        return true;
    }
    let residual: u32 = w.iter().map(|&d| d - 3).sum();
    if (residual as usize) < da || !(residual as usize - da).is_multiple_of(2) {
        return true;
    }
    let mut base = Graph::empty(p);
    for i in 0..n {
        base.add_edge(0, 2 + i);
        base.add_edge(2 + i, 2 + (i + 1) % n);
    }
    let mut spokes: Vec<usize> = Vec::with_capacity(da);
    choose_spokes(&open, da, 0, &mut spokes, &mut |spokes: &[usize]| {
        let mut budget: Vec<u32> = w.iter().map(|&d| d - 3).collect();
        for &s in spokes {
            budget[s] -= 1;
        }
        let mut g = base.clone();
        for &s in spokes {
            g.add_edge(1, 2 + s);
        }
        let mut emit = |chords: &[(usize, usize)]| {
            let mut h = g.clone();
            for &(u, v) in chords {
                h.add_edge(2 + u, 2 + v);
            }
            offer(&h, sink)
        };
        let mut stack: Vec<Region> = Vec::new();
        let k = spokes.len();
        for i in (0..k).rev() {
            let lo = spokes[i];
            let hi = if i + 1 < k { spokes[i + 1] } else { spokes[0] + n };
            stack.push(Region { lo, hi, allow_hi: true, exhaust: i != 0 });
        }
        let mut chords = Chords { n, budget, chords: Vec::new(), emit: &mut emit };
        chords.solve(&mut stack)
    })
}

fn choose_spokes(
    open: &[usize],
    k: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == k {
        return f(chosen);
    }
    for i in from..open.len() {
        if open.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(open[i]);
        let ok = choose_spokes(open, k, i + 1, chosen, f);
        chosen.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// `a` on `C` at position 0: an outerplanar chord system on the path.
fn run_on_cycle(task: &ApexTask, sink: &mut Collector) -> bool {
    let w = &task.arrangement;
    let n = w.len();
    let p = n + 2;
    // Vertex ids: y = 0, position i = 1 + i with a = position 0.
    let mut budget: Vec<u32> = Vec::with_capacity(n + 1);
    budget.push(task.a_degree - 2);
    budget.extend(w.iter().map(|&d| d - 3));
    let total: u32 = budget.iter().sum();
    if !total.is_multiple_of(2) {
        return true;
    }
    let mut g = Graph::empty(p);
    for i in 0..=n {
        if i > 0 {
            g.add_edge(0, 1 + i);
        }
        g.add_edge(1 + i, 1 + (i + 1) % (n + 1));
    }
    let mut emit = |chords: &[(usize, usize)]| {
        let mut h = g.clone();
        for &(u, v) in chords {
            h.add_edge(1 + u, 1 + v);
        }
        offer(&h, sink)
    };
    let mut stack = alloc::vec![Region { lo: 0, hi: n, allow_hi: false, exhaust: true }];
    let mut chords = Chords { n: n + 1, budget, chords: Vec::new(), emit: &mut emit };
    chords.solve(&mut stack)
}

fn offer(g: &Graph, sink: &mut Collector) -> bool {
    if is_3_connected(g) && is_planar(g) {
        sink.offer(g)
    } else {
        !sink.is_full()
    }
}

/// Splits an apex graph along its `C`, if `g` has a vertex of degree
/// `p - 2` and is polyhedral.
pub fn decompose(g: &Graph) -> Option<ApexDecomposition> {
    let p = g.order();
    if p < 5 {
        return None;
    }
    let y = (0..p).find(|&v| g.degree(v) == p - 2)?;
    let a = (0..p).find(|&v| v != y && !g.has_edge(y, v))?;
    let emb = match crate::planarity::planarity_check(g) {
        crate::planarity::Planarity::Planar(e) => e,
        _ => return None,
    };
    // Around y the rotation lists W in the order of C; a sits in the one
    // quadrilateral face at y, if any.
    let mut cycle: Vec<usize> = Vec::with_capacity(p - 1);
    for &x in &emb.rotation[y] {
        // The face y, x, a, z closes with z -> y, so z precedes x at y.
        let face = emb.face_from(y, x);
        if face.len() == 4 && face[2] == a {
            cycle.push(a);
        }
        cycle.push(x);
    }
    let m = cycle.len();
    let mut cycle_edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        let (u, v) = (cycle[i], cycle[(i + 1) % m]);
        if !g.has_edge(u, v) {
            return None;
        }
        cycle_edges.push((u.min(v), u.max(v)));
    }
    let interior = g.edges().filter(|&(u, v)| u != y && v != y && !cycle_edges.contains(&(u, v))).collect();
    Some(ApexDecomposition { order: p, y, a, cycle, interior })
}

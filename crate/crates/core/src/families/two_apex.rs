//! Polyhedra with two vertices `x`, `y` of degree `p - 2`.
//!
//! When `x` and `y` are adjacent, deleting the two vertices `a`, `b` they
//! miss leaves the base graph `G'`: the cycle `x, v_1, .., v_{p-4}` with `y`
//! joined to all of it and `x` joined to `v_2 .. v_{p-5}`. Its triangular
//! faces are `Z_1 = x y v_1`, `X_i = x v_i v_{i+1}` and `Y_i = y v_i v_{i+1}`.
//! A [`Placement`] says where `a` (which must reach `x`) and `b` (which
//! must reach `y`) go back in.

use alloc::format;
use alloc::vec::Vec;

use super::{sequence_of, FamilyId, FamilyKind};
use crate::graph::Graph;
use crate::planarity::is_polyhedral;
use crate::sequence::{degree_sequence, DegreeSequence};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AMode {
    /// `a` and `b` both subdivide `v_i v_{i+1}` as `v_i a b v_{i+1}`, with
    /// the optional extra edges `a v_{i+1}` and `b v_i`.
    WithBSameGap { a_back: bool, b_back: bool },
    /// `a` sits in the face `X_j`.
    InTriangleX(usize),
    /// `a` subdivides `v_j v_{j+1}`, `j != i`.
    Subdivides(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Placement {
    /// `a` in `Z_1` joined to `x`, `v_1`, `b`; `b` joined to `y`, `v_1`, `a`.
    AbAdjacentZ1,
    /// `a` in `X_i`, `b` in `Y_j`.
    AInXBInY { i: usize, j: usize },
    /// `b` subdivides `v_i v_{i+1}` and is joined to `y`.
    BSubdivides { i: usize, a: AMode },
}

/// Vertex ids: `y = 0`, `x = 1`, `v_i = 1 + i`, then `a = p - 2`,
/// `b = p - 1` once added.
fn v(i: usize) -> usize {
    1 + i
}

/// `G'` on `p - 2` vertices.
pub fn base_gprime(p: usize) -> Graph {
    assert!(p >= 7, "G' needs p >= 7");
    let n = p - 4;
    let mut g = Graph::empty(p - 2);
    let (y, x) = (0, 1);
    g.add_edge(x, v(1));
    for i in 1..n {
        g.add_edge(v(i), v(i + 1));
    }
    g.add_edge(v(n), x);
    g.add_edge(x, y);
    for i in 1..=n {
        g.add_edge(y, v(i));
    }
    for i in 2..n {
        g.add_edge(x, v(i));
    }
    g
}

pub fn construct_two_apex(p: usize, placement: Placement) -> Result<Graph> {
    if !(7..=crate::graph::MAX_ORDER).contains(&p) {
        return Err(Error::InvalidPlacement(format!("order {p} outside 7..=64")));
    }
    let top = p - 5;
    let in_range = |i: usize| (1..=top).contains(&i);
    let bad = |why: &str| Err(Error::InvalidPlacement(format!("{placement:?} at p={p}: {why}")));
    let base = base_gprime(p);
    let mut g = Graph::empty(p);
    for (u, w) in base.edges() {
        g.add_edge(u, w);
    }
    let (y, x, a, b) = (0, 1, p - 2, p - 1);
    match placement {
        Placement::AbAdjacentZ1 => {
            for (s, t) in [(a, x), (a, v(1)), (a, b), (b, y), (b, v(1))] {
                g.add_edge(s, t);
            }
        }
        Placement::AInXBInY { i, j } => {
            if !in_range(i) || !in_range(j) {
                return bad("index outside 1..=p-5");
            }
            for (s, t) in [(a, x), (a, v(i)), (a, v(i + 1)), (b, y), (b, v(j)), (b, v(j + 1))] {
                g.add_edge(s, t);
            }
        }
        Placement::BSubdivides { i, a: mode } => {
            if !in_range(i) {
                return bad("index outside 1..=p-5");
            }
            g.remove_edge(v(i), v(i + 1));
            g.add_edge(b, y);
            match mode {
                AMode::WithBSameGap { a_back, b_back } => {
                    for (s, t) in [(v(i), a), (a, b), (b, v(i + 1)), (a, x)] {
                        g.add_edge(s, t);
                    }
                    if a_back {
                        g.add_edge(a, v(i + 1));
                    }
                    if b_back {
                        g.add_edge(b, v(i));
                    }
                }
                AMode::InTriangleX(j) => {
                    if !in_range(j) {
                        return bad("index outside 1..=p-5");
                    }
                    g.add_edge(b, v(i));
                    g.add_edge(b, v(i + 1));
                    for (s, t) in [(a, x), (a, v(j)), (a, v(j + 1))] {
                        g.add_edge(s, t);
                    }
                }
                AMode::Subdivides(j) => {
                    if !in_range(j) || j == i {
                        return bad("needs j in 1..=p-5 and j != i");
                    }
                    g.add_edge(b, v(i));
                    g.add_edge(b, v(i + 1));
                    g.remove_edge(v(j), v(j + 1));
                    for (s, t) in [(a, x), (a, v(j)), (a, v(j + 1))] {
                        g.add_edge(s, t);
                    }
                }
            }
        }
    }
    Ok(g)
}

/// Every placement with indices in range at order `p`, in a fixed order:
/// lower indices first.
pub fn all_placements(p: usize) -> Vec<Placement> {
    let top = p.saturating_sub(5);
    let mut out = alloc::vec![Placement::AbAdjacentZ1];
    for i in 1..=top {
        for j in 1..=top {
            out.push(Placement::AInXBInY { i, j });
        }
    }
    for i in 1..=top {
        for a_back in [false, true] {
            for b_back in [false, true] {
                out.push(Placement::BSubdivides { i, a: AMode::WithBSameGap { a_back, b_back } });
            }
        }
        for j in 1..=top {
            out.push(Placement::BSubdivides { i, a: AMode::InTriangleX(j) });
            if j != i {
                out.push(Placement::BSubdivides { i, a: AMode::Subdivides(j) });
            }
        }
    }
    out
}

/// The two-apex polyhedra of order `p`: every polyhedral placement, then
/// the bipyramid and the apexes over a path.
pub fn sweep(p: usize) -> Vec<(Option<Placement>, Graph)> {
    let mut out: Vec<(Option<Placement>, Graph)> = all_placements(p)
        .into_iter()
        .filter_map(|pl| construct_two_apex(p, pl).ok().map(|g| (Some(pl), g)))
        .filter(|(_, g)| is_polyhedral(g))
        .collect();
    out.push((None, bipyramid(p)));
    out.push((None, apexes_over_path(p)));
    out
}

/// Which `sigma_k(p)` the sequence is, if any.
pub fn classify_sigma(s: &DegreeSequence) -> Option<u8> {
    let p = s.len();
    (1..=12).find(|&k| sequence_of(&FamilyId::sigma(k, p)).is_ok_and(|t| &t == s))
}

/// The first polyhedral two-apex construction realizing `sigma_k(p)`.
pub fn first_realization(k: u8, p: usize) -> Result<Graph> {
    let target = sequence_of(&FamilyId::sigma(k, p))?;
    sweep(p)
        .into_iter()
        .map(|(_, g)| g)
        .find(|g| degree_sequence(g) == target)
        .ok_or_else(|| Error::ConstructionFailed(format!("no two-apex construction gives {target}")))
}

/// Two apexes over a `(p-2)`-cycle.
pub fn bipyramid(p: usize) -> Graph {
    let mut g = Graph::empty(p);
    let n = p - 2;
    for i in 0..n {
        g.add_edge(2 + i, 2 + (i + 1) % n);
        g.add_edge(0, 2 + i);
        g.add_edge(1, 2 + i);
    }
    g
}

/// Two non-adjacent apexes over a path on `p - 2` vertices.
pub fn apexes_over_path(p: usize) -> Graph {
    let mut g = Graph::empty(p);
    let n = p - 2;
    for i in 0..n {
        if i + 1 < n {
            g.add_edge(2 + i, 3 + i);
        }
        g.add_edge(0, 2 + i);
        g.add_edge(1, 2 + i);
    }
    g
}

/// Sigma index of every construction family in the sweep at `p`.
pub fn sweep_sigmas(p: usize) -> Vec<u8> {
    let mut ks: Vec<u8> = sweep(p).iter().filter_map(|(_, g)| classify_sigma(&degree_sequence(g))).collect();
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// Sigma indices defined at `p`.
pub fn sigmas_defined(p: usize) -> Vec<u8> {
    (1..=12).filter(|&k| FamilyId::new(FamilyKind::Sigma(k), p).validate().is_ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_sequence() {
        let g = base_gprime(9);
        let s = sequence_of(&FamilyId::new(FamilyKind::BaseGPrime, 9)).unwrap();
        assert_eq!(degree_sequence(&g), s);
        assert!(is_polyhedral(&g));
    }

    #[test]
    fn table_rows() {
        let s = |g: &Graph| classify_sigma(&degree_sequence(g));
        assert_eq!(s(&construct_two_apex(12, Placement::AbAdjacentZ1).unwrap()), Some(9));
        for p in 8..=12 {
            let g = construct_two_apex(p, Placement::AInXBInY { i: 1, j: p - 5 }).unwrap();
            assert_eq!(s(&g), Some(6), "p={p}");
            let both = AMode::WithBSameGap { a_back: true, b_back: true };
            for i in [1, p - 5] {
                let g = construct_two_apex(p, Placement::BSubdivides { i, a: both }).unwrap();
                assert_eq!(s(&g), Some(8), "p={p}, i={i}");
                assert!(is_polyhedral(&g));
            }
        }
    }

    #[test]
    fn one_back_edge_at_the_end() {
        let only_b = AMode::WithBSameGap { a_back: false, b_back: true };
        let only_a = AMode::WithBSameGap { a_back: true, b_back: false };
        let g = construct_two_apex(9, Placement::BSubdivides { i: 1, a: only_b }).unwrap();
        assert_eq!(classify_sigma(&degree_sequence(&g)), Some(11));
        let g = construct_two_apex(9, Placement::BSubdivides { i: 1, a: only_a }).unwrap();
        assert_eq!(classify_sigma(&degree_sequence(&g)), Some(9));
    }

    #[test]
    fn out_of_range_placements() {
        assert!(construct_two_apex(8, Placement::AInXBInY { i: 0, j: 1 }).is_err());
        assert!(construct_two_apex(8, Placement::BSubdivides { i: 2, a: AMode::Subdivides(2) }).is_err());
        assert!(construct_two_apex(6, Placement::AbAdjacentZ1).is_err());
    }
}

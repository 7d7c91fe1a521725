//! Apex graphs described by what sits inside the cycle `C`: spokes from the
//! interior vertex `a` and non-crossing chords between cycle positions.

use alloc::vec::Vec;

use crate::enumerate::ApexDecomposition;

/// Cycle positions `0..len`, spokes from `a`, and chords between positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Disk {
    pub len: usize,
    pub spokes: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
}

impl Disk {
    pub fn push(&mut self) -> usize {
        self.len += 1;
        self.len - 1
    }

    /// Appends `k` nested chords around one vertex that gets none:
    /// `u_k .. u_1, c, v_1 .. v_k` with chords `u_i v_i`.
    pub fn filler(&mut self, k: usize) {
        let start = self.len;
        self.len += 2 * k + 1;
        let c = start + k;
        for i in 1..=k {
            self.chords.push((c - i, c + i));
        }
    }

    /// `y = 0`, `a = 1`, position `i` becomes vertex `2 + i`.
    pub fn decomposition(&self) -> ApexDecomposition {
        let mut interior: Vec<(usize, usize)> = self.spokes.iter().map(|&s| (1, 2 + s)).collect();
        interior.extend(self.chords.iter().map(|&(u, v)| (2 + u, 2 + v)));
        ApexDecomposition { order: self.len + 2, y: 0, a: 1, cycle: (2..self.len + 2).collect(), interior }
    }

    pub fn assemble(&self) -> crate::Result<crate::Graph> {
        self.decomposition().assemble()
    }
}

/// `a` is the centre of a star with `m` spokes, and `k` nested chords fill
/// the gap between the last and first spoke.
pub fn star_with_filler(m: usize, k: usize) -> Disk {
    let mut d = Disk::default();
    for _ in 0..m {
        let w = d.push();
        d.spokes.push(w);
    }
    d.filler(k);
    d
}

/// A caterpillar hanging from `a`: spine `a = z_1, z_2, .., z_l` with
/// `spine[i]` the number of tree neighbours of `z_{i+1}`; `z_2 ..` lie on
/// `C`. The filler sits next to the last spine vertex.
///
/// Each spine vertex occupies an interval of the cycle and stands at one
/// end of it, alternating ends down the spine, so that no chord joins two
/// neighbours on `C`.
pub fn caterpillar_disk(spine: &[usize], k: usize) -> Disk {
    assert!(!spine.is_empty() && spine.iter().all(|&j| j >= 1));
    let mut d = Disk::default();
    if spine.len() == 1 {
        return star_with_filler(spine[0], k);
    }
    let z2 = interval(&mut d, spine, 1, true, k);
    d.spokes.push(z2);
    for _ in 0..spine[0] - 1 {
        let w = d.push();
        d.spokes.push(w);
    }
    d
}

/// Lays out the subtree of spine vertex `i` (0-based, `i >= 1`); returns
/// the position of that spine vertex.
fn interval(d: &mut Disk, spine: &[usize], i: usize, at_start: bool, k: usize) -> usize {
    let last = i + 1 == spine.len();
    let leaves = if last { spine[i] - 1 } else { spine[i] - 2 };
    let mut z = usize::MAX;
    if at_start {
        z = d.push();
    }
    let mut leaf_pos: Vec<usize> = Vec::new();
    let mut child = None;
    if at_start {
        if last {
            d.filler(k);
        } else {
            child = Some(interval(d, spine, i + 1, false, k));
        }
        for _ in 0..leaves {
            leaf_pos.push(d.push());
        }
    } else {
        for _ in 0..leaves {
            leaf_pos.push(d.push());
        }
        if last {
            d.filler(k);
        } else {
            child = Some(interval(d, spine, i + 1, true, k));
        }
        z = d.push();
    }
    for t in leaf_pos {
        d.chords.push((z, t));
    }
    if let Some(c) = child {
        d.chords.push((z, c));
    }
    z
}

/// `a`, `v`, `w` form a triangle: spokes `a v`, `a w`, chord `v w`. `a`
/// has `a_leaves` further spokes and `v` has `v_leaves` chords, with `k`
/// nested chords beside `v`.
pub fn triangle(a_leaves: usize, v_leaves: usize, k: usize) -> Disk {
    let mut d = Disk::default();
    let v = d.push();
    d.filler(k);
    for _ in 0..v_leaves {
        let t = d.push();
        d.chords.push((v, t));
    }
    let w = d.push();
    d.chords.push((v, w));
    d.spokes.push(v);
    d.spokes.push(w);
    for _ in 0..a_leaves {
        let t = d.push();
        d.spokes.push(t);
    }
    d
}

/// The triangulation for `nu_m(p)`: `a` inside the triangle `x1 x2 x3`,
/// each `x_j` fanning over the run of the cycle that precedes it.
pub fn nu(p: usize, m: usize) -> Disk {
    let runs = [m + 1, m + 1, p - 2 * m - 7];
    let mut d = Disk::default();
    let x1 = d.push();
    let mut xs = alloc::vec![x1];
    for (r, &len) in runs.iter().enumerate() {
        let run: Vec<usize> = (0..len).map(|_| d.push()).collect();
        let xj = if r < 2 {
            let x = d.push();
            xs.push(x);
            x
        } else {
            x1
        };
        for &w in &run[..len - 1] {
            d.chords.push((w, xj));
        }
    }
    d.spokes.extend_from_slice(&xs);
    d.chords.push((xs[0], xs[1]));
    d.chords.push((xs[1], xs[2]));
    d.chords.push((xs[0], xs[2]));
    d
}

/// The triangulation for `mu(p)`: the cycle alternates `u_i`, `t_i`; `a`
/// joins every `u_i` and consecutive `u_i` are chorded.
pub fn mu(p: usize) -> Disk {
    let h = (p - 2) / 2;
    let mut d = Disk::default();
    let us: Vec<usize> = (0..h)
        .map(|_| {
            let u = d.push();
            d.push();
            u
        })
        .collect();
    for i in 0..h {
        d.chords.push((us[i], us[(i + 1) % h]));
    }
    d.spokes = us;
    d
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::*;
    use crate::planarity::is_polyhedral;
    use crate::sequence::degree_sequence;

    #[test]
    fn filler_positions() {
        let mut d = Disk::default();
        d.filler(2);
        assert_eq!(d.len, 5);
        assert_eq!(d.chords, alloc::vec![(1, 3), (0, 4)]);
    }

    #[test]
    fn caterpillar_disks_are_polyhedral() {
        for spine in [&[5][..], &[4, 2], &[4, 3, 2], &[3, 2, 2, 3], &[6, 4, 2, 3]] {
            for k in 0..3 {
                let g = caterpillar_disk(spine, k).assemble().unwrap();
                assert!(is_polyhedral(&g), "spine {spine:?} k {k}");
            }
        }
    }

    #[test]
    fn nu_is_a_triangulation() {
        let g = nu(15, 3).assemble().unwrap();
        assert_eq!(degree_sequence(&g).to_string(), "13,9,9,7,4,4,4,4,4,4,4,3,3,3,3");
        assert_eq!(g.size(), 3 * 15 - 6);
        assert!(is_polyhedral(&g));
    }
}

//! Vertex connectivity up to 3, tested straight from the definition.

use alloc::vec::Vec;

use crate::graph::{bit, full_mask, Bits, Graph};

/// A set of at most two vertices whose removal disconnects the graph. An
/// empty set means the graph is already disconnected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutWitness {
    pub cut_vertices: Vec<usize>,
}

impl CutWitness {
    /// True iff removing the cut leaves at least two components.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut within = g.vertex_mask();
        for &v in &self.cut_vertices {
            if v >= g.order() {
                return false;
            }
            within &= !bit(v);
        }
        within != 0 && !g.is_connected_within(within)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Disconnection {
    /// `p <= k`, so the graph cannot be `k`-connected.
    TooFewVertices {
        order: usize,
        k: usize,
    },
    Cut(CutWitness),
}

/// Checks that `g` is `k`-connected for `k` in `1..=3`: `p > k` and no
/// removal of `k - 1` vertices disconnects it.
pub fn connectivity_at_least(g: &Graph, k: usize) -> Result<(), Disconnection> {
    assert!((1..=3).contains(&k), "connectivity_at_least supports k in 1..=3");
    let p = g.order();
    if p <= k {
        return Err(Disconnection::TooFewVertices { order: p, k });
    }
    let all = g.vertex_mask();
    if !g.is_connected_within(all) {
        return Err(Disconnection::Cut(CutWitness { cut_vertices: Vec::new() }));
    }
    if k >= 2 {
        for v in 0..p {
            if !g.is_connected_within(all & !bit(v)) {
                return Err(Disconnection::Cut(CutWitness { cut_vertices: alloc::vec![v] }));
            }
        }
    }
    if k == 3 {
        for u in 0..p {
            for v in u + 1..p {
                if !g.is_connected_within(all & !bit(u) & !bit(v)) {
                    return Err(Disconnection::Cut(CutWitness { cut_vertices: alloc::vec![u, v] }));
                }
            }
        }
    }
    Ok(())
}

/// Fast boolean 3-connectivity for the enumerators' hot path.
pub(crate) fn is_3_connected(g: &Graph) -> bool {
    let p = g.order();
    if p < 4 || g.min_degree() < 3 {
        return false;
    }
    let all = g.vertex_mask();
    for u in 0..p {
        let without_u = all & !bit(u);
        for v in Bits(without_u & !full_mask(u + 1)) {
            if !g.is_connected_within(without_u & !bit(v)) {
                return false;
            }
        }
    }
    // Pairs cover single-vertex cuts too, as long as p >= 4.
    g.is_connected_within(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        let mut g = Graph::complete(6);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.remove_edge(u, v);
        }
        g
    }

    #[test]
    fn octahedron_is_3_connected() {
        assert_eq!(connectivity_at_least(&octahedron(), 3), Ok(()));
        assert!(is_3_connected(&octahedron()));
    }

    #[test]
    fn path_has_interior_cut() {
        let err = connectivity_at_least(&Graph::path(4), 2).unwrap_err();
        let Disconnection::Cut(w) = err else { panic!() };
        assert_eq!(w.cut_vertices.len(), 1);
        assert!(w.cut_vertices[0] == 1 || w.cut_vertices[0] == 2);
        assert!(w.verify(&Graph::path(4)));
    }

    #[test]
    fn bowtie_cut_is_shared_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let err = connectivity_at_least(&g, 2).unwrap_err();
        assert_eq!(err, Disconnection::Cut(CutWitness { cut_vertices: alloc::vec![2] }));
    }

    #[test]
    fn small_and_disconnected() {
        assert_eq!(
            connectivity_at_least(&Graph::complete(3), 3),
            Err(Disconnection::TooFewVertices { order: 3, k: 3 })
        );
        let g = Graph::empty(4);
        let Err(Disconnection::Cut(w)) = connectivity_at_least(&g, 1) else { panic!() };
        assert!(w.cut_vertices.is_empty() && w.verify(&g));
        assert_eq!(connectivity_at_least(&Graph::complete(4), 3), Ok(()));
        assert!(!is_3_connected(&Graph::cycle(6)));
    }
}

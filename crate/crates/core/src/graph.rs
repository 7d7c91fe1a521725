//! Simple undirected graphs on dense vertex ids, stored as adjacency bitsets.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest order a [`Graph`] can hold; each adjacency row is one `u64`.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph on vertices `0..p`.
///
/// Row `v` of the adjacency is a bitset of the neighbours of `v`. Loops and
/// multi-edges cannot be represented; symmetry is maintained by every
/// mutator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[inline]
pub(crate) fn full_mask(p: usize) -> u64 {
    if p >= 64 {
        u64::MAX
    } else {
        (1u64 << p) - 1
    }
}

impl Graph {
    /// The edgeless graph on `p` vertices.
    ///
    /// Panics if `p > MAX_ORDER`; use [`Graph::try_empty`] for untrusted input.
    pub fn empty(p: usize) -> Self {
        Self::try_empty(p).expect("graph order exceeds MAX_ORDER")
    }

    pub fn try_empty(p: usize) -> Result<Self> {
        if p > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: p });
        }
        Ok(Graph { adj: alloc::vec![0; p] })
    }

    pub fn from_edges(p: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_empty(p)?;
        for &(u, v) in edges {
            if u == v || u >= p || v >= p {
                return Err(Error::InvalidEdge { u, v });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking the loop and symmetry
    /// invariants.
    pub fn from_adjacency_masks(adj: Vec<u64>) -> Result<Self> {
        let p = adj.len();
        if p > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: p });
        }
        for (v, &row) in adj.iter().enumerate() {
            if row & !full_mask(p) != 0 {
                return Err(Error::InvalidEdge { u: v, v: 63 - row.leading_zeros() as usize });
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidEdge { u: v, v });
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::InvalidEdge { u: v, v: u });
                }
            }
        }
        Ok(Graph { adj })
    }

    pub fn complete(p: usize) -> Self {
        let mut g = Self::empty(p);
        for v in 0..p {
            g.adj[v] = full_mask(p) & !bit(v);
        }
        g
    }

    pub fn cycle(p: usize) -> Self {
        let mut g = Self::empty(p);
        for v in 0..p {
            g.add_edge(v, (v + 1) % p);
        }
        g
    }

    pub fn path(p: usize) -> Self {
        let mut g = Self::empty(p);
        for v in 1..p {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn complete_bipartite(left: usize, right: usize) -> Self {
        let mut g = Self::empty(left + right);
        for u in 0..left {
            for v in left..left + right {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency_masks(&self) -> &[u64] {
        &self.adj
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    /// Adds `uv`; returns `false` if it was already present.
    ///
    /// Panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.order() && v < self.order(), "edge ({u}, {v}) out of range");
        let fresh = self.adj[u] & bit(v) == 0;
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        fresh
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let present = self.has_edge(u, v);
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        present
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let mut out = Graph::empty(self.order());
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v]);
        }
        out
    }

    /// Vertices reachable from the lowest vertex of `within` using only
    /// vertices of `within`.
    pub fn component_of(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced on `within` is connected (vacuously true
    /// when `within` has at most one vertex).
    pub fn is_connected_within(&self, within: u64) -> bool {
        if within == 0 {
            return true;
        }
        let start = within.trailing_zeros() as usize;
        self.component_of(start, within) == within
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    /// Connected components as vertex masks, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let n = self.order();
        let mut g = Graph::empty(n + other.order());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(n + u, n + v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(p={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

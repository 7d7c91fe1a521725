//! Canonical labeling by partition refinement and an automorphism-pruned
//! search tree. The certificate of a leaf is the graph6 string of the graph
//! relabeled by that leaf; the canonical form is the least certificate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{bit, Graph};
use crate::graph6;

/// Canonical graph6 bytes. Equal codes mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        core::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl From<CanonicalCode> for String {
    fn from(c: CanonicalCode) -> String {
        String::from(c.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).0
}

/// The canonical code together with the labeling that produces it:
/// `g.relabel(&perm)` decodes to the code.
pub fn canonical_labeling(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let p = g.order();
    if p == 0 {
        return (CanonicalCode(graph6::encode(g)), Vec::new());
    }
    let mut search = Search { g, best: None, first: None, generators: Vec::new() };
    let root = refine(g, initial_partition(g));
    search.descend(root, &mut Vec::new());
    let (code, perm) = search.best.expect("search visits at least one leaf");
    (CanonicalCode(code), perm)
}

/// A vertex bijection `map` with `map[v]` in `h` for each `v` in `g`, if the
/// graphs are isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let (cg, pg) = canonical_labeling(g);
    let (ch, ph) = canonical_labeling(h);
    if cg != ch {
        return None;
    }
    let mut inv_h = alloc::vec![0; ph.len()];
    for (v, &pos) in ph.iter().enumerate() {
        inv_h[pos] = v;
    }
    Some(pg.iter().map(|&pos| inv_h[pos]).collect())
}

/// Checks that `map` is a bijection carrying edges of `g` exactly onto
/// edges of `h`.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let p = g.order();
    if h.order() != p || map.len() != p || g.size() != h.size() {
        return false;
    }
    let mut seen = 0u64;
    for &x in map {
        if x >= p || seen & bit(x) != 0 {
            return false;
        }
        seen |= bit(x);
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

type Partition = Vec<Vec<usize>>;

fn initial_partition(g: &Graph) -> Partition {
    let mut by_degree: Vec<(usize, usize)> = (0..g.order()).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Partition = Vec::new();
    let mut last = usize::MAX;
    for (d, v) in by_degree {
        if d != last {
            cells.push(Vec::new());
            last = d;
        }
        cells.last_mut().unwrap().push(v);
    }
    cells
}

/// Equitable refinement: split cells by the multiset of neighbour cells
/// until stable. Sub-cells are ordered by their keys, so the result does not
/// depend on vertex labels.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let mut cell_of = [0u8; 64];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci as u8;
            }
        }
        let k = cells.len();
        let mut changed = false;
        let mut next: Partition = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = alloc::vec![0u8; k];
                    for u in g.neighbors(v) {
                        counts[cell_of[u] as usize] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = next.len();
            next.push(Vec::new());
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(Vec::new());
                    start += 1;
                    changed = true;
                }
                next[start].push(keyed[i].1);
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    /// Automorphisms found so far, as vertex maps.
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(alloc::vec![v]);
            child.push(candidates.iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(refine(self.g, child), prefix);
            prefix.pop();
        }
    }

    /// Whether some automorphism fixing `prefix` pointwise maps `v` into the
    /// orbit of an already explored sibling.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let p = self.g.order();
        let mut parent: Vec<usize> = (0..p).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().any(|&x| gen[x] != x) {
                continue;
            }
            any = true;
            for x in 0..p {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gen[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, cells: &Partition) {
        let mut perm = alloc::vec![0; self.g.order()];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let code = graph6::encode(&self.g.relabel(&perm));
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == code {
                // perm^-1 . known maps each vertex to one with the same role.
                let mut inv = alloc::vec![0; perm.len()];
                for (v, &pos) in perm.iter().enumerate() {
                    inv[pos] = v;
                }
                let auto: Vec<usize> = known.1.iter().map(|&pos| inv[pos]).collect();
                if auto.iter().enumerate().any(|(v, &w)| v != w) && !self.generators.contains(&auto) {
                    self.generators.push(auto);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((code.clone(), perm.clone()));
        }
        match &self.best {
            Some((b, _)) if *b <= code => {}
            _ => self.best = Some((code, perm)),
        }
    }
}

/// Orbits of the automorphism group found while canonicalizing, as vertex
/// masks ordered by lowest vertex.
pub fn orbits(g: &Graph) -> Vec<u64> {
    let p = g.order();
    if p == 0 {
        return Vec::new();
    }
    let mut search = Search { g, best: None, first: None, generators: Vec::new() };
    search.descend(refine(g, initial_partition(g)), &mut Vec::new());
    let mut label: Vec<usize> = (0..p).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for gen in &search.generators {
            for x in 0..p {
                let m = label[x].min(label[gen[x]]);
                if label[x] != m || label[gen[x]] != m {
                    label[x] = m;
                    label[gen[x]] = m;
                    changed = true;
                }
            }
        }
    }
    let mut out: Vec<u64> = Vec::new();
    for v in 0..p {
        if label[v] == v {
            out.push((0..p).filter(|&u| label[u] == v).fold(0u64, |m, u| m | bit(u)));
        }
    }
    out
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
    fn k4_and_c4_differ() {
        assert_ne!(canonical_form(&Graph::complete(4)), canonical_form(&Graph::cycle(4)));
        assert_eq!(canonical_form(&Graph::complete(4)).as_str(), "C~");
    }

    #[test]
    fn fig1_realizations_differ() {
        // 2,2,2,1,1 as a path and as a triangle plus an edge.
        let path = Graph::path(5);
        let tri = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_ne!(canonical_form(&path), canonical_form(&tri));
    }

    #[test]
    fn octahedron_relabeled() {
        let g = octahedron();
        let h = g.relabel(&[3, 5, 0, 2, 4, 1]);
        let map = is_isomorphic(&g, &h).unwrap();
        assert!(verify_isomorphism(&g, &h, &map));
        assert_eq!(orbits(&g), alloc::vec![0b111111]);
    }

    #[test]
    fn code_decodes_to_relabeled_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let (code, perm) = canonical_labeling(&g);
        assert_eq!(code.to_graph(), g.relabel(&perm));
    }
}

//! Exact planarity testing with certificates.
//!
//! Planar graphs get a rotation system built by path addition
//! (Demoucron–Malgrange–Pertuiset) on each biconnected block, with block
//! rotations concatenated at cut vertices. Non-planar graphs get a K5 or
//! K3,3 subdivision, extracted by deleting every edge whose removal keeps
//! the graph non-planar.

use alloc::vec::Vec;

use crate::connectivity::is_3_connected;
use crate::graph::{bit, Bits, Graph};

/// A combinatorial embedding: the cyclic order of neighbours around each
/// vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Embedding {
    pub rotation: Vec<Vec<usize>>,
    /// Faces of the whole plane drawing, so `p - e + f = 1 + c` for `c`
    /// components.
    pub face_count: usize,
}

impl Embedding {
    /// The face walk starting with the dart `u -> v`: after `a -> b` comes
    /// `b -> c` where `c` follows `a` in the rotation at `b`.
    pub fn face_from(&self, u: usize, v: usize) -> Vec<usize> {
        let mut face = Vec::new();
        let (mut a, mut b) = (u, v);
        loop {
            face.push(a);
            let rot = &self.rotation[b];
            let i = rot.iter().position(|&x| x == a).expect("dart missing from rotation");
            let c = rot[(i + 1) % rot.len()];
            a = b;
            b = c;
            if (a, b) == (u, v) {
                return face;
            }
        }
    }

    /// Every face walk, each listed once, starting from its least dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let p = self.rotation.len();
        let mut seen: Vec<u64> = alloc::vec![0; p];
        let mut out = Vec::new();
        for u in 0..p {
            for &v in &self.rotation[u] {
                if seen[u] & bit(v) != 0 {
                    continue;
                }
                let face = self.face_from(u, v);
                for i in 0..face.len() {
                    let (a, b) = (face[i], face[(i + 1) % face.len()]);
                    seen[a] |= bit(b);
                }
                out.push(face);
            }
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside the graph.
///
/// For K3,3 the first three branch vertices form one side of the
/// bipartition and the last three the other.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    /// One path per subdivided edge, branch vertex to branch vertex.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

pub fn planarity_check(g: &Graph) -> Planarity {
    match embed(g) {
        Some(rotation) => {
            let face_count = count_faces(g, &rotation).expect("embedding produced by path addition is valid").0;
            Planarity::Planar(Embedding { rotation, face_count })
        }
        None => Planarity::NonPlanar(kuratowski_subgraph(g)),
    }
}

pub fn is_planar(g: &Graph) -> bool {
    let p = g.order();
    if p >= 3 && g.size() > 3 * p - 6 {
        return false;
    }
    embed(g).is_some()
}

/// Planar and 3-connected.
pub fn is_polyhedral(g: &Graph) -> bool {
    is_3_connected(g) && is_planar(g)
}

/// Checks that the rotation system permutes each vertex's neighbours and
/// that every connected component satisfies Euler's formula for the sphere.
pub fn verify_embedding(g: &Graph, emb: &Embedding) -> bool {
    if emb.rotation.len() != g.order() {
        return false;
    }
    for (v, rot) in emb.rotation.iter().enumerate() {
        let mut mask = 0u64;
        for &u in rot {
            if u >= g.order() || mask & bit(u) != 0 {
                return false;
            }
            mask |= bit(u);
        }
        if mask != g.neighbor_mask(v) {
            return false;
        }
    }
    match count_faces(g, &emb.rotation) {
        Some((faces, true)) => faces == emb.face_count,
        _ => false,
    }
}

/// Walks the faces of a rotation system. Returns the global face count and
/// whether every component has Euler characteristic 2.
fn count_faces(g: &Graph, rotation: &[Vec<usize>]) -> Option<(usize, bool)> {
    let p = g.order();
    let mut next_of: Vec<[u8; 64]> = alloc::vec![[u8::MAX; 64]; p];
    for (v, rot) in rotation.iter().enumerate() {
        for (i, &u) in rot.iter().enumerate() {
            next_of[v][u] = rot[(i + 1) % rot.len()] as u8;
        }
    }
    let mut seen: Vec<u64> = alloc::vec![0; p];
    let comps = g.components();
    let mut comp_of = alloc::vec![0usize; p];
    for (ci, &c) in comps.iter().enumerate() {
        for v in Bits(c) {
            comp_of[v] = ci;
        }
    }
    let mut faces_per = alloc::vec![0usize; comps.len()];
    for u in 0..p {
        for v in g.neighbors(u) {
            if seen[u] & bit(v) != 0 {
                continue;
            }
            let (mut a, mut b) = (u, v);
            loop {
                if seen[a] & bit(b) != 0 {
                    // Walk re-entered a dart from the middle: not a permutation.
                    if (a, b) != (u, v) {
                        return None;
                    }
                    break;
                }
                seen[a] |= bit(b);
                let c = next_of[b][a];
                if c == u8::MAX {
                    return None;
                }
                a = b;
                b = c as usize;
            }
            faces_per[comp_of[u]] += 1;
        }
    }
    let mut euler_ok = true;
    let mut total = 0;
    for (ci, &c) in comps.iter().enumerate() {
        let verts = c.count_ones() as i64;
        let edges: i64 = Bits(c).map(|v| g.degree(v) as i64).sum::<i64>() / 2;
        let faces = if edges == 0 { 1 } else { faces_per[ci] as i64 };
        if verts - edges + faces != 2 {
            euler_ok = false;
        }
        total += faces as usize;
    }
    let total = total + 1 - comps.len().max(1);
    Some((total, euler_ok))
}

/// Checks that the paths exist in `g`, are internally disjoint, avoid the
/// other branch vertices and realize every edge of K5 or K3,3 exactly once.
pub fn verify_kuratowski(g: &Graph, w: &KuratowskiWitness) -> bool {
    let b = &w.branch_vertices;
    let need = match w.kind {
        KuratowskiKind::K5 => 5,
        KuratowskiKind::K33 => 6,
    };
    if b.len() != need {
        return false;
    }
    let mut branch_mask = 0u64;
    for &v in b {
        if v >= g.order() || branch_mask & bit(v) != 0 {
            return false;
        }
        branch_mask |= bit(v);
    }
    let index_of = |v: usize| b.iter().position(|&x| x == v);
    let mut required = [[false; 6]; 6];
    for i in 0..need {
        for j in i + 1..need {
            required[i][j] = match w.kind {
                KuratowskiKind::K5 => true,
                KuratowskiKind::K33 => (i < 3) != (j < 3),
            };
        }
    }
    let mut used_interior = 0u64;
    for path in &w.paths {
        if path.len() < 2 {
            return false;
        }
        let (Some(s), Some(t)) = (index_of(path[0]), index_of(path[path.len() - 1])) else {
            return false;
        };
        let (i, j) = if s < t { (s, t) } else { (t, s) };
        if i == j || !required[i][j] {
            return false;
        }
        required[i][j] = false;
        for win in path.windows(2) {
            if win[0] >= g.order() || win[1] >= g.order() || !g.has_edge(win[0], win[1]) {
                return false;
            }
        }
        for &x in &path[1..path.len() - 1] {
            if branch_mask & bit(x) != 0 || used_interior & bit(x) != 0 {
                return false;
            }
            used_interior |= bit(x);
        }
    }
    required.iter().all(|row| row.iter().all(|&r| !r))
}

/// Rotation system for a planar graph, `None` otherwise.
pub(crate) fn embed(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let p = g.order();
    let mut rotation: Vec<Vec<usize>> = alloc::vec![Vec::new(); p];
    for block in blocks(g) {
        if block.count_ones() == 2 {
            let u = block.trailing_zeros() as usize;
            let v = 63 - block.leading_zeros() as usize;
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let rot = embed_block(g, block)?;
        for v in Bits(block) {
            rotation[v].extend_from_slice(&rot[v]);
        }
    }
    Some(rotation)
}

/// Vertex masks of the biconnected blocks (bridges included, isolated
/// vertices excluded).
fn blocks(g: &Graph) -> Vec<u64> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<u32>,
        low: Vec<u32>,
        time: u32,
        stack: Vec<usize>,
        out: Vec<u64>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: usize) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            self.stack.push(u);
            for v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    self.visit(v, u);
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = bit(u);
                        while let Some(x) = self.stack.pop() {
                            block |= bit(x);
                            if x == v {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if v != parent {
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let p = g.order();
    let mut dfs =
        Dfs { g, disc: alloc::vec![0; p], low: alloc::vec![0; p], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..p {
        if dfs.disc[v] == 0 {
            dfs.visit(v, usize::MAX);
            dfs.stack.clear();
        }
    }
    dfs.out
}

struct Face {
    cycle: Vec<usize>,
    mask: u64,
}

/// Path addition on a 2-connected block with at least three vertices.
fn embed_block(g: &Graph, block: u64) -> Option<Vec<Vec<usize>>> {
    let adj = |v: usize| g.neighbor_mask(v) & block;
    let total_edges: usize = Bits(block).map(|v| adj(v).count_ones() as usize).sum::<usize>() / 2;
    let vcount = block.count_ones() as usize;
    if vcount >= 3 && total_edges > 3 * vcount - 6 {
        return None;
    }

    // Initial cycle through the lowest vertex and its lowest neighbour.
    let u = block.trailing_zeros() as usize;
    let w = adj(u).trailing_zeros() as usize;
    // u, ..., w, closed by the edge wu.
    let cycle = bfs_path(|x| if x == w { adj(x) & !bit(u) } else { adj(x) }, w, bit(u), block)?;
    let mut emb_adj = alloc::vec![0u64; 64];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_adj[a] |= bit(b);
        emb_adj[b] |= bit(a);
    }
    let mut embedded_v: u64 = cycle.iter().fold(0, |m, &v| m | bit(v));
    let mut embedded_e = cycle.len();
    let mask = embedded_v;
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = alloc::vec![Face { cycle, mask }, Face { cycle: rev, mask }];

    while embedded_e < total_edges {
        // Fragments: (attachments, Some((u, v)) for chords, or component mask).
        let mut best: Option<(u64, Fragment, usize)> = None;
        let mut first: Option<(u64, Fragment, usize)> = None;
        let mut consider = |att: u64, frag: Fragment| -> Result<bool, ()> {
            let mut count = 0;
            let mut face_ix = usize::MAX;
            for (fi, f) in faces.iter().enumerate() {
                if f.mask & att == att {
                    count += 1;
                    if face_ix == usize::MAX {
                        face_ix = fi;
                    }
                }
            }
            if count == 0 {
                return Err(());
            }
            if count == 1 && best.is_none() {
                best = Some((att, frag, face_ix));
                return Ok(true);
            }
            if first.is_none() {
                first = Some((att, frag, face_ix));
            }
            Ok(false)
        };
        let mut stop = false;
        for a in Bits(embedded_v) {
            for b in Bits(adj(a) & embedded_v & !emb_adj[a] & !crate::graph::full_mask(a + 1)) {
                match consider(bit(a) | bit(b), Fragment::Chord(a, b)) {
                    Err(()) => return None,
                    Ok(true) => {
                        stop = true;
                        break;
                    }
                    Ok(false) => {}
                }
            }
            if stop {
                break;
            }
        }
        if !stop {
            let mut rest = block & !embedded_v;
            while rest != 0 {
                let comp = g.component_of(rest.trailing_zeros() as usize, rest);
                rest &= !comp;
                let mut att = 0u64;
                for x in Bits(comp) {
                    att |= adj(x) & embedded_v;
                }
                match consider(att, Fragment::Component(comp)) {
                    Err(()) => return None,
                    Ok(true) => break,
                    Ok(false) => {}
                }
            }
        }
        let (att, frag, face_ix) = best.or(first).expect("unembedded edges imply a fragment");
        let route: Vec<usize> = match frag {
            Fragment::Chord(a, b) => alloc::vec![a, b],
            Fragment::Component(comp) => {
                let mut it = Bits(att);
                let a = it.next()?;
                let b = it.next()?;
                // a -> interior of comp -> b
                let start_mask = adj(a) & comp;
                let mut prev = [u8::MAX; 64];
                let mut seen = start_mask;
                let mut queue: Vec<usize> = Bits(start_mask).collect();
                for &x in &queue {
                    prev[x] = a as u8;
                }
                let mut head = 0;
                let mut end = usize::MAX;
                while head < queue.len() {
                    let x = queue[head];
                    head += 1;
                    if adj(x) & bit(b) != 0 {
                        end = x;
                        break;
                    }
                    for y in Bits(adj(x) & comp & !seen) {
                        seen |= bit(y);
                        prev[y] = x as u8;
                        queue.push(y);
                    }
                }
                if end == usize::MAX {
                    return None;
                }
                let mut route = alloc::vec![b, end];
                let mut x = end;
                while prev[x] as usize != a {
                    x = prev[x] as usize;
                    route.push(x);
                }
                route.push(a);
                route.reverse();
                route
            }
        };
        // Split the face along the route.
        let face = faces.swap_remove(face_ix);
        let a = route[0];
        let b = route[route.len() - 1];
        let n = face.cycle.len();
        let ia = face.cycle.iter().position(|&x| x == a)?;
        let ib = face.cycle.iter().position(|&x| x == b)?;
        let interior = &route[1..route.len() - 1];
        let mut f1 = Vec::with_capacity(n + interior.len());
        let mut k = ia;
        loop {
            f1.push(face.cycle[k]);
            if k == ib {
                break;
            }
            k = (k + 1) % n;
        }
        f1.extend(interior.iter().rev());
        let mut f2 = Vec::with_capacity(n + interior.len());
        let mut k = ib;
        loop {
            f2.push(face.cycle[k]);
            if k == ia {
                break;
            }
            k = (k + 1) % n;
        }
        f2.extend(interior.iter());
        let m1 = f1.iter().fold(0, |m, &v| m | bit(v));
        let m2 = f2.iter().fold(0, |m, &v| m | bit(v));
        faces.push(Face { cycle: f1, mask: m1 });
        faces.push(Face { cycle: f2, mask: m2 });
        for win in route.windows(2) {
            emb_adj[win[0]] |= bit(win[1]);
            emb_adj[win[1]] |= bit(win[0]);
        }
        for &x in interior {
            embedded_v |= bit(x);
        }
        embedded_e += route.len() - 1;
    }

    // Faces -> rotation successors: a face walk prev -> cur -> next means
    // next follows prev in the rotation at cur.
    let mut succ = alloc::vec![[u8::MAX; 64]; 64];
    for f in &faces {
        let n = f.cycle.len();
        for i in 0..n {
            let prev = f.cycle[(i + n - 1) % n];
            let cur = f.cycle[i];
            let next = f.cycle[(i + 1) % n];
            succ[cur][prev] = next as u8;
        }
    }
    let mut rotation = alloc::vec![Vec::new(); g.order()];
    for v in Bits(block) {
        let start = adj(v).trailing_zeros() as usize;
        let mut x = start;
        loop {
            rotation[v].push(x);
            let nx = succ[v][x];
            if nx == u8::MAX {
                return None;
            }
            x = nx as usize;
            if x == start {
                break;
            }
            if rotation[v].len() > 64 {
                return None;
            }
        }
    }
    Some(rotation)
}

#[derive(Clone, Copy)]
enum Fragment {
    Chord(usize, usize),
    Component(u64),
}

/// Shortest path from `from` to any vertex of `targets`, returned target
/// first and `from` last.
fn bfs_path(neigh: impl Fn(usize) -> u64, from: usize, targets: u64, within: u64) -> Option<Vec<usize>> {
    let mut prev = [u8::MAX; 64];
    let mut seen = bit(from);
    let mut queue = alloc::vec![from];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for y in Bits(neigh(x) & within & !seen) {
            seen |= bit(y);
            prev[y] = x as u8;
            if targets & bit(y) != 0 {
                let mut path = alloc::vec![y];
                let mut z = y;
                while z != from {
                    z = prev[z] as usize;
                    path.push(z);
                }
                return Some(path);
            }
            queue.push(y);
        }
    }
    None
}

/// Edge-minimal non-planar subgraph of a non-planar `g`, read off as a
/// Kuratowski subdivision.
fn kuratowski_subgraph(g: &Graph) -> KuratowskiWitness {
    // Start from one non-planar block.
    let mut h = Graph::empty(g.order());
    for block in blocks(g) {
        if block.count_ones() >= 5 {
            let mut sub = Graph::empty(g.order());
            for v in Bits(block) {
                for u in Bits(g.neighbor_mask(v) & block) {
                    if u > v {
                        sub.add_edge(v, u);
                    }
                }
            }
            if embed(&sub).is_none() {
                h = sub;
                break;
            }
        }
    }
    debug_assert!(h.size() > 0, "non-planar graph must have a non-planar block");
    let edges: Vec<(usize, usize)> = h.edges().collect();
    for (u, v) in edges {
        h.remove_edge(u, v);
        if embed(&h).is_some() {
            h.add_edge(u, v);
        }
    }
    let branch: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) >= 3).collect();
    let branch_mask = branch.iter().fold(0u64, |m, &v| m | bit(v));
    let mut paths = Vec::new();
    for &s in &branch {
        for first in h.neighbors(s) {
            let mut path = alloc::vec![s, first];
            let (mut prev, mut cur) = (s, first);
            while branch_mask & bit(cur) == 0 {
                let nxt = Bits(h.neighbor_mask(cur) & !bit(prev)).next().expect("subdivision vertices have degree 2");
                prev = cur;
                cur = nxt;
                path.push(cur);
            }
            if s < cur {
                paths.push(path);
            }
        }
    }
    if branch.len() == 5 {
        KuratowskiWitness { kind: KuratowskiKind::K5, branch_vertices: branch, paths }
    } else {
        // Bipartition: the side of branch[0] is the set of branch vertices
        // not joined to it by a path.
        let s0 = branch[0];
        let joined = |a: usize, b: usize| {
            paths.iter().any(|p| (p[0] == a && p[p.len() - 1] == b) || (p[0] == b && p[p.len() - 1] == a))
        };
        let mut side_a: Vec<usize> = branch.iter().copied().filter(|&v| v == s0 || !joined(s0, v)).collect();
        let side_b: Vec<usize> = branch.iter().copied().filter(|v| !side_a.contains(v)).collect();
        side_a.extend(side_b);
        KuratowskiWitness { kind: KuratowskiKind::K33, branch_vertices: side_a, paths }
    }
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
    fn k4_embeds_with_four_faces() {
        let Planarity::Planar(emb) = planarity_check(&Graph::complete(4)) else { panic!() };
        assert_eq!(emb.face_count, 4);
        assert!(verify_embedding(&Graph::complete(4), &emb));
    }

    #[test]
    fn swapped_rotation_is_rejected() {
        let g = Graph::complete(4);
        let Planarity::Planar(mut emb) = planarity_check(&g) else { panic!() };
        emb.rotation[0].swap(0, 1);
        assert!(!verify_embedding(&g, &emb));
        let recount = count_faces(&g, &emb.rotation).unwrap();
        assert_eq!(recount, (2, false));
    }

    #[test]
    fn octahedron_has_eight_faces() {
        let g = octahedron();
        let Planarity::Planar(emb) = planarity_check(&g) else { panic!() };
        assert_eq!(emb.face_count, 8);
        assert!(verify_embedding(&g, &emb));
    }

    #[test]
    fn k5_and_k33_witnesses() {
        let k5 = Graph::complete(5);
        let Planarity::NonPlanar(w) = planarity_check(&k5) else { panic!() };
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert!(verify_kuratowski(&k5, &w));
        let mut k5_minus = k5.clone();
        let (a, b) = (w.paths[0][0], w.paths[0][1]);
        k5_minus.remove_edge(a, b);
        assert!(!verify_kuratowski(&k5_minus, &w));

        let k33 = Graph::complete_bipartite(3, 3);
        let Planarity::NonPlanar(w) = planarity_check(&k33) else { panic!() };
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(verify_kuratowski(&k33, &w));
    }

    #[test]
    fn disconnected_and_trees() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        let Planarity::Planar(emb) = planarity_check(&g) else { panic!() };
        // p - e + f = 1 + c: 7 - 5 + f = 1 + 3
        assert_eq!(emb.face_count, 2);
        assert!(verify_embedding(&g, &emb));
        let Planarity::Planar(emb) = planarity_check(&Graph::empty(3)) else { panic!() };
        assert_eq!(emb.face_count, 1);
    }

    #[test]
    fn polyhedral_predicate() {
        assert!(is_polyhedral(&Graph::complete(4)));
        assert!(!is_polyhedral(&Graph::complete(5)));
        // Cube with one edge subdivided.
        let mut cube = Graph::empty(9);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6)] {
            cube.add_edge(u, v);
        }
        cube.add_edge(3, 8);
        cube.add_edge(8, 7);
        assert!(is_planar(&cube));
        assert!(!is_polyhedral(&cube));
    }

    #[test]
    fn petersen_is_nonplanar_with_k33() {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        let Planarity::NonPlanar(w) = planarity_check(&g) else { panic!() };
        assert!(verify_kuratowski(&g, &w));
    }
}

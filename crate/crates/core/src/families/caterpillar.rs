//! Caterpillars: trees whose non-leaf vertices form a path.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

/// Degrees of the non-leaf vertices in order along the spine. Empty means
/// `K2`; a single entry `n` is the star `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CaterpillarSpec {
    spine_degrees: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(spine_degrees: Vec<usize>) -> Result<Self> {
        if let Some(&j) = spine_degrees.iter().find(|&&j| j < 2) {
            return Err(Error::ParamOutOfRange(format!("spine degree {j} is below 2")));
        }
        Ok(CaterpillarSpec { spine_degrees })
    }

    pub fn spine_degrees(&self) -> &[usize] {
        &self.spine_degrees
    }

    /// Leaves hanging off each spine vertex.
    pub fn leaf_counts(&self) -> Vec<usize> {
        let l = self.spine_degrees.len();
        self.spine_degrees
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let spine_neighbours = usize::from(i > 0) + usize::from(i + 1 < l);
                j - spine_neighbours
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        if self.spine_degrees.is_empty() {
            2
        } else {
            self.spine_degrees.len() + self.leaf_counts().iter().sum::<usize>()
        }
    }
}

/// The caterpillar as a tree: spine vertices `0..l` in order, then the
/// leaves of each spine vertex in turn.
pub fn caterpillar(spec: &CaterpillarSpec) -> Graph {
    if spec.spine_degrees.is_empty() {
        return Graph::path(2);
    }
    let l = spec.spine_degrees.len();
    let mut g = Graph::empty(spec.order());
    for i in 1..l {
        g.add_edge(i - 1, i);
    }
    let mut next = l;
    for (i, leaves) in spec.leaf_counts().into_iter().enumerate() {
        for _ in 0..leaves {
            g.add_edge(i, next);
            next += 1;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    use crate::canon::is_isomorphic;
    use crate::sequence::degree_sequence;

    fn cat(spine: &[usize]) -> Graph {
        caterpillar(&CaterpillarSpec::new(spine.to_vec()).unwrap())
    }

    #[test]
    fn figure_caterpillar() {
        let g = cat(&[3, 4, 3, 4, 2]);
        // 16 = sum of spine degrees; a tree with 5 spine vertices has 8 leaves.
        assert_eq!(g.order(), 13);
        assert_eq!(g.size(), 12);
        assert!(g.is_connected());
        let spine: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        assert_eq!(spine, [3, 4, 3, 4, 2]);
    }

    #[test]
    fn stars_and_k2() {
        assert_eq!(cat(&[]), Graph::path(2));
        let s4 = cat(&[4]);
        assert_eq!(degree_sequence(&s4).to_string(), "4,1,1,1,1");
    }

    #[test]
    fn reflection_is_isomorphic() {
        assert!(is_isomorphic(&cat(&[3, 4, 3, 4, 2]), &cat(&[2, 4, 3, 4, 3])).is_some());
    }

    #[test]
    fn rejects_small_spine_degree() {
        assert!(CaterpillarSpec::new(alloc::vec![3, 1]).is_err());
    }
}

//! Pairs of non-isomorphic polyhedra with one degree sequence.
//!
//! Each recipe builds two apex graphs whose interiors differ but whose
//! degree multisets agree. Both outputs are checked for polyhedrality, the
//! shared sequence, and non-isomorphism before they are returned.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::layout::{caterpillar_disk, star_with_filler, triangle, Disk};
use super::two_apex::sweep;
use crate::canon::is_isomorphic;
use crate::graph::Graph;
use crate::planarity::is_polyhedral;
use crate::sequence::{degree_sequence, DegreeSequence};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum WitnessRecipe {
    /// `C(m, j_2 .. j_l)` against `C(4, j_2 .. j_l, m - 3)` hanging from
    /// `a`; the spine starts with `m`.
    CatHeadSwap { spine: Vec<usize> },
    /// `S_m` plus `k` copies of `K2` against `C(4, m - 3)` plus the same.
    StarSplit,
    /// A triangle `a v w` with a star at `v` plus `k` copies of `K2`,
    /// against `C(5, j + 2)` plus `k - 1` copies.
    TriangleKDrop,
    /// Triangle with `a` carrying `m - 2` leaves against `a` carrying 3 and
    /// `v` carrying `m - 5`.
    TriangleStarGrow,
    /// Two two-apex placements with the same sequence.
    SigmaIjMove,
}

impl WitnessRecipe {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessRecipe::CatHeadSwap { .. } => "CAT_HEAD_SWAP",
            WitnessRecipe::StarSplit => "STAR_SPLIT",
            WitnessRecipe::TriangleKDrop => "TRIANGLE_K_DROP",
            WitnessRecipe::TriangleStarGrow => "TRIANGLE_STAR_GROW",
            WitnessRecipe::SigmaIjMove => "SIGMA_IJ_MOVE",
        }
    }

    /// Parses a recipe name; `CAT_HEAD_SWAP` takes its spine after a colon,
    /// as in `CAT_HEAD_SWAP:6,3,2`.
    pub fn from_name(text: &str) -> Option<Self> {
        let (name, arg) = match text.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (text, None),
        };
        let recipe = match name.trim().to_ascii_uppercase().as_str() {
            "CAT_HEAD_SWAP" => {
                let spine: Option<Vec<usize>> = arg?.split(',').map(|t| t.trim().parse().ok()).collect();
                WitnessRecipe::CatHeadSwap { spine: spine? }
            }
            "STAR_SPLIT" => WitnessRecipe::StarSplit,
            "TRIANGLE_K_DROP" => WitnessRecipe::TriangleKDrop,
            "TRIANGLE_STAR_GROW" => WitnessRecipe::TriangleStarGrow,
            "SIGMA_IJ_MOVE" => WitnessRecipe::SigmaIjMove,
            _ => return None,
        };
        if arg.is_some() && !matches!(recipe, WitnessRecipe::CatHeadSwap { .. }) {
            return None;
        }
        Some(recipe)
    }

    /// The recipes without parameters, in the order [`find_witness_pair`]
    /// tries them.
    pub fn plain() -> [WitnessRecipe; 4] {
        [
            WitnessRecipe::StarSplit,
            WitnessRecipe::TriangleKDrop,
            WitnessRecipe::TriangleStarGrow,
            WitnessRecipe::SigmaIjMove,
        ]
    }
}

pub fn witness_pair(s: &DegreeSequence, recipe: &WitnessRecipe) -> Result<(Graph, Graph)> {
    let d = s.degrees();
    let p = s.len();
    let not_applicable = |why: &str| Error::RecipeNotApplicable(format!("{} for {s}: {why}", recipe.name()));
    if p < 7 || d[0] as usize != p - 2 {
        return Err(not_applicable("needs p >= 7 and a vertex of degree p-2"));
    }
    let (first, second) = match recipe {
        WitnessRecipe::StarSplit => {
            let m = d[1] as usize;
            if m < 5 || m >= p - 2 || !(p - 3 - m).is_multiple_of(2) {
                return Err(not_applicable("needs p-2, m, 4^(m+2k), 3 with 5 <= m < p-2"));
            }
            let k = (p - 3 - m) / 2;
            (star_with_filler(m, k), caterpillar_disk(&[4, m - 3], k))
        }
        WitnessRecipe::TriangleKDrop => {
            if d[1] < 5 {
                return Err(not_applicable("needs a second degree of at least 5"));
            }
            let j = d[1] as usize - 5;
            if p < 9 + j || !(p - 7 - j).is_multiple_of(2) {
                return Err(not_applicable("needs k = (p-7-j)/2 >= 1"));
            }
            let k = (p - 7 - j) / 2;
            (triangle(2, j, k), caterpillar_disk(&[5, j + 2], k - 1))
        }
        WitnessRecipe::TriangleStarGrow => {
            if p < 9 {
                return Err(not_applicable("needs p >= 9"));
            }
            let m = p - 3;
            (triangle(m - 2, 0, 0), triangle(3, m - 5, 0))
        }
        WitnessRecipe::CatHeadSwap { spine } => {
            if spine.len() < 2 || spine.iter().any(|&j| j < 2) || spine[0] < 5 {
                return Err(not_applicable("needs a spine of length >= 2, head >= 5, entries >= 2"));
            }
            let m = spine[0];
            let mut swapped = alloc::vec![4];
            swapped.extend_from_slice(&spine[1..]);
            swapped.push(m - 3);
            let base = caterpillar_disk(spine, 0).len + 2;
            if p < base || !(p - base).is_multiple_of(2) {
                return Err(not_applicable("order does not fit the caterpillar plus copies of K2"));
            }
            let k = (p - base) / 2;
            (caterpillar_disk(spine, k), caterpillar_disk(&swapped, k))
        }
        WitnessRecipe::SigmaIjMove => return sigma_pair(s),
    };
    finish(s, &first, &second).map_err(|e| match e {
        Error::ConstructionFailed(why) => not_applicable(&why),
        other => other,
    })
}

/// Tries each parameter-free recipe in turn.
pub fn find_witness_pair(s: &DegreeSequence) -> Option<(WitnessRecipe, Graph, Graph)> {
    WitnessRecipe::plain().into_iter().find_map(|r| witness_pair(s, &r).ok().map(|(g, h)| (r, g, h)))
}

fn finish(s: &DegreeSequence, first: &Disk, second: &Disk) -> Result<(Graph, Graph)> {
    let g = first.assemble()?;
    let h = second.assemble()?;
    check_pair(s, g, h)
}

fn check_pair(s: &DegreeSequence, g: Graph, h: Graph) -> Result<(Graph, Graph)> {
    for (name, x) in [("first", &g), ("second", &h)] {
        let got = degree_sequence(x);
        if &got != s {
            return Err(Error::ConstructionFailed(format!("{name} graph has sequence {got}")));
        }
        if !is_polyhedral(x) {
            return Err(Error::ConstructionFailed(format!("{name} graph is not polyhedral")));
        }
    }
    if is_isomorphic(&g, &h).is_some() {
        return Err(Error::ConstructionFailed(String::from("the two graphs are isomorphic")));
    }
    Ok((g, h))
}

/// The first two non-isomorphic two-apex constructions with sequence `s`.
fn sigma_pair(s: &DegreeSequence) -> Result<(Graph, Graph)> {
    let p = s.len();
    let mut found: Vec<Graph> = Vec::new();
    for (_, g) in sweep(p) {
        if &degree_sequence(&g) != s {
            continue;
        }
        if found.iter().any(|f| is_isomorphic(f, &g).is_some()) {
            continue;
        }
        found.push(g);
        if found.len() == 2 {
            let h = found.pop().unwrap();
            let g = found.pop().unwrap();
            return check_pair(s, g, h);
        }
    }
    Err(Error::RecipeNotApplicable(format!("SIGMA_IJ_MOVE for {s}: fewer than two placements realize it")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(t: &str) -> DegreeSequence {
        t.parse().unwrap()
    }

    #[test]
    fn star_split_on_lambda1() {
        let (g, h) = witness_pair(&seq("10,5,4^9,3"), &WitnessRecipe::StarSplit).unwrap();
        assert_eq!(degree_sequence(&g), degree_sequence(&h));
    }

    #[test]
    fn triangle_k_drop_on_lambda2() {
        witness_pair(&seq("11,7,5,4^9,3"), &WitnessRecipe::TriangleKDrop).unwrap();
    }

    #[test]
    fn triangle_star_grow() {
        for p in 9..=13usize {
            let text = format!("{},{},5,5,4^{},3", p - 2, p - 3, p - 5);
            witness_pair(&seq(&text), &WitnessRecipe::TriangleStarGrow).unwrap();
        }
    }

    #[test]
    fn sigma7_pair() {
        witness_pair(&seq("6,6,5,5,4,4,3,3"), &WitnessRecipe::SigmaIjMove).unwrap();
    }

    #[test]
    fn cat_head_swap() {
        let spine = alloc::vec![6, 3, 2];
        let size = caterpillar_disk(&spine, 1).len + 2;
        let g = caterpillar_disk(&spine, 1).assemble().unwrap();
        assert_eq!(g.order(), size);
        witness_pair(&degree_sequence(&g), &WitnessRecipe::CatHeadSwap { spine }).unwrap();
    }

    #[test]
    fn names_round_trip() {
        assert_eq!(
            WitnessRecipe::from_name("CAT_HEAD_SWAP:6,3,2"),
            Some(WitnessRecipe::CatHeadSwap { spine: alloc::vec![6, 3, 2] })
        );
        assert_eq!(WitnessRecipe::from_name("star_split"), Some(WitnessRecipe::StarSplit));
        assert_eq!(WitnessRecipe::from_name("STAR_SPLIT:3"), None);
    }
}

//! The named sequence families, their realizations, and constructions of
//! pairs of non-isomorphic polyhedra sharing a degree sequence.

pub mod caterpillar;
pub mod layout;
pub mod two_apex;
pub mod witness;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;
use crate::sequence::DegreeSequence;
use crate::{Error, Result};

pub use caterpillar::{caterpillar, CaterpillarSpec};
pub use two_apex::{classify_sigma, construct_two_apex, AMode, Placement};
pub use witness::{witness_pair, WitnessRecipe};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FamilyKind {
    Alpha,
    Beta,
    Gamma,
    Nu,
    Mu,
    /// `Sigma(k)` for `k` in `1..=12`.
    Sigma(u8),
    /// The two-apex base graph on `p - 2` vertices used to build the sigma
    /// families of order `p`.
    BaseGPrime,
    Bipyramid,
    /// Two non-adjacent apexes over a path.
    Sigma11Alt,
    /// `p-2, 5, 4^(p-3), 3` for even `p >= 8`.
    Lambda1,
    /// `p-2, 7, 5, 4^(p-4), 3` for odd `p >= 11`.
    Lambda2,
}

impl FamilyKind {
    pub fn name(self) -> String {
        match self {
            FamilyKind::Alpha => "alpha".into(),
            FamilyKind::Beta => "beta".into(),
            FamilyKind::Gamma => "gamma".into(),
            FamilyKind::Nu => "nu".into(),
            FamilyKind::Mu => "mu".into(),
            FamilyKind::Sigma(k) => format!("sigma{k}"),
            FamilyKind::BaseGPrime => "base_gprime".into(),
            FamilyKind::Bipyramid => "bipyramid".into(),
            FamilyKind::Sigma11Alt => "sigma11_alt".into(),
            FamilyKind::Lambda1 => "lambda1".into(),
            FamilyKind::Lambda2 => "lambda2".into(),
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let name = name.trim().to_ascii_lowercase();
        Some(match name.as_str() {
            "alpha" => FamilyKind::Alpha,
            "beta" => FamilyKind::Beta,
            "gamma" => FamilyKind::Gamma,
            "nu" => FamilyKind::Nu,
            "mu" => FamilyKind::Mu,
            "base_gprime" | "gprime" => FamilyKind::BaseGPrime,
            "bipyramid" => FamilyKind::Bipyramid,
            "sigma11_alt" => FamilyKind::Sigma11Alt,
            "lambda1" => FamilyKind::Lambda1,
            "lambda2" => FamilyKind::Lambda2,
            other => {
                let k: u8 = other.strip_prefix("sigma")?.parse().ok()?;
                if !(1..=12).contains(&k) {
                    return None;
                }
                FamilyKind::Sigma(k)
            }
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub p: usize,
    /// Only used by `Nu`.
    pub m: Option<usize>,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, p: usize) -> Self {
        FamilyId { kind, p, m: None }
    }

    pub fn nu(p: usize, m: usize) -> Self {
        FamilyId { kind: FamilyKind::Nu, p, m: Some(m) }
    }

    pub fn sigma(k: u8, p: usize) -> Self {
        FamilyId::new(FamilyKind::Sigma(k), p)
    }

    /// Checks the parameter domain.
    pub fn validate(&self) -> Result<()> {
        let p = self.p;
        let bad = |why: &str| Err(Error::ParamOutOfRange(format!("{}: {why}", self)));
        if self.m.is_some() && self.kind != FamilyKind::Nu {
            return bad("only nu takes m");
        }
        match self.kind {
            FamilyKind::Alpha | FamilyKind::BaseGPrime | FamilyKind::Sigma11Alt if p < 7 => bad("needs p >= 7"),
            FamilyKind::Beta | FamilyKind::Bipyramid if p < 5 => bad("needs p >= 5"),
            FamilyKind::Gamma if p < 7 || p.is_multiple_of(2) => bad("needs odd p >= 7"),
            FamilyKind::Nu => match self.m {
                None => bad("needs m"),
                Some(m) if p < 11 || m < 1 || 2 * m + 8 >= p => bad("needs p >= 11 and 1 <= m < (p-8)/2"),
                _ => Ok(()),
            },
            FamilyKind::Mu if p < 16 || p % 2 == 1 => bad("needs even p >= 16"),
            FamilyKind::Sigma(k) if p < sigma_min_order(k) => bad(&format!("needs p >= {}", sigma_min_order(k))),
            FamilyKind::Lambda1 if p < 8 || p % 2 == 1 => bad("needs even p >= 8"),
            FamilyKind::Lambda2 if p < 11 || p.is_multiple_of(2) => bad("needs odd p >= 11"),
            _ if p > crate::graph::MAX_ORDER => bad("order too large"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:p={}", self.kind.name(), self.p)?;
        if let Some(m) = self.m {
            write!(f, ",m={m}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Parses `name:p=P` or `name:p=P,m=M`.
    fn from_str(text: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(text.to_string());
        let (name, params) = text.split_once(':').ok_or_else(unknown)?;
        let kind = FamilyKind::from_name(name).ok_or_else(unknown)?;
        let (mut p, mut m) = (None, None);
        for part in params.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(unknown)?;
            let value: usize = value.trim().parse().map_err(|_| unknown())?;
            match key.trim() {
                "p" => p = Some(value),
                "m" => m = Some(value),
                _ => return Err(unknown()),
            }
        }
        Ok(FamilyId { kind, p: p.ok_or_else(unknown)?, m })
    }
}

/// Smallest order at which `sigma_k` is defined.
pub fn sigma_min_order(k: u8) -> usize {
    match k {
        1 | 5 | 7 => 8,
        2 => 9,
        4 => 10,
        _ => 7,
    }
}

/// The entries of `sigma_k` between the two leading `p - 2` and the filler
/// of 4's.
fn sigma_listed(k: u8) -> &'static [u32] {
    match k {
        1 => &[6, 6, 3, 3, 3, 3],
        2 => &[6, 5, 5, 3, 3, 3, 3],
        3 => &[6, 5, 3, 3, 3],
        4 => &[5, 5, 5, 5, 3, 3, 3, 3],
        5 => &[5, 5, 5, 3, 3, 3],
        6 => &[5, 5, 3, 3],
        7 => &[5, 5, 3, 3, 3, 3],
        8 => &[5, 3],
        9 => &[5, 3, 3, 3],
        10 => &[],
        11 => &[3, 3],
        12 => &[3, 3, 3, 3],
        _ => unreachable!("sigma index out of range"),
    }
}

fn padded(head: &[u32], p: usize) -> Vec<u32> {
    let mut d = head.to_vec();
    while d.len() < p {
        d.push(4);
    }
    d
}

pub fn sequence_of(f: &FamilyId) -> Result<DegreeSequence> {
    f.validate()?;
    let p = f.p;
    let q = (p - 2) as u32;
    let degrees: Vec<u32> = match f.kind {
        FamilyKind::Alpha => padded(&[q, q, 5, 3], p),
        FamilyKind::Beta | FamilyKind::Bipyramid => padded(&[q, q], p),
        FamilyKind::Gamma => padded(&[q, 3], p),
        FamilyKind::Nu => {
            let m = f.m.unwrap() as u32;
            padded(&[q, m + 6, m + 6, q - 2 * m, 3, 3, 3, 3], p)
        }
        FamilyKind::Mu => {
            let h = q / 2;
            let mut d = alloc::vec![q, h];
            d.extend(core::iter::repeat_n(6, h as usize));
            d.extend(core::iter::repeat_n(3, h as usize));
            d
        }
        FamilyKind::Sigma(k) => {
            let mut head = alloc::vec![q, q];
            head.extend_from_slice(sigma_listed(k));
            padded(&head, p)
        }
        FamilyKind::Sigma11Alt => {
            let mut head = alloc::vec![q, q];
            head.extend_from_slice(sigma_listed(11));
            padded(&head, p)
        }
        FamilyKind::BaseGPrime => padded(&[q - 1, q - 1, 3, 3], p - 2),
        FamilyKind::Lambda1 => padded(&[q, 5, 3], p),
        FamilyKind::Lambda2 => padded(&[q, 7, 5, 3], p),
    };
    DegreeSequence::new(degrees)
}

/// A polyhedron realizing [`sequence_of`]`(f)`.
pub fn realize_family(f: &FamilyId) -> Result<Graph> {
    let s = sequence_of(f)?;
    let p = f.p;
    let g = match f.kind {
        FamilyKind::Alpha => construct_two_apex(
            p,
            Placement::BSubdivides { i: 1, a: AMode::WithBSameGap { a_back: true, b_back: true } },
        )?,
        FamilyKind::Beta | FamilyKind::Bipyramid => two_apex::bipyramid(p),
        FamilyKind::Sigma11Alt => two_apex::apexes_over_path(p),
        FamilyKind::BaseGPrime => two_apex::base_gprime(p),
        FamilyKind::Gamma => layout::star_with_filler(4, (p - 7) / 2).assemble()?,
        FamilyKind::Nu => layout::nu(p, f.m.unwrap()).assemble()?,
        FamilyKind::Mu => layout::mu(p).assemble()?,
        FamilyKind::Sigma(k) => two_apex::first_realization(k, p)?,
        FamilyKind::Lambda1 => layout::star_with_filler(5, (p - 8) / 2).assemble()?,
        FamilyKind::Lambda2 => layout::triangle(2, 2, (p - 9) / 2).assemble()?,
    };
    check_realization(&g, &s)?;
    Ok(g)
}

/// Guards every constructor: right sequence and polyhedral.
pub(crate) fn check_realization(g: &Graph, s: &DegreeSequence) -> Result<()> {
    let got = DegreeSequence::of_graph(g);
    if &got != s {
        return Err(Error::ConstructionFailed(format!("built {got}, expected {s}")));
    }
    if !crate::planarity::is_polyhedral(g) {
        return Err(Error::ConstructionFailed(format!("realization of {s} is not polyhedral")));
    }
    Ok(())
}

/// Every family identifier defined at order `p` (with all legal `m` for
/// `Nu`), in a fixed order.
pub fn families_at(p: usize) -> Vec<FamilyId> {
    let mut kinds = alloc::vec![
        FamilyKind::Alpha,
        FamilyKind::Beta,
        FamilyKind::Gamma,
        FamilyKind::Mu,
        FamilyKind::BaseGPrime,
        FamilyKind::Bipyramid,
        FamilyKind::Sigma11Alt,
        FamilyKind::Lambda1,
        FamilyKind::Lambda2,
    ];
    kinds.extend((1..=12).map(FamilyKind::Sigma));
    let mut out: Vec<FamilyId> =
        kinds.into_iter().map(|k| FamilyId::new(k, p)).filter(|f| f.validate().is_ok()).collect();
    for m in 1..p {
        let f = FamilyId::nu(p, m);
        if f.validate().is_ok() {
            out.push(f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(f: &str) -> String {
        let id: FamilyId = f.parse().unwrap();
        sequence_of(&id).unwrap().to_string()
    }

    #[test]
    fn named_sequences() {
        assert_eq!(seq("alpha:p=7"), "5,5,5,4,4,4,3");
        assert_eq!(seq("nu:p=15,m=3"), "13,9,9,7,4,4,4,4,4,4,4,3,3,3,3");
        assert_eq!(seq("mu:p=16"), "14,7,6,6,6,6,6,6,6,3,3,3,3,3,3,3");
        assert_eq!(seq("beta:p=6"), "4,4,4,4,4,4");
        assert_eq!(seq("sigma1:p=8"), "6,6,6,6,3,3,3,3");
        assert_eq!(seq("sigma9:p=12"), "10,10,5,4,4,4,4,4,4,3,3,3");
        assert_eq!(seq("lambda2:p=13"), "11,7,5,4,4,4,4,4,4,4,4,4,3");
    }

    #[test]
    fn domains() {
        assert!(sequence_of(&"gamma:p=8".parse().unwrap()).is_err());
        assert!(sequence_of(&"nu:p=11,m=2".parse().unwrap()).is_err());
        assert!(sequence_of(&"sigma4:p=9".parse().unwrap()).is_err());
        assert!("delta:p=7".parse::<FamilyId>().is_err());
        assert_eq!("nu:p=15,m=3".parse::<FamilyId>().unwrap().to_string(), "nu:p=15,m=3");
    }

    #[test]
    fn triangulation_sums() {
        for p in 11..20 {
            for m in 1..p {
                if let Ok(s) = sequence_of(&FamilyId::nu(p, m)) {
                    assert_eq!(s.sum(), 6 * p as u64 - 12);
                }
            }
        }
        for p in (16..30).step_by(2) {
            assert_eq!(sequence_of(&FamilyId::new(FamilyKind::Mu, p)).unwrap().sum(), 6 * p as u64 - 12);
        }
    }
}

//! Degree sequences, graphicality and the polyhedral necessary conditions.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;
use crate::{Error, Result};

/// A degree sequence, always stored non-increasing.
///
/// Infeasible sequences are representable; feasibility is a query
/// ([`DegreeSequence::polyhedral_feasible`], [`DegreeSequence::is_graphical`]).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    /// Sorts `degrees` non-increasing. Fails only on an empty list.
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { degrees })
    }

    pub fn of_graph(g: &Graph) -> Self {
        let degrees = (0..g.order()).map(|v| g.degree(v) as u32).collect();
        Self::new(degrees).unwrap_or(DegreeSequence { degrees: Vec::new() })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// The order `p`.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn max(&self) -> u32 {
        self.degrees[0]
    }

    pub fn min(&self) -> u32 {
        *self.degrees.last().unwrap()
    }

    pub fn sum(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    pub fn count(&self, d: u32) -> usize {
        self.degrees.iter().filter(|&&x| x == d).count()
    }

    /// Erdős–Gallai test.
    pub fn is_graphical(&self) -> bool {
        erdos_gallai(&self.degrees)
    }

    /// Realizes the sequence with Havel–Hakimi. Vertex `i` of the result has
    /// degree `degrees()[i]`.
    ///
    /// The vertex with the largest remaining demand (lowest index on ties) is
    /// joined to the next-largest demands, again lowest index first, so the
    /// output is deterministic.
    pub fn havel_hakimi_realize(&self) -> Result<Graph> {
        if !self.is_graphical() {
            return Err(Error::NotGraphical);
        }
        let p = self.len();
        let mut g = Graph::try_empty(p)?;
        let mut rem: Vec<u32> = self.degrees.clone();
        let mut done = alloc::vec![false; p];
        loop {
            let pick = (0..p).filter(|&v| !done[v]).max_by(|&a, &b| rem[a].cmp(&rem[b]).then(b.cmp(&a)));
            let Some(v) = pick else { break };
            done[v] = true;
            let need = rem[v] as usize;
            rem[v] = 0;
            if need == 0 {
                continue;
            }
            let mut others: Vec<usize> = (0..p).filter(|&u| !done[u]).collect();
            others.sort_by(|&a, &b| rem[b].cmp(&rem[a]).then(a.cmp(&b)));
            if others.len() < need {
                return Err(Error::NotGraphical);
            }
            for &u in &others[..need] {
                if rem[u] == 0 {
                    return Err(Error::NotGraphical);
                }
                rem[u] -= 1;
                g.add_edge(v, u);
            }
        }
        Ok(g)
    }

    /// Necessary conditions for a polyhedral realization.
    pub fn polyhedral_feasible(&self) -> FeasibilityReport {
        let p = self.len() as u64;
        let sum = self.sum();
        let mut violated = Vec::new();
        if p < 4 {
            violated.push(Condition::OrderBound);
        }
        if !sum.is_multiple_of(2) {
            violated.push(Condition::SumParity);
        }
        if self.min() < 3 {
            violated.push(Condition::MinDegree3);
        }
        if self.max() as u64 > p.saturating_sub(1) {
            violated.push(Condition::MaxDegreeBound);
        }
        if p >= 3 && sum > 6 * p - 12 {
            violated.push(Condition::EulerEdgeBound);
        }
        if p < 3 && sum > 0 {
            violated.push(Condition::EulerEdgeBound);
        }
        if sum < 3 * p {
            violated.push(Condition::MinEdgeBound);
        }
        FeasibilityReport {
            graphical: self.is_graphical(),
            polyhedral_necessary: violated.is_empty(),
            violated_conditions: violated,
        }
    }

    /// Caret notation, collapsing runs of three or more equal terms:
    /// `13,9,9,7,4^7,3^4`.
    pub fn to_caret_string(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.degrees.len() {
            let d = self.degrees[i];
            let mut j = i;
            while j < self.degrees.len() && self.degrees[j] == d {
                j += 1;
            }
            let run = j - i;
            if run >= 3 {
                parts.push(format!("{d}^{run}"));
            } else {
                for _ in 0..run {
                    parts.push(d.to_string());
                }
            }
            i = j;
        }
        parts.join(",")
    }
}

/// The degree sequence of `g`, sorted non-increasing.
pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    DegreeSequence::of_graph(g)
}

/// Erdős–Gallai on an arbitrary (not necessarily sorted) list of demands.
pub fn erdos_gallai(degrees: &[u32]) -> bool {
    let mut d: Vec<u64> = degrees.iter().map(|&x| x as u64).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    erdos_gallai_sorted(&d)
}

/// Erdős–Gallai on a non-increasing list.
pub(crate) fn erdos_gallai_sorted(d: &[u64]) -> bool {
    let n = d.len();
    let total: u64 = d.iter().sum();
    if !total.is_multiple_of(2) {
        return false;
    }
    if n == 0 {
        return true;
    }
    if d[0] as usize >= n && d[0] > 0 {
        return false;
    }
    let mut lhs = 0u64;
    for k in 1..=n {
        lhs += d[k - 1];
        let rhs = (k * (k - 1)) as u64 + d[k..].iter().map(|&x| x.min(k as u64)).sum::<u64>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Every sequence of order `p` that passes the polyhedral necessary
/// conditions and Erdős–Gallai, in descending lexicographic order.
pub fn candidate_sequences(p: usize) -> Vec<DegreeSequence> {
    fn rec(p: usize, cur: &mut Vec<u32>, max: u32, sum: u64, out: &mut Vec<DegreeSequence>) {
        if cur.len() == p {
            if sum.is_multiple_of(2) && sum >= 3 * p as u64 && sum + 12 <= 6 * p as u64 && erdos_gallai(cur) {
                out.push(DegreeSequence { degrees: cur.clone() });
            }
            return;
        }
        let left = (p - cur.len()) as u64;
        for d in (3..=max).rev() {
            // Remaining entries are at least 3, so the Euler bound caps d.
            if sum + d as u64 + 3 * (left - 1) + 12 > 6 * p as u64 {
                continue;
            }
            cur.push(d);
            rec(p, cur, d, sum + d as u64, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p >= 4 {
        rec(p, &mut Vec::with_capacity(p), (p - 1) as u32, 0, &mut out);
    }
    out
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses `INT(,INT)*` where each term may carry a `^COUNT` power.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut degrees = Vec::new();
        for term in text.split(',') {
            let term = term.trim();
            let (base, power) = match term.split_once('^') {
                Some((b, e)) => (b.trim(), Some(e.trim())),
                None => (term, None),
            };
            let d: u32 = base.parse().map_err(|_| Error::ParseSequence(format!("bad term `{term}`")))?;
            let n: usize = match power {
                Some(e) => e.parse().map_err(|_| Error::ParseSequence(format!("bad power in `{term}`")))?,
                None => 1,
            };
            if n == 0 {
                return Err(Error::ParseSequence(format!("zero power in `{term}`")));
            }
            if degrees.len() + n > 4096 {
                return Err(Error::ParseSequence("sequence too long".into()));
            }
            degrees.extend(core::iter::repeat_n(d, n));
        }
        DegreeSequence::new(degrees)
    }
}

/// Identifiers of the polyhedral necessary conditions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Condition {
    SumParity,
    MinDegree3,
    MaxDegreeBound,
    EulerEdgeBound,
    MinEdgeBound,
    OrderBound,
}

impl Condition {
    pub fn id(self) -> &'static str {
        match self {
            Condition::SumParity => "sum-parity",
            Condition::MinDegree3 => "min-degree-3",
            Condition::MaxDegreeBound => "max-degree-bound",
            Condition::EulerEdgeBound => "euler-edge-bound",
            Condition::MinEdgeBound => "min-edge-bound",
            Condition::OrderBound => "order-bound",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        [
            Condition::SumParity,
            Condition::MinDegree3,
            Condition::MaxDegreeBound,
            Condition::EulerEdgeBound,
            Condition::MinEdgeBound,
            Condition::OrderBound,
        ]
        .into_iter()
        .find(|c| c.id() == id)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FeasibilityReport {
    pub graphical: bool,
    /// All of: `p >= 4`, degrees in `3..=p-1`, even sum, `3p <= sum <= 6p-12`.
    pub polyhedral_necessary: bool,
    /// Exactly the violated conditions.
    pub violated_conditions: Vec<Condition>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn caret_expansion() {
        assert_eq!(seq("6,5^3,4^3,3").degrees(), &[6, 5, 5, 5, 4, 4, 4, 3]);
        assert_eq!(seq("8,8,5,4^6,3").len(), 10);
        assert_eq!(seq("3,4,3").degrees(), &[4, 3, 3]);
        assert!("".parse::<DegreeSequence>().is_err());
        assert!("3,,3".parse::<DegreeSequence>().is_err());
        assert!("3^0".parse::<DegreeSequence>().is_err());
        assert!("a".parse::<DegreeSequence>().is_err());
    }

    #[test]
    fn caret_rendering() {
        assert_eq!(seq("13,9,9,7,4^7,3^4").to_caret_string(), "13,9,9,7,4^7,3^4");
        assert_eq!(seq("4,4,4,4,4,4").to_string(), "4,4,4,4,4,4");
    }

    #[test]
    fn graphical_examples() {
        assert!(seq("2,2,2,1,1").is_graphical());
        assert!(seq("3,3,3,3").is_graphical());
        assert!(seq("3,1,1,1").is_graphical());
        assert!(!seq("3,3,1,1").is_graphical());
        assert!(seq("0,0,0").is_graphical());
    }

    #[test]
    fn havel_hakimi_small() {
        let k4 = seq("3,3,3,3").havel_hakimi_realize().unwrap();
        assert_eq!(k4, Graph::complete(4));
        let k2 = seq("1,1").havel_hakimi_realize().unwrap();
        assert_eq!(k2, Graph::from_edges(2, &[(0, 1)]).unwrap());
        let g = seq("2,2,2,1,1").havel_hakimi_realize().unwrap();
        assert_eq!(degree_sequence(&g), seq("2,2,2,1,1"));
        assert_eq!(seq("3,3,1,1").havel_hakimi_realize(), Err(Error::NotGraphical));
    }

    #[test]
    fn feasibility_examples() {
        let alpha7 = seq("5,5,5,4,4,4,3").polyhedral_feasible();
        assert!(alpha7.polyhedral_necessary && alpha7.violated_conditions.is_empty());
        let small = seq("2,2,2,1,1").polyhedral_feasible();
        assert!(!small.polyhedral_necessary);
        assert!(small.violated_conditions.contains(&Condition::MinDegree3));
        let dense = seq("6,6,6,6,6,6,6").polyhedral_feasible();
        assert_eq!(dense.violated_conditions, vec![Condition::EulerEdgeBound]);
        let tiny = seq("3,3,3").polyhedral_feasible();
        assert!(tiny.violated_conditions.contains(&Condition::OrderBound));
        assert!(tiny.violated_conditions.contains(&Condition::MaxDegreeBound));
    }

    #[test]
    fn degree_sequence_examples() {
        assert_eq!(degree_sequence(&Graph::complete(4)).degrees(), &[3, 3, 3, 3]);
        assert_eq!(degree_sequence(&Graph::empty(3)).degrees(), &[0, 0, 0]);
    }
}

//! Exhaustive, isomorph-free enumeration of the polyhedral realizations of a
//! degree sequence.
//!
//! Two independent strategies produce the same output contract:
//! [`generic`] backtracks over edge slots vertex by vertex, and [`apex`]
//! reduces sequences with a vertex of degree `p - 2` to placements of chords
//! around one face cycle. Both return canonical representatives in ascending
//! canonical-code order.

pub mod apex;
pub mod generic;
pub mod necklace;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::canon::{canonical_form, CanonicalCode};
use crate::graph::Graph;
use crate::planarity::is_polyhedral;
use crate::sequence::{degree_sequence, DegreeSequence};
use crate::Result;

pub use apex::{enumerate_apex, ApexDecomposition};
pub use generic::enumerate_generic;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Method {
    /// Apex when the largest degree is `p - 2`, generic otherwise.
    Auto,
    Generic,
    Apex,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Generic => "generic",
            Method::Apex => "apex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "auto" => Some(Method::Auto),
            "generic" => Some(Method::Generic),
            "apex" => Some(Method::Apex),
            _ => None,
        }
    }

    /// The concrete strategy `Auto` picks for `s`.
    pub fn resolve(self, s: &DegreeSequence) -> Method {
        match self {
            Method::Auto if apex_applies(s) => Method::Apex,
            Method::Auto => Method::Generic,
            m => m,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    Unigraphic,
    NotUnigraphic,
    NotPolyhedral,
    /// The search stopped early before it could separate 1 from 2 or more.
    Truncated,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Unigraphic => "UNIGRAPHIC",
            Verdict::NotUnigraphic => "NOT_UNIGRAPHIC",
            Verdict::NotPolyhedral => "NOT_POLYHEDRAL",
            Verdict::Truncated => "TRUNCATED",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [Verdict::Unigraphic, Verdict::NotUnigraphic, Verdict::NotPolyhedral, Verdict::Truncated]
            .into_iter()
            .find(|v| v.name() == name)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnigraphicReport {
    pub sequence: DegreeSequence,
    /// Exact unless `truncated`, in which case a lower bound.
    pub realization_count: usize,
    /// Pairwise distinct, ascending.
    pub canonical_codes: Vec<CanonicalCode>,
    pub verdict: Verdict,
    /// Two non-isomorphic realizations for `NotUnigraphic`, the unique one
    /// for `Unigraphic`, none otherwise.
    pub witnesses: Vec<Graph>,
    /// The strategy that actually ran.
    pub method: Method,
    pub truncated: bool,
    /// Left at zero here; the std companion measures wall time.
    pub elapsed: Duration,
}

/// Deduplicating sink shared by both strategies.
#[derive(Clone, Debug, Default)]
pub struct Collector {
    found: BTreeMap<CanonicalCode, ()>,
    limit: Option<usize>,
}

impl Collector {
    pub fn new(limit: Option<usize>) -> Self {
        Collector { found: BTreeMap::new(), limit }
    }

    /// Records a candidate already known to realize the sequence. Checks
    /// polyhedrality and returns whether the search should keep going.
    pub fn offer(&mut self, g: &Graph) -> bool {
        if !self.is_full() && is_polyhedral(g) {
            self.found.insert(canonical_form(g), ());
        }
        !self.is_full()
    }

    pub fn is_full(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    pub fn len(&self) -> usize {
        self.found.len()
    }

    pub fn is_empty(&self) -> bool {
        self.found.is_empty()
    }

    pub fn merge(&mut self, other: Collector) {
        self.found.extend(other.found);
    }

    pub fn codes(&self) -> Vec<CanonicalCode> {
        self.found.keys().cloned().collect()
    }

    /// Canonical representatives in ascending code order.
    pub fn into_graphs(self) -> Vec<Graph> {
        self.found.into_keys().map(|c| c.to_graph()).collect()
    }
}

pub fn apex_applies(s: &DegreeSequence) -> bool {
    s.len() >= 4 && s.max() as usize == s.len() - 2
}

/// Apex when it applies, generic otherwise.
pub fn enumerate_auto(s: &DegreeSequence, limit: Option<usize>) -> Vec<Graph> {
    enumerate_with(s, Method::Auto, limit).expect("auto never picks an inapplicable method")
}

pub fn enumerate_with(s: &DegreeSequence, method: Method, limit: Option<usize>) -> Result<Vec<Graph>> {
    match method.resolve(s) {
        Method::Apex => enumerate_apex(s, limit),
        _ => Ok(enumerate_generic(s, limit)),
    }
}

/// Decides unigraphicity, stopping after `limit` distinct realizations
/// (`None` counts them all). A limit below 2 can leave the answer open.
pub fn unigraphic_check(s: &DegreeSequence, limit: Option<usize>) -> UnigraphicReport {
    unigraphic_check_with(s, Method::Auto, limit).expect("auto never picks an inapplicable method")
}

pub fn unigraphic_check_with(s: &DegreeSequence, method: Method, limit: Option<usize>) -> Result<UnigraphicReport> {
    let resolved = method.resolve(s);
    let graphs = enumerate_with(s, resolved, limit)?;
    Ok(report_from(s, resolved, graphs, limit))
}

/// Builds the report for a finished enumeration. `limit` is the early-exit
/// bound the enumeration ran with.
pub fn report_from(s: &DegreeSequence, method: Method, graphs: Vec<Graph>, limit: Option<usize>) -> UnigraphicReport {
    for g in &graphs {
        assert!(is_polyhedral(g), "enumerator emitted a non-polyhedral graph");
        assert_eq!(&degree_sequence(g), s, "enumerator emitted a graph of the wrong sequence");
    }
    let canonical_codes: Vec<CanonicalCode> = graphs.iter().map(canonical_form).collect();
    assert!(canonical_codes.windows(2).all(|w| w[0] < w[1]), "enumerator output is not isomorph-free and sorted");
    let count = graphs.len();
    let truncated = limit.is_some_and(|l| count >= l);
    let verdict = match count {
        0 => Verdict::NotPolyhedral,
        1 if truncated => Verdict::Truncated,
        1 => Verdict::Unigraphic,
        _ => Verdict::NotUnigraphic,
    };
    let witnesses = match verdict {
        Verdict::Unigraphic => graphs[..1].to_vec(),
        Verdict::NotUnigraphic => graphs[..2].to_vec(),
        _ => Vec::new(),
    };
    UnigraphicReport {
        sequence: s.clone(),
        realization_count: count,
        canonical_codes,
        verdict,
        witnesses,
        method,
        truncated,
        elapsed: Duration::ZERO,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str) -> DegreeSequence {
        text.parse().unwrap()
    }

    #[test]
    fn k4_is_the_only_cubic_on_four() {
        let gs = enumerate_auto(&seq("3,3,3,3"), None);
        assert_eq!(gs, alloc::vec![Graph::complete(4)]);
    }

    #[test]
    fn infeasible_is_empty() {
        assert!(enumerate_auto(&seq("3,3,3"), None).is_empty());
        assert_eq!(unigraphic_check(&seq("3,3,3"), Some(2)).verdict, Verdict::NotPolyhedral);
    }

    #[test]
    fn verdicts() {
        assert_eq!(unigraphic_check(&seq("6,5,5,5,4,4,4,3"), Some(2)).verdict, Verdict::Unigraphic);
        assert_eq!(unigraphic_check(&seq("4,4,3,3,3,3"), Some(2)).verdict, Verdict::Unigraphic);
        let r = unigraphic_check(&seq("6,6,5,5,4,4,3,3"), Some(2));
        assert_eq!(r.verdict, Verdict::NotUnigraphic);
        assert_eq!(r.witnesses.len(), 2);
        assert!(r.truncated);
    }

    #[test]
    fn limit_one_cannot_decide() {
        let r = unigraphic_check(&seq("3,3,3,3"), Some(1));
        assert_eq!(r.verdict, Verdict::Truncated);
        assert_eq!(r.realization_count, 1);
    }

    #[test]
    fn auto_prefers_apex() {
        assert_eq!(Method::Auto.resolve(&seq("4,4,4,4,4,4")), Method::Apex);
        assert_eq!(Method::Auto.resolve(&seq("3,3,3,3,3,3")), Method::Generic);
    }
}

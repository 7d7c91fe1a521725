//! Sweeps over every candidate sequence of an order that passes a filter.

use polyuni_core::enumerate::Method;
use polyuni_core::families::{classify_sigma, sequence_of, two_apex::sigmas_defined, FamilyId};
use polyuni_core::sequence::candidate_sequences;
use polyuni_core::{DegreeSequence, Error, Verdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::{Cache, CacheKey};
use crate::json::ReportJson;
use crate::parallel;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepFilter {
    /// Starts with `p-2, p-2`.
    TwoApex,
    /// Has at least two entries equal to `p-2`; the largest may be `p-1`.
    TwoOfDegreePMinus2,
    /// Starts with `p-2`.
    Apex,
    /// Starts with `p-2` and has exactly one 3.
    ApexOneThree,
    /// Starts with `p-2`, then three degrees of at least 7 summing to at
    /// least `p+10`.
    ApexHeavyTriple,
}

impl SweepFilter {
    pub fn accepts(self, s: &DegreeSequence) -> bool {
        let d = s.degrees();
        let p = d.len();
        if p < 4 {
            return false;
        }
        if self == SweepFilter::TwoOfDegreePMinus2 {
            return s.count(p as u32 - 2) >= 2;
        }
        if d[0] as usize != p - 2 {
            return false;
        }
        match self {
            SweepFilter::TwoOfDegreePMinus2 => unreachable!(),
            SweepFilter::TwoApex => d[1] as usize == p - 2,
            SweepFilter::Apex => true,
            SweepFilter::ApexOneThree => s.count(3) == 1,
            SweepFilter::ApexHeavyTriple => {
                p >= 5 && d[1..4].iter().all(|&x| x >= 7) && d[1..4].iter().sum::<u32>() >= p as u32 + 10
            }
        }
    }

    /// Candidate sequences of order `p` passing the filter, in descending
    /// lexicographic order.
    pub fn sequences(self, p: usize) -> Vec<DegreeSequence> {
        candidate_sequences(p).into_iter().filter(|s| self.accepts(s)).collect()
    }
}

/// Runs one sequence, consulting and filling the cache. Returns the report
/// and whether it came from the cache.
pub fn check_cached(
    s: &DegreeSequence,
    method: Method,
    limit: Option<usize>,
    cache: Option<&Cache>,
) -> Result<(ReportJson, bool), Error> {
    let key = CacheKey::new(s, method, limit);
    if let Some(hit) = cache.and_then(|c| c.get(&key)) {
        return Ok((hit, true));
    }
    let report = ReportJson::from(&parallel::unigraphic(s, method, limit)?);
    if let Some(c) = cache {
        if let Err(e) = c.put(key, &report) {
            eprintln!("warning: cannot write cache {}: {e}", c.path().display());
        }
    }
    Ok((report, false))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Totals {
    pub sequences: usize,
    pub unigraphic: usize,
    pub not_unigraphic: usize,
    pub not_polyhedral: usize,
    pub truncated: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrderReport {
    pub p: usize,
    pub unigraphic: Vec<String>,
    pub totals: Totals,
    pub reports: Vec<ReportJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub p_min: usize,
    pub p_max: usize,
    pub filter: SweepFilter,
    pub limit: Option<usize>,
    pub orders: Vec<OrderReport>,
    pub totals: Totals,
}

impl SweepReport {
    /// The unigraphic sequences at order `p`.
    pub fn unigraphic_at(&self, p: usize) -> Vec<String> {
        self.orders.iter().filter(|o| o.p == p).flat_map(|o| o.unigraphic.clone()).collect()
    }
}

fn totals<'a>(reports: impl Iterator<Item = &'a ReportJson>) -> Totals {
    let mut t = Totals { sequences: 0, unigraphic: 0, not_unigraphic: 0, not_polyhedral: 0, truncated: 0 };
    for r in reports {
        t.sequences += 1;
        match r.verdict() {
            Some(Verdict::Unigraphic) => t.unigraphic += 1,
            Some(Verdict::NotUnigraphic) => t.not_unigraphic += 1,
            Some(Verdict::NotPolyhedral) => t.not_polyhedral += 1,
            _ => t.truncated += 1,
        }
    }
    t
}

/// Checks every filtered sequence for `p` in `p_min..=p_max`. The second
/// value counts cache hits.
pub fn sweep(
    p_min: usize,
    p_max: usize,
    filter: SweepFilter,
    limit: Option<usize>,
    cache: Option<&Cache>,
) -> Result<(SweepReport, usize), Error> {
    let mut orders = Vec::new();
    let mut hits = 0;
    for p in p_min..=p_max {
        let seqs = filter.sequences(p);
        let results: Vec<(ReportJson, bool)> =
            seqs.par_iter().map(|s| check_cached(s, Method::Auto, limit, cache)).collect::<Result<_, _>>()?;
        hits += results.iter().filter(|(_, h)| *h).count();
        let reports: Vec<ReportJson> = results.into_iter().map(|(r, _)| r).collect();
        let unigraphic =
            reports.iter().filter(|r| r.verdict() == Some(Verdict::Unigraphic)).map(|r| r.sequence.clone()).collect();
        orders.push(OrderReport { p, unigraphic, totals: totals(reports.iter()), reports });
    }
    let totals = totals(orders.iter().flat_map(|o| o.reports.iter()));
    Ok((SweepReport { p_min, p_max, filter, limit, orders, totals }, hits))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SigmaCount {
    pub sigma: u8,
    pub sequence: String,
    pub realizations: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RealizedSequence {
    pub sequence: String,
    pub sigma: Option<u8>,
    pub realizations: usize,
}

/// Every polyhedron of order `p` with two vertices of degree `p-2` (and,
/// unless `filter` says otherwise, none of degree `p-1`), grouped by
/// sequence and matched against the sigma list.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Table2Report {
    pub p: usize,
    pub filter: SweepFilter,
    pub sigmas_defined: Vec<u8>,
    pub realized: Vec<RealizedSequence>,
    pub per_sigma: Vec<SigmaCount>,
    /// No realized sequence falls outside the sigma list.
    pub closed: bool,
    /// Sigmas defined at `p` that no polyhedron realizes.
    pub unrealized: Vec<u8>,
}

pub fn table2(p: usize, filter: SweepFilter, cache: Option<&Cache>) -> Result<(Table2Report, usize), Error> {
    let (report, hits) = sweep(p, p, filter, None, cache)?;
    let realized: Vec<RealizedSequence> = report.orders[0]
        .reports
        .iter()
        .filter(|r| r.realization_count > 0)
        .map(|r| {
            let s: DegreeSequence = r.sequence.parse().expect("sweep emits valid sequences");
            RealizedSequence {
                sequence: r.sequence.clone(),
                sigma: classify_sigma(&s),
                realizations: r.realization_count,
            }
        })
        .collect();
    let defined = sigmas_defined(p);
    let per_sigma: Vec<SigmaCount> = defined
        .iter()
        .map(|&k| {
            let s = sequence_of(&FamilyId::sigma(k, p)).expect("defined sigma has a sequence");
            let text = s.to_string();
            let realizations = realized.iter().find(|r| r.sequence == text).map_or(0, |r| r.realizations);
            SigmaCount { sigma: k, sequence: text, realizations }
        })
        .collect();
    let closed = realized.iter().all(|r| r.sigma.is_some());
    let unrealized = per_sigma.iter().filter(|c| c.realizations == 0).map(|c| c.sigma).collect();
    Ok((Table2Report { p, filter, sigmas_defined: defined, realized, per_sigma, closed, unrealized }, hits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        let s = |t: &str| t.parse::<DegreeSequence>().unwrap();
        assert!(SweepFilter::TwoApex.accepts(&s("5,5,4^5")));
        assert!(!SweepFilter::TwoApex.accepts(&s("5,4^6")));
        assert!(SweepFilter::ApexOneThree.accepts(&s("5,5,5,4,4,4,3")));
        assert!(SweepFilter::ApexHeavyTriple.accepts(&s("9,7,7,7,4,4,4,3,3,3,3")));
        assert!(SweepFilter::ApexHeavyTriple.accepts(&s("10,8,7,7,5,5,3^6")));
        assert!(!SweepFilter::ApexHeavyTriple.accepts(&s("10,7,7,7,5,5,4,3^5")));
        assert!(SweepFilter::TwoApex.sequences(6).iter().all(|x| x.degrees()[..2] == [4, 4]));
    }

    #[test]
    fn table1_row_seven_with_warm_cache() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let (cold, cold_hits) = sweep(7, 7, SweepFilter::TwoApex, Some(2), Some(&cache)).unwrap();
        let (warm, warm_hits) = sweep(7, 7, SweepFilter::TwoApex, Some(2), Some(&cache)).unwrap();
        assert_eq!(cold.unigraphic_at(7), ["5,5,5,4,4,4,3", "5,5,4,4,4,4,4"]);
        assert_eq!(cold_hits, 0);
        assert_eq!(warm_hits, cold.totals.sequences);
        assert_eq!(serde_json::to_string(&cold).unwrap(), serde_json::to_string(&warm).unwrap());
    }

    #[test]
    fn table2_at_seven_with_a_dominating_vertex() {
        let (t, _) = table2(7, SweepFilter::TwoApex, None).unwrap();
        assert!(t.closed);
        assert_eq!(t.unrealized, [3, 6]);
        let (t, _) = table2(7, SweepFilter::TwoOfDegreePMinus2, None).unwrap();
        let outside: Vec<&str> = t.realized.iter().filter(|r| r.sigma.is_none()).map(|r| r.sequence.as_str()).collect();
        assert_eq!(outside, ["6,5,5,4,4,3,3"]);
        assert_eq!(t.unrealized, [6]);
    }

    #[test]
    fn table2_at_eight() {
        let (t, _) = table2(8, SweepFilter::TwoApex, None).unwrap();
        assert!(t.closed);
        let counts: Vec<(u8, usize)> = t.per_sigma.iter().map(|c| (c.sigma, c.realizations)).collect();
        assert_eq!(counts, [(1, 1), (3, 1), (5, 0), (6, 2), (7, 2), (8, 1), (9, 6), (10, 1), (11, 2), (12, 4)]);
        let (t, _) = table2(8, SweepFilter::TwoOfDegreePMinus2, None).unwrap();
        assert!(t.closed);
        assert!(t.realized.iter().all(|r| r.sequence.starts_with("6,") || r.sequence.starts_with("7,")));
    }
}

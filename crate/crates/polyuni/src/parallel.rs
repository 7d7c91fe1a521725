//! Enumeration split into independent subtrees and run on the rayon pool.
//!
//! Every subtree runs to its own limit and nothing is cancelled across
//! subtrees, so the union of what they find does not depend on the number
//! of threads. Keeping the smallest `limit` codes of that union makes the
//! whole report deterministic.

use std::time::Instant;

use polyuni_core::enumerate::{apex, generic, report_from, Collector, Method};
use polyuni_core::{DegreeSequence, Error, UnigraphicReport};
use rayon::prelude::*;

/// Vertices completed before the generic search is split.
const GENERIC_SPLIT_DEPTH: usize = 2;

/// Distinct realizations in canonical order, at most `limit` of them.
pub fn enumerate(s: &DegreeSequence, method: Method, limit: Option<usize>) -> Result<(Method, Collector), Error> {
    let method = method.resolve(s);
    let parts: Vec<Collector> = match method {
        Method::Apex => apex::tasks(s)?
            .par_iter()
            .map(|task| {
                let mut sink = Collector::new(limit);
                apex::run(task, &mut sink);
                sink
            })
            .collect(),
        _ => generic::branches(s, GENERIC_SPLIT_DEPTH)
            .par_iter()
            .map(|state| {
                let mut sink = Collector::new(limit);
                generic::explore(s, state, &mut sink);
                sink
            })
            .collect(),
    };
    let mut all = Collector::new(None);
    for part in parts {
        all.merge(part);
    }
    let mut kept = Collector::new(limit);
    for code in all.codes() {
        if !kept.offer(&code.to_graph()) {
            break;
        }
    }
    Ok((method, kept))
}

pub fn unigraphic(s: &DegreeSequence, method: Method, limit: Option<usize>) -> Result<UnigraphicReport, Error> {
    let start = Instant::now();
    let (method, found) = enumerate(s, method, limit)?;
    let mut report = report_from(s, method, found.into_graphs(), limit);
    // Whole microseconds, so the report survives a JSON round trip.
    report.elapsed = std::time::Duration::from_micros(start.elapsed().as_micros() as u64);
    Ok(report)
}

//! Command line, JSON reports, result cache and parallel sweeps on top of
//! `polyuni-core`.

pub mod cache;
pub mod cli;
pub mod dot;
pub mod json;
pub mod parallel;
pub mod sweep;

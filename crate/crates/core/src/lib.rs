//! Polyhedral degree sequences: realization, certification and enumeration.
//!
//! A polyhedral graph is a simple, planar, 3-connected graph. This crate
//! decides whether a degree sequence has exactly one polyhedral realization
//! up to isomorphism, using two independent exhaustive enumerators, and it
//! builds the named sequence families and the paired non-isomorphic
//! realizations that show a sequence is not unigraphic.
//!
//! The crate is `no_std` and only needs `alloc`. IO, timing, parallelism and
//! the command line live in the `polyuni` companion crate.
//!
//! ```
//! use polyuni_core::{enumerate, DegreeSequence, Verdict};
//!
//! let s: DegreeSequence = "5,5,5,4,4,4,3".parse().unwrap();
//! let report = enumerate::unigraphic_check(&s, Some(2));
//! assert_eq!(report.verdict, Verdict::Unigraphic);
//! ```
#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canon;
pub mod connectivity;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod planarity;
pub mod sequence;

pub use canon::{canonical_form, is_isomorphic, CanonicalCode};
pub use connectivity::{connectivity_at_least, CutWitness, Disconnection};
pub use enumerate::{Method, UnigraphicReport, Verdict};
pub use error::Error;
pub use graph::Graph;
pub use planarity::{is_polyhedral, planarity_check, Embedding, KuratowskiWitness, Planarity};
pub use sequence::{DegreeSequence, FeasibilityReport};

pub type Result<T, E = Error> = core::result::Result<T, E>;

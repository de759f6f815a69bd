//! Computing with Berge hypergraphs: containment of Berge copies of forests
//! and general graphs, the extremal constructions behind the known bounds,
//! exact evaluation of those bounds, and exact Turán numbers at desk scale
//! by pruned exhaustive search, all cross-verified against each other.
//!
//! The main entry points:
//!
//! * [`hypergraph::Hypergraph`] — r-uniform hypergraphs with bitset edge
//!   rows, plus link/trace/shrink/connectivity.
//! * [`family::FamilySpec`] — forbidden families, parsed from a small DSL
//!   such as `"P3+2S2+M2"`.
//! * [`berge::contains`] — Berge containment with witnesses, backed by a
//!   brute-force oracle.
//! * [`constructions`] — the lower-bound constructions with predicted
//!   counts.
//! * [`bounds::eval_bound`] — closed-form bound evaluation in exact
//!   arithmetic, keyed by stable theorem ids.
//! * [`search::turan_exact`] / [`search::turan_connected`] — exhaustive
//!   Turán numbers; [`suites::verify_suite`] cross-checks everything.

pub mod berge;
pub mod bounds;
pub mod constructions;
pub mod family;
pub mod hypergraph;
pub mod search;
pub mod suites;

pub use berge::{contains, contains_using, find_berge_star, oracle_contains, BergeWitness};
pub use bounds::{binom_zero, eval_bound, star_degree_threshold, BoundResult};
pub use constructions::ConstructionReport;
pub use family::FamilySpec;
pub use hypergraph::{Hypergraph, VertexSet};
pub use search::{local_lower_bound, turan_connected, turan_exact, SearchOptions, SearchOutcome};
pub use suites::{verify_suite, GridSpec, SuiteRow};

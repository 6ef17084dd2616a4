//! Exhaustive deciders for proportional, equitable and classical list
//! coloring of small graphs.
//!
//! The pieces, bottom up:
//!
//! * [`graph`]: simple graphs and the named families (paths, stars, K_{m,m},
//!   linear forests, the Wang–Lih trees).
//! * [`assign`]: k-assignments, multiplicities, and enumeration of
//!   assignments up to renaming colors.
//! * [`solver`]: complete search for a proper / equitable / proportional
//!   L-coloring under exact class-size budgets.
//! * [`choose`]: the choosability deciders, χ_pc, and re-checkable
//!   certificates.
//! * [`suite`]: the catalogue of known results, re-derived by computation.
//! * [`io`]: text graph format, graph6, and versioned JSON documents.

pub mod assign;
pub mod bench;
pub mod choose;
pub mod graph;
pub mod io;
pub mod solver;
pub mod suite;

pub use assign::{enumerate_assignments, Color, Enumerator, ListAssignment, MultiplicityProfile, Strategy};
pub use choose::{
    chi_pc, decide, make_certificate, verify_certificate, Certificate, ChiPcReport, ChoiceMode, DecideOptions,
    Status, Verdict,
};
pub use graph::{Graph, GraphError, Vertex};
pub use solver::{find_coloring, find_equitable_k_coloring, Coloring, Mode};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

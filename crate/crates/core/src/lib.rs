//! K4^--saturated graphs.
//!
//! * [`graph`], [`graph6`], [`bipartite`]: frozen bitset graphs, the
//!   graph6 interchange format and odd-cycle analysis.
//! * [`saturation`]: diamond detection and saturation checking, with a
//!   brute-force oracle.
//! * [`constructions`]: the `F_n(a, b)` family, extremal graphs, edge-count
//!   formulas and the closed-form spectrum.
//! * [`enumeration`]: exhaustive ground truth for `n <= 8`.
//! * [`sweeps`]: parameter sweeps tying formulas, constructions and
//!   checkers together.

pub mod bipartite;
pub mod canon;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod saturation;
pub mod sweeps;

pub use bipartite::{is_bipartite, shortest_odd_cycle, Bipartiteness, OddCycleInfo};
pub use canon::{canonical_form, CanonicalForm};
pub use constructions::{
    bipartite_threshold, construct_complete_bipartite, construct_f, construct_star_matching,
    coverage_set, f_formula, spectrum_formula, verify_interval_coverage,
    verify_overlap_inequality, ConstructionParams, PartLabels, SpectrumSet,
};
pub use enumeration::{
    audit, enumerate_saturated, partition_tasks, verify_proof_bound, verify_theorem_a,
    CheckerMode, EnumerationOptions, SpectrumReport,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use saturation::{
    contains_k4_minus, creates_k4_minus_on_add, is_k4_minus_saturated, naive_contains,
    naive_is_saturated, odd_cycle_neighbor_bound, PatternGraph, SaturationVerdict,
};

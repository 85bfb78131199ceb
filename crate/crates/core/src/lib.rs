//! Observability analysis for edge-colored directed graphs.
//!
//! An agent walks the edges of a directed graph and observes only the
//! colors of the edges it traverses. The graph is *observable* when some
//! horizon `T` makes every color sequence of length `T` or more determine
//! the agent's position uniquely, and *partly observable* when every long
//! enough sequence localizes the agent at some intermediate step. This
//! crate provides:
//!
//! * [`graph`]: the colored-digraph data model, validation, strongly
//!   connected components, asymptotic reachability and the epsilon
//!   closure that eliminates unobservable (color-free) transitions.
//! * [`mod@format`]: JSON and DOT parsing and serialization.
//! * [`tracker`]: position-set propagation along an observation word and
//!   boolean-matrix path counting.
//! * [`pair`]: the auxiliary graphs over ordered node pairs behind the
//!   polynomial deciders.
//! * [`analysis`]: observability, partial observability, the weaker
//!   a-posteriori notion, and exact minimal localization horizons.
//! * [`oracle`]: brute-force word-enumeration references used to validate
//!   the polynomial deciders on small instances.
//! * [`generators`]: named examples, the quadratic worst-case family,
//!   seeded random graphs, exhaustive enumeration and the two
//!   NP-hardness reduction constructions with their coloring recipes.
//! * [`design`]: exact backtracking solvers for the minimum-color design
//!   problems.
//!
//! Everything is a pure function over immutable values and safe to call
//! from any number of threads. With the default `parallel` feature the
//! pair-graph construction fans out over rayon; disabling the feature
//! yields an identical, fully sequential build.
//!
//! On the a-posteriori notion: a graph is partly a-posteriori observable
//! when, after any sufficiently long observation, at least one past
//! position can be reconstructed from the whole sequence. The absence of
//! synchronized separated cycles (acyclicity of the strict pair graph) is
//! the criterion implemented here; it is the condition that notion is
//! associated with, and the converse direction is this crate's reading
//! rather than a proved equivalence.

pub mod analysis;
pub mod bitset;
pub mod design;
pub mod format;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod pair;
pub mod tracker;

pub use analysis::{
    analyze, is_observable, is_partly_aposteriori_observable, is_partly_observable,
    min_observation_time, min_partial_observation_time, AnalysisError, ObservabilityReport,
    Witness,
};
pub use bitset::NodeSet;
pub use format::{Format, FormatError, GraphDocument};
pub use graph::{
    ColorId, ColoredDigraph, Edge, NodeId, UncoloredDigraph, ValidationReport, Word,
};
pub use oracle::{OracleBudget, OracleError};
pub use pair::{build_pair_graph, build_pair_graph_sequential, PairGraph, PairKind};
pub use tracker::{localization_times, path_count_matrix, step, track, TrackState};

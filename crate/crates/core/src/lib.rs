//! Maximum Flexi-clique search.
//!
//! A Flexi-clique of a simple undirected graph `G` for an exponent `τ ∈ [0, 1)`
//! is a node set `H` whose induced subgraph is connected and in which every
//! node has at least `⌊|H|^τ⌋` neighbours inside `H`. The degree requirement
//! grows sub-linearly with the size of the set, so the family is neither
//! hereditary nor quasi-hereditary.
//!
//! The crate provides:
//!
//! * exact integer threshold arithmetic over a rational exponent ([`Tau`],
//!   [`bounds`]),
//! * an immutable graph with the usual primitives ([`graph`]),
//! * a fully dynamic connectivity structure ([`dyncon`]),
//! * the core-seeded peeling heuristic ([`fpa`]),
//! * the exact connectivity-preserving branch and bound ([`eba`]),
//! * a brute-force oracle for small graphs ([`oracle`]).

pub mod bounds;
pub mod dyncon;
pub mod eba;
pub mod flexi;
pub mod fpa;
pub mod graph;
pub mod nodeset;
pub mod oracle;
pub mod tau;

pub use bounds::{degree_diameter_bound, floor_invpow, floor_pow, theta, PowTable};
pub use eba::{run_eba, EbaOutcome, PruneStats, SolverConfig};
pub use flexi::{is_flexi, Algorithm, FlexiResult};
pub use fpa::{run_fpa, select_seed};
pub use graph::{build_graph, BuildSummary, Graph, GraphError, NodeId};
pub use nodeset::NodeSet;
pub use oracle::{all_flexi_sizes, brute_force_max_flexi, OracleError};
pub use tau::{Tau, TauError};

//! Colourability of m-clique holes.
//!
//! An m-clique hole is a cyclic sequence of `m >= 4` cliques, each of size at
//! most `m`, in which only cyclically consecutive cliques intersect. It is
//! m-colourable exactly when the intersections `A_i = Phi_i ∩ Phi_{i+1}`
//! satisfy `sum |A_i| <= m * floor(m/2)`. This crate decides that condition,
//! constructs explicit m-colourings, and ships an independent exact oracle to
//! check both.
//!
//! Indices in the library API are 0-based. Everything printed or serialised
//! (validation messages, traces, diagrams, CLI flags) is 1-based.
//!
//! ```
//! use cliquehole::{color_hole, hole_from_profile, ColoringOptions, GeneratorSpec};
//!
//! let hole = hole_from_profile(&GeneratorSpec::new(vec![5, 2, 3, 4, 1, 4, 2])).unwrap();
//! let out = color_hole(&hole, &ColoringOptions::default()).unwrap();
//! assert!(out.coloring.palette().len() <= 7);
//! ```

pub mod colorability;
pub mod coloring;
mod error;
pub mod io;
pub mod model;
pub mod oracle;

pub use colorability::{decide_hole, decide_profile, decide_ring, intersection_bound, Verdict};
pub use coloring::{
    balance_and_count, build_partition, color_even_ring, color_hole, color_odd_ring,
    extend_to_hole, pad_to_extreme, BalancingTrace, ColoringOptions, HoleColoring, MisPartition,
    PaddingPlan, Picker, RingColoring, RingRoute, TraceRecord,
};
pub use error::{Error, Result, UnresolvedReason};
pub use io::{hole_from_profile, random_ring_profile, GeneratorSpec};
pub use model::{
    coverage_sums, extract_ring, invert_move, profile_of, validate_clique_hole, CliqueHole,
    Coloring, Direction, FamilyIndex, Ring, RingProfile, SelectionCounts, TransformationMove,
    ValidationReport, VertexId, Violation,
};

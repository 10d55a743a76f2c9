//! Domain types: clique holes, rings, profiles, transformations, selection
//! counts and colourings.

mod coloring;
pub(crate) mod hole;
mod profile;
mod ring;
mod selection;
mod vertex;

pub use coloring::Coloring;
pub use hole::{CliqueHole, ValidationReport, Violation};
pub use profile::{invert_move, Direction, RingProfile, TransformationMove};
pub use ring::{extract_ring, profile_of, Ring};
pub use selection::{coverage_sums, family_shape, FamilyIndex, SelectionCounts};
pub use vertex::{VertexId, VIRTUAL_PREFIX};

/// Validates a hole, returning every violated invariant.
pub fn validate_clique_hole(hole: &CliqueHole) -> ValidationReport {
    hole.validate()
}

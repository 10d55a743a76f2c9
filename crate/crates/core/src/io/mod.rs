//! Instance, colouring and trace formats, plus instance generation.

mod diagram;
mod generate;
mod instance;
mod trace;

pub use diagram::emit_diagram;
pub use generate::{hole_from_profile, max_profile_sum, random_ring_profile, GeneratorSpec};
pub use instance::{
    parse_coloring, parse_instance, parse_instance_unvalidated, serialize_coloring,
    serialize_instance, ColoringDocument, InstanceDocument, FORMAT_VERSION,
};
pub use trace::{emit_trace, emit_trace_json};

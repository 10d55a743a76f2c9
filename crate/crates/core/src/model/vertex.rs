use std::fmt;

use serde::{Deserialize, Serialize};

/// Prefix reserved for padding vertices that exist only during colouring.
pub const VIRTUAL_PREFIX: &str = "~virtual:";

/// Opaque vertex identifier. Ordering is lexicographic and is the canonical
/// order used everywhere a set of vertices is traversed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Self {
        Self(id.into())
    }

    /// Generated name for the `slot`-th vertex of sector `sector` (both 0-based,
    /// printed 1-based).
    pub fn sector(sector: usize, slot: usize) -> Self {
        Self(format!("a{}_v{}", sector + 1, slot + 1))
    }

    /// Generated name for the `slot`-th private vertex of clique `clique`.
    pub fn private(clique: usize, slot: usize) -> Self {
        Self(format!("p{}_v{}", clique + 1, slot + 1))
    }

    pub(crate) fn padding(sector: usize, slot: usize) -> Self {
        Self(format!("{VIRTUAL_PREFIX}a{}_v{}", sector + 1, slot + 1))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_virtual(&self) -> bool {
        self.0.starts_with(VIRTUAL_PREFIX)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        Self::new(s)
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        Self(s)
    }
}

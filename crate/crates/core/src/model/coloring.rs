use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::VertexId;

/// Assignment of 0-based colour indices to vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    colors: BTreeMap<VertexId, usize>,
}

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: VertexId, color: usize) -> Option<usize> {
        self.colors.insert(v, color)
    }

    pub fn get(&self, v: &VertexId) -> Option<usize> {
        self.colors.get(v).copied()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.colors.contains_key(v)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, usize)> {
        self.colors.iter().map(|(v, &c)| (v, c))
    }

    /// Distinct colour indices in use.
    pub fn palette(&self) -> BTreeSet<usize> {
        self.colors.values().copied().collect()
    }

    /// Drops padding vertices.
    pub fn without_virtual(mut self) -> Self {
        self.colors.retain(|v, _| !v.is_virtual());
        self
    }

    pub fn as_map(&self) -> &BTreeMap<VertexId, usize> {
        &self.colors
    }
}

impl FromIterator<(VertexId, usize)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (VertexId, usize)>>(iter: I) -> Self {
        Self {
            colors: iter.into_iter().collect(),
        }
    }
}

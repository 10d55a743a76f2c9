use std::collections::BTreeSet;

use super::{CliqueHole, RingProfile, VertexId};
use crate::error::{Error, Result};

/// The sectors `A_i = Phi_i ∩ Phi_{i+1}` of a clique hole. Every vertex of
/// `A_i` is adjacent to exactly the other vertices of `A_{i-1} ∪ A_i ∪ A_{i+1}`
/// within the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    sectors: Vec<BTreeSet<VertexId>>,
    origin: Option<Box<CliqueHole>>,
}

impl Ring {
    /// Builds a ring directly from its sectors, checking disjointness,
    /// non-emptiness and the pair-sum constraint.
    pub fn new(sectors: Vec<BTreeSet<VertexId>>) -> Result<Self> {
        let sizes: Vec<usize> = sectors.iter().map(BTreeSet::len).collect();
        RingProfile::new(sizes).map_err(|e| Error::InvalidRing(e.to_string()))?;
        let mut seen = BTreeSet::new();
        for (i, sector) in sectors.iter().enumerate() {
            for v in sector {
                if !seen.insert(v) {
                    return Err(Error::InvalidRing(format!(
                        "vertex {v} appears in sector {} and an earlier sector",
                        i + 1
                    )));
                }
            }
        }
        Ok(Self {
            sectors,
            origin: None,
        })
    }

    /// Ring with generated vertex names `a{i}_v{j}` for the given profile.
    pub fn from_profile(profile: &RingProfile) -> Self {
        let sectors = profile
            .sizes()
            .iter()
            .enumerate()
            .map(|(i, &a)| (0..a).map(|j| VertexId::sector(i, j)).collect())
            .collect();
        Self {
            sectors,
            origin: None,
        }
    }

    pub fn m(&self) -> usize {
        self.sectors.len()
    }

    pub fn sectors(&self) -> &[BTreeSet<VertexId>] {
        &self.sectors
    }

    /// Sector `i` (0-based, wrapping).
    pub fn sector(&self, i: usize) -> &BTreeSet<VertexId> {
        &self.sectors[i % self.m()]
    }

    pub fn origin(&self) -> Option<&CliqueHole> {
        self.origin.as_deref()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.sectors.iter().flatten()
    }

    pub fn vertex_count(&self) -> usize {
        self.sectors.iter().map(BTreeSet::len).sum()
    }

    /// 0-based sector containing `v`, if any.
    pub fn sector_of(&self, v: &VertexId) -> Option<usize> {
        self.sectors.iter().position(|s| s.contains(v))
    }

    pub fn profile(&self) -> RingProfile {
        RingProfile::new(self.sectors.iter().map(BTreeSet::len).collect())
            .expect("ring invariants imply a valid profile")
    }

    /// Same ring with extra vertices appended to each sector.
    pub(crate) fn with_extra(&self, extra: &[Vec<VertexId>]) -> Result<Self> {
        let sectors = self
            .sectors
            .iter()
            .zip(extra)
            .map(|(s, add)| s.iter().chain(add).cloned().collect())
            .collect();
        Ring::new(sectors)
    }
}

/// Extracts `A_i = Phi_i ∩ Phi_{i+1}` (cyclic) from a valid hole.
pub fn extract_ring(hole: &CliqueHole) -> Result<Ring> {
    let report = hole.validate();
    if !report.is_valid() {
        return Err(Error::InvalidHole(report));
    }
    let m = hole.m();
    let sectors = (0..m)
        .map(|i| {
            hole.clique(i)
                .intersection(hole.clique(i + 1))
                .cloned()
                .collect()
        })
        .collect();
    let mut ring = Ring::new(sectors)?;
    ring.origin = Some(Box::new(hole.clone()));
    Ok(ring)
}

/// `(|A_1|, ..., |A_m|)`.
pub fn profile_of(ring: &Ring) -> RingProfile {
    ring.profile()
}

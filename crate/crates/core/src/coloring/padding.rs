use crate::error::{Error, Result};
use crate::model::{Ring, RingProfile, VertexId};

/// Raising a sub-extreme odd profile to the extreme sum by adding virtual
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaddingPlan {
    pub original: RingProfile,
    pub padded: RingProfile,
    /// Virtual vertices added to each sector.
    pub virtual_vertices: Vec<Vec<VertexId>>,
}

impl PaddingPlan {
    pub fn is_identity(&self) -> bool {
        self.original == self.padded
    }

    pub fn virtual_count(&self) -> usize {
        self.virtual_vertices.iter().map(Vec::len).sum()
    }

    /// The ring with this plan's virtual vertices added.
    pub fn apply(&self, ring: &Ring) -> Result<Ring> {
        if ring.profile() != self.original {
            return Err(Error::Domain(format!(
                "padding plan for {} applied to ring {}",
                self.original,
                ring.profile()
            )));
        }
        ring.with_extra(&self.virtual_vertices)
    }
}

/// Greedily increments sectors whose two adjacent pair sums are both below
/// `m`, choosing the smallest `a_{i-1} + 2a_i + a_{i+1}` (ties to the smallest
/// index), until the sum reaches `m * floor(m/2)`.
pub fn pad_to_extreme(profile: &RingProfile) -> Result<PaddingPlan> {
    let m = profile.m();
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd(m));
    }
    let bound = profile.bound();
    if profile.sum() > bound {
        return Err(Error::NotColorable(crate::colorability::decide_profile(
            profile,
        )));
    }
    let mut sizes = profile.sizes().to_vec();
    let mut added = vec![0usize; m];
    let mut sum = profile.sum();
    while sum < bound {
        let pick = (0..m)
            .filter(|&i| {
                let prev = sizes[(i + m - 1) % m];
                let next = sizes[(i + 1) % m];
                prev + sizes[i] < m && sizes[i] + next < m
            })
            .min_by_key(|&i| {
                (
                    sizes[(i + m - 1) % m] + 2 * sizes[i] + sizes[(i + 1) % m],
                    i,
                )
            });
        let Some(i) = pick else {
            return Err(Error::PaddingStuck {
                profile: sizes,
                sum,
                bound,
            });
        };
        sizes[i] += 1;
        added[i] += 1;
        sum += 1;
    }
    let virtual_vertices = added
        .iter()
        .enumerate()
        .map(|(i, &k)| (0..k).map(|slot| VertexId::padding(i, slot)).collect())
        .collect();
    Ok(PaddingPlan {
        original: profile.clone(),
        padded: RingProfile::new(sizes)?,
        virtual_vertices,
    })
}

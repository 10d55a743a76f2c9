use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{family_shape, Coloring, FamilyIndex, Ring, SelectionCounts, VertexId};

/// A maximum independent set drawn from one family; `members[k]` is the
/// vertex taken from sector `family + 2k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub family: FamilyIndex,
    pub members: Vec<VertexId>,
}

/// `m` pairwise disjoint maximum independent sets covering an extreme odd
/// ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisPartition {
    pub sets: Vec<IndependentSet>,
}

impl MisPartition {
    /// Colour `k` for the `k`-th set.
    pub fn to_coloring(&self) -> Coloring {
        self.sets
            .iter()
            .enumerate()
            .flat_map(|(color, set)| set.members.iter().map(move |v| (v.clone(), color)))
            .collect()
    }

    /// Number of sets per 1-based shape, e.g. `[4, 6, 1] -> 2`.
    pub fn shape_counts(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        for set in &self.sets {
            let shape: Vec<usize> = set.family.shape().iter().map(|s| s + 1).collect();
            *out.entry(shape).or_insert(0) += 1;
        }
        out
    }
}

/// Materialises the selection: `s_i` sets of shape `{i, i+2, ..., i+2(n-1)}`
/// for each family, each slot filled with a distinct vertex of its sector.
///
/// Within a sector, slots are served by (position in shape, family, copy), so
/// the all-ones selection on a balanced ring yields
/// `{v_{i,1}, v_{i+2,2}, ..., v_{i+2(n-1),n}}` for family `i`.
pub fn build_partition(ring: &Ring, s: &SelectionCounts) -> Result<MisPartition> {
    let m = ring.m();
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd(m));
    }
    if s.m() != m {
        return Err(Error::CoverageMismatch(format!(
            "{} counts for a ring with m = {m}",
            s.m()
        )));
    }
    if !s.is_non_negative() || s.total() != m as i64 {
        return Err(Error::CoverageMismatch(format!(
            "counts {s} must be non-negative and sum to {m}"
        )));
    }
    let sizes: Vec<i64> = ring.sectors().iter().map(|x| x.len() as i64).collect();
    if s.coverage_sums() != sizes {
        return Err(Error::CoverageMismatch(format!(
            "coverage {:?} != profile {}",
            s.coverage_sums(),
            ring.profile()
        )));
    }

    // (slot position, family, copy) per demand, grouped by sector
    let mut sets: Vec<(usize, usize)> = Vec::new();
    for (family, &count) in s.counts().iter().enumerate() {
        for copy in 0..count as usize {
            sets.push((family, copy));
        }
    }
    let mut demands: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); m];
    for (set_idx, &(family, copy)) in sets.iter().enumerate() {
        for (pos, sector) in family_shape(m, family).into_iter().enumerate() {
            demands[sector].push((pos, set_idx, copy));
        }
    }
    let mut members: Vec<Vec<Option<VertexId>>> = sets.iter().map(|_| vec![None; m / 2]).collect();
    for (sector, mut list) in demands.into_iter().enumerate() {
        list.sort_unstable();
        for ((pos, set_idx, _), v) in list.into_iter().zip(ring.sector(sector)) {
            members[set_idx][pos] = Some(v.clone());
        }
    }

    let sets = sets
        .into_iter()
        .zip(members)
        .map(|((family, _), slots)| IndependentSet {
            family: FamilyIndex { m, family },
            members: slots
                .into_iter()
                .map(|v| v.expect("coverage equals sector size"))
                .collect(),
        })
        .collect();
    Ok(MisPartition { sets })
}

//! Constructing proper m-colourings of rings and clique holes.
//!
//! Even rings use a fixed alternating scheme. Odd rings are padded to the
//! extreme sum if needed, rebalanced while tracking per-family selection
//! counts, and coloured by materialising the resulting partition into
//! maximum independent sets. Private clique vertices are filled in last.

mod balance;
mod even;
mod padding;
mod partition;

pub use balance::{balance_and_count, BalancingTrace, NegativeCount, Picker, TraceRecord};
pub use even::color_even_ring;
pub use padding::{pad_to_extreme, PaddingPlan};
pub use partition::{build_partition, IndependentSet, MisPartition};

use crate::colorability::{decide_profile, Verdict};
use crate::error::{Error, Result, UnresolvedReason};
use crate::model::{extract_ring, CliqueHole, Coloring, Ring};
use crate::oracle::{graph_of_hole, graph_of_ring, is_k_colorable, verify_coloring, SearchLimits};

#[derive(Clone, Debug, Default)]
pub struct ColoringOptions {
    pub picker: Picker,
    /// Guard for the exact-search fallback on stuck odd rings.
    pub fallback_limits: SearchLimits,
}

/// Which construction produced a ring colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingRoute {
    Even,
    Balanced,
    /// Padding got stuck; exact search supplied the colouring.
    SearchFallback,
}

#[derive(Clone, Debug)]
pub struct RingColoring {
    pub coloring: Coloring,
    pub route: RingRoute,
    pub trace: Option<BalancingTrace>,
    pub padding: Option<PaddingPlan>,
    pub partition: Option<MisPartition>,
    /// Profile at which padding stopped, when the fallback ran.
    pub stuck_at: Option<Vec<usize>>,
}

/// Colours an odd ring with at most `m` colours.
pub fn color_odd_ring(ring: &Ring, options: &ColoringOptions) -> Result<RingColoring> {
    let m = ring.m();
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd(m));
    }
    let profile = ring.profile();
    let verdict = decide_profile(&profile);
    if !verdict.colorable {
        return Err(Error::NotColorable(verdict));
    }
    let plan = match pad_to_extreme(&profile) {
        Ok(plan) => plan,
        Err(Error::PaddingStuck { profile: stuck, .. }) => {
            return search_fallback(ring, stuck, &options.fallback_limits)
        }
        Err(e) => return Err(e),
    };
    let padded = plan.apply(ring)?;
    let trace = balance_and_count(&plan.padded, &options.picker)?;
    let partition = build_partition(&padded, &trace.final_counts)?;
    let coloring = partition.to_coloring().without_virtual();
    Ok(RingColoring {
        coloring,
        route: RingRoute::Balanced,
        trace: Some(trace),
        padding: Some(plan),
        partition: Some(partition),
        stuck_at: None,
    })
}

fn search_fallback(ring: &Ring, stuck: Vec<usize>, limits: &SearchLimits) -> Result<RingColoring> {
    let m = ring.m();
    let unresolved = |reason| Error::Unresolved {
        profile: ring.profile().sizes().to_vec(),
        stuck_at: stuck.clone(),
        reason,
    };
    let g = graph_of_ring(ring);
    match is_k_colorable(&g, m, limits) {
        Ok(Some(coloring)) => Ok(RingColoring {
            coloring,
            route: RingRoute::SearchFallback,
            trace: None,
            padding: None,
            partition: None,
            stuck_at: Some(stuck.clone()),
        }),
        Ok(None) => Err(unresolved(UnresolvedReason::SearchFoundNoColoring)),
        Err(Error::TooLarge { vertices, guard }) => {
            Err(unresolved(UnresolvedReason::SearchTooLarge {
                vertices,
                guard,
            }))
        }
        Err(e) => Err(e),
    }
}

/// Gives each private vertex of `Phi_i` the lowest colour not yet used in
/// `Phi_i`, cliques in order and vertices in canonical order. Ring vertices
/// keep their colours.
pub fn extend_to_hole(hole: &CliqueHole, ring_coloring: &Coloring) -> Result<Coloring> {
    let m = hole.m();
    let mut coloring = ring_coloring.clone();
    for i in 0..m {
        let private = hole.private_vertices(i);
        let mut used = vec![false; m];
        for v in hole.clique(i) {
            if private.contains(&v) {
                continue;
            }
            let c = ring_coloring
                .get(v)
                .ok_or_else(|| Error::Domain(format!("ring vertex {v} has no colour")))?;
            if c < m {
                used[c] = true;
            }
        }
        for v in private {
            let c = used.iter().position(|u| !u).ok_or_else(|| {
                Error::InternalInvariant(format!("clique {} ran out of colours", i + 1))
            })?;
            used[c] = true;
            coloring.insert(v.clone(), c);
        }
    }
    Ok(coloring)
}

#[derive(Clone, Debug)]
pub struct HoleColoring {
    pub coloring: Coloring,
    pub verdict: Verdict,
    pub ring: RingColoring,
}

/// Decides, colours the ring by parity, extends to private vertices, and
/// verifies the result before returning it.
pub fn color_hole(hole: &CliqueHole, options: &ColoringOptions) -> Result<HoleColoring> {
    let ring = extract_ring(hole)?;
    let verdict = decide_profile(&ring.profile());
    if !verdict.colorable {
        return Err(Error::NotColorable(verdict));
    }
    let ring_coloring = if ring.m() % 2 == 0 {
        RingColoring {
            coloring: color_even_ring(&ring)?,
            route: RingRoute::Even,
            trace: None,
            padding: None,
            partition: None,
            stuck_at: None,
        }
    } else {
        color_odd_ring(&ring, options)?
    };
    let coloring = extend_to_hole(hole, &ring_coloring.coloring)?;
    let report = verify_coloring(&graph_of_hole(hole), &coloring, hole.m());
    if !report.proper {
        return Err(Error::InternalInvariant(format!(
            "constructed colouring is improper: {}",
            report
                .violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    Ok(HoleColoring {
        coloring,
        verdict,
        ring: ring_coloring,
    })
}

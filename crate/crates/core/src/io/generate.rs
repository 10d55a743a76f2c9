use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{CliqueHole, RingProfile, VertexId};

/// Ring profile plus optional clique sizes; `|Phi_i|` defaults to
/// `a_{i-1} + a_i` (no private vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub profile: Vec<usize>,
    pub clique_sizes: Option<Vec<usize>>,
}

impl GeneratorSpec {
    pub fn new(profile: Vec<usize>) -> Self {
        Self {
            profile,
            clique_sizes: None,
        }
    }

    pub fn with_clique_sizes(mut self, sizes: Vec<usize>) -> Self {
        self.clique_sizes = Some(sizes);
        self
    }
}

/// Builds a hole whose ring has the given profile. Sector vertices are named
/// `a{i}_v{j}`, private vertices `p{i}_v{j}`; `Phi_i = A_{i-1} ∪ A_i ∪ private`.
pub fn hole_from_profile(spec: &GeneratorSpec) -> Result<CliqueHole> {
    let profile =
        RingProfile::new(spec.profile.clone()).map_err(|e| Error::InfeasibleSpec(e.to_string()))?;
    let m = profile.m();
    let sizes = match &spec.clique_sizes {
        Some(s) if s.len() != m => {
            return Err(Error::InfeasibleSpec(format!(
                "{} clique sizes for m = {m}",
                s.len()
            )))
        }
        Some(s) => s.clone(),
        None => (0..m)
            .map(|i| profile.get(i as isize - 1) + profile.get(i as isize))
            .collect(),
    };
    let mut cliques = Vec::with_capacity(m);
    for (i, &size) in sizes.iter().enumerate() {
        let shared = profile.get(i as isize - 1) + profile.get(i as isize);
        if size < shared || size > m {
            return Err(Error::InfeasibleSpec(format!(
                "|Phi_{}| = {size} outside [{shared}, {m}]",
                i + 1
            )));
        }
        let prev = (i + m - 1) % m;
        let mut clique: BTreeSet<VertexId> = BTreeSet::new();
        clique.extend((0..profile.get(prev as isize)).map(|j| VertexId::sector(prev, j)));
        clique.extend((0..profile.get(i as isize)).map(|j| VertexId::sector(i, j)));
        clique.extend((0..size - shared).map(|j| VertexId::private(i, j)));
        cliques.push(clique);
    }
    Ok(CliqueHole::new(cliques))
}

/// Largest sum a valid profile can reach: `floor(m^2 / 2)`, which exceeds
/// `m * floor(m/2)` by `floor(m/2)` when `m` is odd.
pub fn max_profile_sum(m: usize) -> usize {
    m * m / 2
}

const ATTEMPTS: usize = 10_000;

/// Seeded random valid profile with the requested sum.
///
/// Fills from all-ones by incrementing random growable sectors (restarting
/// when stuck), then mixes with random validity-preserving unit transfers.
/// Same `(m, target_sum, seed)` always yields the same profile.
pub fn random_ring_profile(m: usize, target_sum: usize, seed: u64) -> Result<RingProfile> {
    if m < 4 {
        return Err(Error::InfeasibleSpec(format!(
            "m must be at least 4, got {m}"
        )));
    }
    if target_sum < m || target_sum > max_profile_sum(m) {
        return Err(Error::InfeasibleSpec(format!(
            "sum {target_sum} outside [{m}, {}] for m = {m}",
            max_profile_sum(m)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let Some(mut sizes) = greedy_fill(m, target_sum, &mut rng) else {
            continue;
        };
        for _ in 0..8 * m {
            let from = rng.gen_range(0..m);
            let to = rng.gen_range(0..m);
            if from == to || sizes[from] == 1 {
                continue;
            }
            sizes[from] -= 1;
            sizes[to] += 1;
            if !pairs_ok(&sizes) {
                sizes[from] += 1;
                sizes[to] -= 1;
            }
        }
        return RingProfile::new(sizes);
    }
    Err(Error::InfeasibleSpec(format!(
        "no profile with sum {target_sum} found for m = {m} after {ATTEMPTS} attempts"
    )))
}

fn pairs_ok(sizes: &[usize]) -> bool {
    let m = sizes.len();
    (0..m).all(|i| sizes[i] + sizes[(i + 1) % m] <= m)
}

fn greedy_fill(m: usize, target: usize, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    let mut sizes = vec![1; m];
    for _ in m..target {
        let growable: Vec<usize> = (0..m)
            .filter(|&i| sizes[(i + m - 1) % m] + sizes[i] < m && sizes[i] + sizes[(i + 1) % m] < m)
            .collect();
        if growable.is_empty() {
            return None;
        }
        sizes[growable[rng.gen_range(0..growable.len())]] += 1;
    }
    Some(sizes)
}

//! Fixed inputs shared by the benchmarks.

use cliquehole::{
    hole_from_profile, random_ring_profile, CliqueHole, GeneratorSpec, Ring, RingProfile,
};

/// The seven-sector example with deficit 4.
pub fn seven_example() -> RingProfile {
    RingProfile::new(vec![5, 2, 3, 4, 1, 4, 2]).unwrap()
}

/// Seeded extreme profiles for odd `m`.
pub fn extreme_profiles(m: usize, count: u64) -> Vec<RingProfile> {
    (0..count)
        .map(|seed| random_ring_profile(m, m * (m / 2), seed).unwrap())
        .collect()
}

/// A seeded hole with the given intersection sum and no private vertices.
pub fn hole(m: usize, sum: usize, seed: u64) -> CliqueHole {
    let p = random_ring_profile(m, sum, seed).unwrap();
    hole_from_profile(&GeneratorSpec::new(p.sizes().to_vec())).unwrap()
}

pub fn ring(p: &RingProfile) -> Ring {
    Ring::from_profile(p)
}

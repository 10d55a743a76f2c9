//! The colourability decision: an m-clique hole is m-colourable exactly when
//! `sum |Phi_i ∩ Phi_{i+1}| <= m * floor(m/2)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{extract_ring, CliqueHole, Ring, RingProfile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub m: usize,
    pub n: usize,
    pub intersection_sum: usize,
    pub bound: usize,
    pub colorable: bool,
    /// `bound - intersection_sum`; zero on extreme rings, negative when refused.
    pub slack: i64,
}

impl Verdict {
    pub fn is_extreme(&self) -> bool {
        self.slack == 0
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.colorable {
            write!(
                f,
                "colorable: sum {} ≤ bound {}",
                self.intersection_sum, self.bound
            )
        } else {
            write!(
                f,
                "not colorable: {} > {}",
                self.intersection_sum, self.bound
            )
        }
    }
}

/// `m * floor(m/2)`.
pub fn intersection_bound(m: usize) -> Result<usize> {
    if m < 4 {
        return Err(Error::Domain(format!("m must be at least 4, got {m}")));
    }
    Ok(m * (m / 2))
}

pub fn decide_profile(profile: &RingProfile) -> Verdict {
    let m = profile.m();
    let n = m / 2;
    let sum = profile.sum();
    let bound = m * n;
    Verdict {
        m,
        n,
        intersection_sum: sum,
        bound,
        colorable: sum <= bound,
        slack: bound as i64 - sum as i64,
    }
}

pub fn decide_ring(ring: &Ring) -> Verdict {
    decide_profile(&ring.profile())
}

pub fn decide_hole(hole: &CliqueHole) -> Result<Verdict> {
    Ok(decide_ring(&extract_ring(hole)?))
}

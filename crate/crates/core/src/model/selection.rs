use std::fmt;

use serde::{Deserialize, Serialize};

/// Sectors touched by the family `Π_i` (0-based): `i, i+2, ..., i+2(n-1)`
/// modulo `m`.
pub fn family_shape(m: usize, family: usize) -> Vec<usize> {
    let n = m / 2;
    (0..n).map(|k| (family + 2 * k) % m).collect()
}

/// Identifies the family `Π_i` a maximum independent set belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyIndex {
    pub m: usize,
    /// 0-based family index.
    pub family: usize,
}

impl FamilyIndex {
    pub fn shape(&self) -> Vec<usize> {
        family_shape(self.m, self.family)
    }
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape: Vec<String> = self.shape().iter().map(|s| (s + 1).to_string()).collect();
        write!(f, "Π{} {{{}}}", self.family + 1, shape.join(","))
    }
}

/// Number of chosen maximum independent sets per family. Signed because the
/// balancing loop can pass through negative entries between iterations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SelectionCounts {
    counts: Vec<i64>,
}

impl SelectionCounts {
    pub fn new(counts: Vec<i64>) -> Self {
        Self { counts }
    }

    /// `s_i = 1` for every family: the selection of the balanced ring.
    pub fn balanced(m: usize) -> Self {
        Self::new(vec![1; m])
    }

    pub fn m(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn total(&self) -> i64 {
        self.counts.iter().sum()
    }

    pub fn is_non_negative(&self) -> bool {
        self.counts.iter().all(|&c| c >= 0)
    }

    pub(crate) fn bump(&mut self, family: usize, delta: i64) {
        let m = self.m();
        self.counts[family % m] += delta;
    }

    /// Entry `j` counts how many selected sets demand a vertex of sector `j`:
    /// `sum_{k<n} s_{j-2k}`.
    pub fn coverage_sums(&self) -> Vec<i64> {
        let m = self.m();
        let n = m / 2;
        (0..m)
            .map(|j| (0..n).map(|k| self.counts[(j + m * n - 2 * k) % m]).sum())
            .collect()
    }
}

impl fmt::Display for SelectionCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Free-function form of [`SelectionCounts::coverage_sums`].
pub fn coverage_sums(s: &SelectionCounts) -> Vec<i64> {
    s.coverage_sums()
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cardinality vector `(|A_1|, ..., |A_m|)` of a ring.
///
/// Invariants: `m >= 4`, every entry is at least 1, and every cyclic pair sum
/// `a_i + a_{i+1}` is at most `m`. The sum is not constrained here; callers
/// decide whether they need the extreme case.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct RingProfile {
    sizes: Vec<usize>,
}

impl RingProfile {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if let Some(reason) = profile_defect(&sizes) {
            return Err(Error::InvalidProfile(reason));
        }
        Ok(Self { sizes })
    }

    pub fn m(&self) -> usize {
        self.sizes.len()
    }

    /// Balanced sector size, `floor(m / 2)`.
    pub fn n(&self) -> usize {
        self.m() / 2
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Entry `i` (0-based, wrapping in both directions via `isize`).
    pub fn get(&self, i: isize) -> usize {
        let m = self.m() as isize;
        self.sizes[i.rem_euclid(m) as usize]
    }

    pub fn sum(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn bound(&self) -> usize {
        self.m() * self.n()
    }

    pub fn is_extreme(&self) -> bool {
        self.sum() == self.bound()
    }

    pub fn is_balanced(&self) -> bool {
        let n = self.n();
        self.sizes.iter().all(|&a| a == n)
    }

    /// 0-based indices of sectors below the balanced size.
    pub fn deficit_set(&self) -> Vec<usize> {
        let n = self.n();
        (0..self.m()).filter(|&i| self.sizes[i] < n).collect()
    }

    /// Total deficit `sum over deficit sectors of (n - a_i)`.
    pub fn deficit(&self) -> usize {
        let n = self.n();
        self.sizes.iter().filter(|&&a| a < n).map(|&a| n - a).sum()
    }

    /// Whether sector `i` is a legal receiver: below balance and with
    /// `a_{i-1} + a_i <= 2n`.
    pub fn is_witness(&self, i: usize) -> bool {
        let n = self.n();
        self.sizes[i] < n && self.get(i as isize - 1) + self.sizes[i] <= 2 * n
    }

    /// Smallest 0-based `i` with `a_i < n` and `a_{i-1} + a_i <= 2n`, or `None`
    /// when balanced.
    ///
    /// Such an index exists for every unbalanced profile whose sum is at most
    /// `m * n`; finding none there is reported as an internal invariant
    /// violation. Over-bound profiles are rejected up front.
    pub fn deficit_witness(&self) -> Result<Option<usize>> {
        if self.sum() > self.bound() {
            return Err(Error::Domain(format!(
                "deficit witness needs sum <= {}, got {}",
                self.bound(),
                self.sum()
            )));
        }
        if self.is_balanced() {
            return Ok(None);
        }
        match (0..self.m()).find(|&i| self.is_witness(i)) {
            Some(i) => Ok(Some(i)),
            None => Err(Error::InternalInvariant(format!(
                "unbalanced profile {self} has no deficit witness"
            ))),
        }
    }

    /// Moves one unit of cardinality from `mv.from` to `mv.to`.
    pub fn apply_move(&self, mv: &TransformationMove) -> Result<RingProfile> {
        let m = self.m();
        let reject = |reason: String| Error::InvalidMove {
            from: mv.from + 1,
            to: mv.to + 1,
            reason,
        };
        if mv.from >= m || mv.to >= m {
            return Err(reject(format!("index out of range for m = {m}")));
        }
        if mv.from == mv.to {
            return Err(reject("source equals target".into()));
        }
        let mut sizes = self.sizes.clone();
        if sizes[mv.from] == 0 {
            return Err(reject("empty source".into()));
        }
        sizes[mv.from] -= 1;
        sizes[mv.to] += 1;
        match profile_defect(&sizes) {
            Some(reason) => Err(reject(reason)),
            None => Ok(Self { sizes }),
        }
    }
}

fn profile_defect(sizes: &[usize]) -> Option<String> {
    let m = sizes.len();
    if m < 4 {
        return Some(format!("m < 4 (m = {m})"));
    }
    if let Some(i) = sizes.iter().position(|&a| a == 0) {
        return Some(format!("sector {} is empty", i + 1));
    }
    (0..m)
        .find(|&i| sizes[i] + sizes[(i + 1) % m] > m)
        .map(|i| {
            format!(
                "pair ({},{}) sums to {} > {m}",
                i + 1,
                (i + 1) % m + 1,
                sizes[i] + sizes[(i + 1) % m]
            )
        })
}

impl TryFrom<Vec<usize>> for RingProfile {
    type Error = Error;

    fn try_from(sizes: Vec<usize>) -> Result<Self> {
        Self::new(sizes)
    }
}

impl From<RingProfile> for Vec<usize> {
    fn from(p: RingProfile) -> Self {
        p.sizes
    }
}

impl fmt::Display for RingProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Direction a moved vertex travels around the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// Towards lower indices (`j, j-1, ..., i`), as in the balancing loop.
    Descending,
    Ascending,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Self::Descending => Self::Ascending,
            Self::Ascending => Self::Descending,
        }
    }
}

/// Moving one vertex from sector `from` to sector `to` (0-based). A move
/// between non-adjacent sectors stands for the chain of single adjacent
/// transformations along `direction`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransformationMove {
    pub from: usize,
    pub to: usize,
    pub direction: Direction,
}

impl TransformationMove {
    pub fn new(from: usize, to: usize, direction: Direction) -> Self {
        Self {
            from,
            to,
            direction,
        }
    }

    pub fn descending(from: usize, to: usize) -> Self {
        Self::new(from, to, Direction::Descending)
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.to, self.from, self.direction.reversed())
    }

    /// Decomposes the move into single transformations between adjacent
    /// sectors, as `(from, to)` pairs.
    pub fn single_steps(&self, m: usize) -> Vec<(usize, usize)> {
        let mut steps = Vec::new();
        let mut at = self.from;
        while at != self.to {
            let next = match self.direction {
                Direction::Descending => (at + m - 1) % m,
                Direction::Ascending => (at + 1) % m,
            };
            steps.push((at, next));
            at = next;
        }
        steps
    }
}

impl fmt::Display for TransformationMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from + 1, self.to + 1)
    }
}

/// Inverse of a move; applying a move then its inverse is the identity.
pub fn invert_move(mv: &TransformationMove) -> TransformationMove {
    mv.inverse()
}

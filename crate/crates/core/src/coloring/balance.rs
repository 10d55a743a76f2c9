use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{RingProfile, SelectionCounts, TransformationMove};

/// How the receiving sector `i` is chosen among the legal candidates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Picker {
    /// Smallest qualifying index.
    #[default]
    SmallestIndex,
    /// Explicit 0-based indices consumed one per iteration. Each must be a
    /// legal candidate at its iteration.
    Scripted(Vec<usize>),
}

impl Picker {
    /// Builds a scripted picker from 1-based indices.
    pub fn scripted_one_based(seq: &[usize]) -> Result<Self> {
        seq.iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::Domain("pick indices are 1-based".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::Scripted)
    }

    fn pick(&self, iteration: usize, profile: &RingProfile, candidates: &[usize]) -> Result<usize> {
        match self {
            Self::SmallestIndex => candidates.first().copied().ok_or_else(|| {
                Error::InternalInvariant(format!(
                    "no legal receiver in unbalanced profile {profile}"
                ))
            }),
            Self::Scripted(seq) => {
                let &i = seq
                    .get(iteration)
                    .ok_or(Error::ScriptExhausted(iteration + 1))?;
                if candidates.contains(&i) {
                    Ok(i)
                } else {
                    Err(Error::InvalidPick {
                        iteration: iteration + 1,
                        index: i + 1,
                        reason: format!(
                            "not a legal receiver in {profile} (legal: {:?})",
                            candidates.iter().map(|c| c + 1).collect::<Vec<_>>()
                        ),
                    })
                }
            }
        }
    }
}

/// One column of the trace table: the state after `iteration` iterations
/// and the pick made from that state (absent in the final column).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub iteration: usize,
    pub profile: Vec<usize>,
    pub counts: Vec<i64>,
    /// 0-based sectors below balance.
    pub deficit_set: Vec<usize>,
    pub pick: Option<(usize, usize)>,
}

/// A selection count that dipped below zero between iterations. Final
/// counts are always non-negative; these are reported, not fatal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeCount {
    pub iteration: usize,
    pub family: usize,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancingTrace {
    pub initial: RingProfile,
    pub records: Vec<TraceRecord>,
    pub final_counts: SelectionCounts,
    pub moves: Vec<TransformationMove>,
    pub negative_transients: Vec<NegativeCount>,
}

impl BalancingTrace {
    pub fn iterations(&self) -> usize {
        self.moves.len()
    }
}

/// Rebalances an odd extreme profile, tracking how many maximum independent
/// sets each family contributes.
///
/// Starts from `s_i = 1`. Each iteration picks a receiver `i` (below balance,
/// with `a_{i-1} + a_i <= 2n`), takes the first cyclic successor `j` of `i`
/// with `a_j > n`, moves one unit from `A_j` to `A_i`, and shifts selection
/// from families `j+1, j+2` to `i+1, i+2`. Increments are applied before
/// decrements. Runs for exactly the initial total deficit.
pub fn balance_and_count(profile: &RingProfile, picker: &Picker) -> Result<BalancingTrace> {
    let m = profile.m();
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd(m));
    }
    if !profile.is_extreme() {
        return Err(Error::NotExtreme {
            sum: profile.sum(),
            bound: profile.bound(),
        });
    }
    let n = profile.n();
    let initial_deficit = profile.deficit();
    let mut sizes = profile.sizes().to_vec();
    let mut current = profile.clone();
    let mut counts = SelectionCounts::balanced(m);
    let mut records = Vec::new();
    let mut moves = Vec::new();
    let mut negative_transients = Vec::new();

    loop {
        let iteration = moves.len();
        let deficit_set = current.deficit_set();
        if deficit_set.is_empty() {
            records.push(TraceRecord {
                iteration,
                profile: sizes.clone(),
                counts: counts.counts().to_vec(),
                deficit_set,
                pick: None,
            });
            break;
        }
        if iteration >= initial_deficit {
            return Err(Error::InternalInvariant(format!(
                "still unbalanced after {iteration} iterations (initial deficit {initial_deficit})"
            )));
        }
        let candidates: Vec<usize> = deficit_set
            .iter()
            .copied()
            .filter(|&i| current.is_witness(i))
            .collect();
        let i = picker.pick(iteration, &current, &candidates)?;
        let j = (1..m)
            .map(|d| (i + d) % m)
            .find(|&j| sizes[j] > n)
            .ok_or_else(|| {
                Error::InternalInvariant(format!("no donor after sector {} in {current}", i + 1))
            })?;
        records.push(TraceRecord {
            iteration,
            profile: sizes.clone(),
            counts: counts.counts().to_vec(),
            deficit_set,
            pick: Some((i, j)),
        });

        counts.bump(i + 2, 1);
        counts.bump(i + 1, 1);
        counts.bump(j + 2, -1);
        counts.bump(j + 1, -1);
        let mv = TransformationMove::descending(j, i);
        sizes[j] -= 1;
        sizes[i] += 1;
        let before = current.deficit();
        current = RingProfile::new(sizes.clone()).map_err(|e| {
            Error::InternalInvariant(format!("move {mv} left the valid profiles: {e}"))
        })?;
        moves.push(mv);

        if current.deficit() + 1 != before {
            return Err(Error::InternalInvariant(format!(
                "deficit went from {before} to {} at iteration {}",
                current.deficit(),
                iteration + 1
            )));
        }
        if counts.total() != m as i64 {
            return Err(Error::InternalInvariant(format!(
                "selection total {} != {m} at iteration {}",
                counts.total(),
                iteration + 1
            )));
        }
        for (family, &value) in counts.counts().iter().enumerate() {
            if value < 0 {
                negative_transients.push(NegativeCount {
                    iteration: iteration + 1,
                    family,
                    value,
                });
            }
        }
    }

    if !counts.is_non_negative() {
        return Err(Error::InternalInvariant(format!(
            "final selection counts {counts} have a negative entry"
        )));
    }
    Ok(BalancingTrace {
        initial: profile.clone(),
        records,
        final_counts: counts,
        moves,
        negative_transients,
    })
}

use thiserror::Error;

use crate::colorability::Verdict;
use crate::model::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

/// Why an odd ring could not be coloured by either the balancing route or the
/// exact-search fallback.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnresolvedReason {
    /// Padding got stuck and the ring is larger than the exact-search guard.
    SearchTooLarge { vertices: usize, guard: usize },
    /// Padding got stuck and exact search proved no m-colouring exists.
    SearchFoundNoColoring,
}

impl std::fmt::Display for UnresolvedReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::SearchTooLarge { vertices, guard } => write!(
                f,
                "exact search skipped: {vertices} vertices exceeds guard {guard}"
            ),
            Self::SearchFoundNoColoring => write!(f, "exact search found no m-coloring"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid clique hole: {0}")]
    InvalidHole(ValidationReport),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid ring profile: {0}")]
    InvalidProfile(String),

    #[error("invalid move {from}->{to}: {reason}")]
    InvalidMove {
        from: usize,
        to: usize,
        reason: String,
    },

    #[error("operation requires odd m, got m={0}")]
    NotOdd(usize),

    #[error("operation requires even m, got m={0}")]
    NotEven(usize),

    #[error("profile is not extreme: sum {sum} != bound {bound}")]
    NotExtreme { sum: usize, bound: usize },

    #[error("not colorable: {} > {}", .0.intersection_sum, .0.bound)]
    NotColorable(Verdict),

    #[error("selection counts do not cover the ring: {0}")]
    CoverageMismatch(String),

    #[error("padding stuck at profile {profile:?} (sum {sum} < bound {bound})")]
    PaddingStuck {
        profile: Vec<usize>,
        sum: usize,
        bound: usize,
    },

    #[error("unresolved odd ring {profile:?}: {reason}")]
    Unresolved {
        profile: Vec<usize>,
        stuck_at: Vec<usize>,
        reason: UnresolvedReason,
    },

    #[error("scripted pick {index} rejected at iteration {iteration}: {reason}")]
    InvalidPick {
        iteration: usize,
        index: usize,
        reason: String,
    },

    #[error("pick script exhausted at iteration {0}")]
    ScriptExhausted(usize),

    #[error("graph has {vertices} vertices, exceeding exact-search guard {guard}")]
    TooLarge { vertices: usize, guard: usize },

    #[error("set is not a maximum independent set: {0}")]
    NotMaximumIndependent(String),

    #[error("independent set matches several families: {0:?}")]
    ClassificationAmbiguous(Vec<usize>),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

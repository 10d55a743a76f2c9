use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::VertexId;

/// Cyclically consecutive indices (0-based) under wrap-around modulo `m`.
pub(crate) fn consecutive(i: usize, j: usize, m: usize) -> bool {
    i != j && ((i + 1) % m == j || (j + 1) % m == i)
}

/// A sequence of `m` cliques whose clique graph is meant to be a hole on `m`
/// vertices. Construction does not validate; call [`CliqueHole::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueHole {
    cliques: Vec<BTreeSet<VertexId>>,
}

impl CliqueHole {
    pub fn new(cliques: Vec<BTreeSet<VertexId>>) -> Self {
        Self { cliques }
    }

    /// Convenience constructor from string slices.
    pub fn from_lists<S: AsRef<str>>(cliques: &[Vec<S>]) -> Self {
        Self::new(
            cliques
                .iter()
                .map(|c| c.iter().map(|v| VertexId::new(v.as_ref())).collect())
                .collect(),
        )
    }

    pub fn m(&self) -> usize {
        self.cliques.len()
    }

    pub fn cliques(&self) -> &[BTreeSet<VertexId>] {
        &self.cliques
    }

    /// Clique `i` (0-based, wrapping).
    pub fn clique(&self, i: usize) -> &BTreeSet<VertexId> {
        &self.cliques[i % self.m()]
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.cliques.iter().flatten().cloned().collect()
    }

    /// Vertices of clique `i` shared with neither neighbouring clique.
    pub fn private_vertices(&self, i: usize) -> Vec<&VertexId> {
        let m = self.m();
        let prev = &self.cliques[(i + m - 1) % m];
        let next = &self.cliques[(i + 1) % m];
        self.cliques[i % m]
            .iter()
            .filter(|v| !prev.contains(*v) && !next.contains(*v))
            .collect()
    }

    /// Lists every violated structural invariant. Never aborts.
    pub fn validate(&self) -> ValidationReport {
        let m = self.m();
        let mut violations = Vec::new();
        if m < 4 {
            violations.push(Violation::TooFewCliques { m });
        }
        for (i, clique) in self.cliques.iter().enumerate() {
            if clique.is_empty() {
                violations.push(Violation::EmptyClique { index: i });
            }
            if clique.len() > m {
                violations.push(Violation::CliqueTooLarge {
                    index: i,
                    size: clique.len(),
                    m,
                });
            }
            for v in clique {
                if v.as_str().is_empty() {
                    violations.push(Violation::EmptyVertexId { clique: i });
                } else if v.is_virtual() {
                    violations.push(Violation::ReservedVertexId { vertex: v.clone() });
                }
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if self.cliques[i] == self.cliques[j] {
                    violations.push(Violation::DuplicateClique {
                        first: i,
                        second: j,
                    });
                }
                let meets = !self.cliques[i].is_disjoint(&self.cliques[j]);
                match (meets, consecutive(i, j, m)) {
                    (true, false) => violations.push(Violation::NonConsecutiveIntersection {
                        first: i,
                        second: j,
                    }),
                    (false, true) => violations.push(Violation::MissingConsecutiveIntersection {
                        first: i,
                        second: j,
                    }),
                    _ => {}
                }
            }
        }

        // membership[v] = cliques containing v; u ~ v iff memberships meet
        let mut membership: BTreeMap<&VertexId, BTreeSet<usize>> = BTreeMap::new();
        for (i, clique) in self.cliques.iter().enumerate() {
            for v in clique {
                membership.entry(v).or_default().insert(i);
            }
        }
        for (i, clique) in self.cliques.iter().enumerate() {
            if clique.is_empty() {
                continue;
            }
            let witness = membership.iter().find(|(w, wm)| {
                !clique.contains(**w) && clique.iter().all(|v| !membership[v].is_disjoint(wm))
            });
            if let Some((w, _)) = witness {
                violations.push(Violation::NonMaximalClique {
                    index: i,
                    witness: (*w).clone(),
                });
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}

/// One violated invariant. Indices are stored 0-based and displayed 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooFewCliques { m: usize },
    EmptyClique { index: usize },
    EmptyVertexId { clique: usize },
    ReservedVertexId { vertex: VertexId },
    CliqueTooLarge { index: usize, size: usize, m: usize },
    DuplicateClique { first: usize, second: usize },
    NonConsecutiveIntersection { first: usize, second: usize },
    MissingConsecutiveIntersection { first: usize, second: usize },
    NonMaximalClique { index: usize, witness: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooFewCliques { m } => write!(f, "m < 4 (m = {m})"),
            Self::EmptyClique { index } => write!(f, "empty clique {}", index + 1),
            Self::EmptyVertexId { clique } => write!(f, "empty vertex id in clique {}", clique + 1),
            Self::ReservedVertexId { vertex } => write!(f, "reserved vertex id {vertex}"),
            Self::CliqueTooLarge { index, size, m } => {
                write!(f, "clique {} has size {size} > m = {m}", index + 1)
            }
            Self::DuplicateClique { first, second } => {
                write!(f, "duplicate clique ({},{})", first + 1, second + 1)
            }
            Self::NonConsecutiveIntersection { first, second } => {
                write!(
                    f,
                    "non-consecutive intersection ({},{})",
                    first + 1,
                    second + 1
                )
            }
            Self::MissingConsecutiveIntersection { first, second } => {
                write!(
                    f,
                    "consecutive cliques ({},{}) do not intersect",
                    first + 1,
                    second + 1
                )
            }
            Self::NonMaximalClique { index, witness } => {
                write!(
                    f,
                    "clique {} is not maximal (extendable by {witness})",
                    index + 1
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

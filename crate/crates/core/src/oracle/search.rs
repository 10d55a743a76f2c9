use std::collections::BTreeMap;

use super::AdjacencyGraph;
use crate::error::{Error, Result};
use crate::model::Coloring;

/// Default vertex-count guard for exact search.
pub const DEFAULT_MAX_VERTICES: usize = 26;

// colour sets are u128 masks
const HARD_CAP: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_vertices: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl SearchLimits {
    fn check(&self, g: &AdjacencyGraph) -> Result<()> {
        let guard = self.max_vertices.min(HARD_CAP);
        if g.vertex_count() > guard {
            return Err(Error::TooLarge {
                vertices: g.vertex_count(),
                guard,
            });
        }
        Ok(())
    }
}

/// Exact k-colourability. Returns a witness colouring when one exists.
///
/// Vertices with identical closed neighbourhoods are interchangeable, so the
/// search runs over these twin classes and assigns each a set of colours.
/// The first largest generating clique is pinned to colours `0..q`, and
/// colours never used so far are introduced lowest first. The result is
/// deterministic for a given graph.
pub fn is_k_colorable(
    g: &AdjacencyGraph,
    k: usize,
    limits: &SearchLimits,
) -> Result<Option<Coloring>> {
    limits.check(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Coloring::new()));
    }
    // k beyond n never helps
    let k = k.min(n);
    if k == 0 {
        return Ok(None);
    }
    let mut search = ClassSearch::new(g, k);
    if !search.pin_first_clique(g) {
        return Ok(None);
    }
    if !search.solve(0) {
        return Ok(None);
    }
    Ok(Some(search.witness(g)))
}

/// Least k with a proper k-colouring, together with a witness.
pub fn chromatic_number(g: &AdjacencyGraph, limits: &SearchLimits) -> Result<(usize, Coloring)> {
    limits.check(g)?;
    let mut k = g.largest_clique_size();
    loop {
        if let Some(c) = is_k_colorable(g, k, limits)? {
            return Ok((k, c));
        }
        k += 1;
    }
}

struct ClassSearch {
    /// Vertex indices per class, ascending.
    members: Vec<Vec<usize>>,
    adjacent: Vec<Vec<usize>>,
    order: Vec<usize>,
    assigned: Vec<Option<u128>>,
    used: u128,
    full: u128,
    /// Number of leading entries of `order` fixed by clique pinning.
    pinned: usize,
}

impl ClassSearch {
    fn new(g: &AdjacencyGraph, k: usize) -> Self {
        let n = g.vertex_count();
        let mut by_nbhd: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let mut closed: Vec<usize> = g.neighbors(v).iter().copied().collect();
            closed.push(v);
            closed.sort_unstable();
            by_nbhd.entry(closed).or_default().push(v);
        }
        let mut members: Vec<Vec<usize>> = by_nbhd.into_values().collect();
        members.sort_by_key(|c| c[0]);

        let mut class_of = vec![0; n];
        for (c, vs) in members.iter().enumerate() {
            for &v in vs {
                class_of[v] = c;
            }
        }
        let adjacent: Vec<Vec<usize>> = members
            .iter()
            .enumerate()
            .map(|(c, vs)| {
                let mut adj: Vec<usize> = g
                    .neighbors(vs[0])
                    .iter()
                    .map(|&u| class_of[u])
                    .filter(|&d| d != c)
                    .collect();
                adj.sort_unstable();
                adj.dedup();
                adj
            })
            .collect();

        let mut order: Vec<usize> = (0..members.len()).collect();
        order.sort_by_key(|&c| (std::cmp::Reverse(g.degree(members[c][0])), members[c][0]));

        let classes = members.len();
        Self {
            members,
            adjacent,
            order,
            assigned: vec![None; classes],
            used: 0,
            full: if k >= 128 {
                u128::MAX
            } else {
                (1u128 << k) - 1
            },
            pinned: 0,
        }
    }

    /// Pins the first largest generating clique to colours `0..q`. Returns
    /// false if the clique alone needs more than k colours.
    fn pin_first_clique(&mut self, g: &AdjacencyGraph) -> bool {
        let Some(clique) = g.generating_cliques().iter().rev().max_by_key(|c| c.len()) else {
            return true;
        };
        let q = clique.len() as u32;
        if q > self.full.count_ones() {
            return false;
        }
        let in_clique: Vec<usize> = (0..self.members.len())
            .filter(|&c| {
                self.members[c]
                    .iter()
                    .any(|v| clique.binary_search(v).is_ok())
            })
            .collect();
        // only sound when the clique is a union of whole twin classes
        if in_clique.iter().any(|&c| {
            !self.members[c]
                .iter()
                .all(|v| clique.binary_search(v).is_ok())
        }) {
            return true;
        }
        let mut next = 0u32;
        for &c in &in_clique {
            let t = self.members[c].len() as u32;
            let mask = ((1u128 << t) - 1) << next;
            self.assigned[c] = Some(mask);
            self.used |= mask;
            next += t;
        }
        self.order.retain(|c| !in_clique.contains(c));
        self.pinned = in_clique.len();
        let mut order = in_clique;
        order.append(&mut self.order);
        self.order = order;
        true
    }

    fn forbidden(&self, c: usize) -> u128 {
        self.adjacent[c]
            .iter()
            .filter_map(|&d| self.assigned[d])
            .fold(0, |acc, m| acc | m)
    }

    fn neighbours_still_fit(&self, c: usize) -> bool {
        self.adjacent[c].iter().all(|&d| {
            self.assigned[d].is_some()
                || (self.full & !self.forbidden(d)).count_ones() as usize >= self.members[d].len()
        })
    }

    fn solve(&mut self, pos: usize) -> bool {
        let pos = pos.max(self.pinned);
        if pos == self.order.len() {
            return true;
        }
        let c = self.order[pos];
        let t = self.members[c].len();
        let forbidden = self.forbidden(c);
        let reusable = self.used & !forbidden & self.full;
        let unused = self.full & !self.used;
        let reusable_bits = bits(reusable);
        let unused_bits = bits(unused);
        let saved_used = self.used;
        for fresh in 0..=t.min(unused_bits.len()) {
            let reuse = t - fresh;
            if reusable_bits.len() < reuse {
                continue;
            }
            let fresh_mask = unused_bits[..fresh]
                .iter()
                .fold(0u128, |m, &b| m | (1 << b));
            let mut combo: Vec<usize> = (0..reuse).collect();
            loop {
                let mask = combo
                    .iter()
                    .fold(fresh_mask, |m, &i| m | (1u128 << reusable_bits[i]));
                self.assigned[c] = Some(mask);
                self.used = saved_used | fresh_mask;
                if self.neighbours_still_fit(c) && self.solve(pos + 1) {
                    return true;
                }
                if !next_combination(&mut combo, reusable_bits.len()) {
                    break;
                }
            }
        }
        self.assigned[c] = None;
        self.used = saved_used;
        false
    }

    fn witness(&self, g: &AdjacencyGraph) -> Coloring {
        let mut coloring = Coloring::new();
        for (c, vs) in self.members.iter().enumerate() {
            let mask = self.assigned[c].expect("solved search assigns every class");
            for (&v, color) in vs.iter().zip(bits(mask)) {
                coloring.insert(g.vertices()[v].clone(), color as usize);
            }
        }
        coloring
    }
}

fn bits(mask: u128) -> Vec<u32> {
    (0..128).filter(|b| mask & (1u128 << b) != 0).collect()
}

/// Advances `combo` (strictly increasing indices below `n`) to the next
/// combination in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let t = combo.len();
    for i in (0..t).rev() {
        if combo[i] < n - t + i {
            combo[i] += 1;
            for j in i + 1..t {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

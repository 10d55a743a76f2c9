use std::collections::BTreeSet;

use super::SearchLimits;
use crate::error::{Error, Result};
use crate::model::{FamilyIndex, Ring, VertexId};

/// All independent sets of size `floor(m/2)` of an odd ring, in canonical
/// order. Picks at most one vertex per sector and never two adjacent sectors.
pub fn enumerate_max_independent_sets(
    ring: &Ring,
    limits: &SearchLimits,
) -> Result<Vec<BTreeSet<VertexId>>> {
    let m = ring.m();
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd(m));
    }
    if ring.vertex_count() > limits.max_vertices {
        return Err(Error::TooLarge {
            vertices: ring.vertex_count(),
            guard: limits.max_vertices,
        });
    }
    let n = m / 2;
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, &VertexId)> = Vec::with_capacity(n);
    walk(ring, n, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn walk<'a>(
    ring: &'a Ring,
    n: usize,
    sector: usize,
    chosen: &mut Vec<(usize, &'a VertexId)>,
    out: &mut Vec<BTreeSet<VertexId>>,
) {
    let m = ring.m();
    if chosen.len() == n {
        out.push(chosen.iter().map(|(_, v)| (*v).clone()).collect());
        return;
    }
    // not enough sectors left to reach n even taking every other one
    if sector >= m || chosen.len() + (m - sector).div_ceil(2) < n {
        return;
    }
    let blocked = chosen.last().is_some_and(|&(s, _)| s + 1 == sector)
        || (sector == m - 1 && chosen.first().is_some_and(|&(s, _)| s == 0));
    if !blocked {
        for v in ring.sector(sector) {
            chosen.push((sector, v));
            walk(ring, n, sector + 1, chosen, out);
            chosen.pop();
        }
    }
    walk(ring, n, sector + 1, chosen, out);
}

/// The unique family `Π_i` containing a maximum independent set: the set
/// misses sectors `i-2` and `i-1` and has one vertex in each of
/// `i, i+2, ..., i+2(n-1)`.
pub fn classify_mis(ring: &Ring, set: &BTreeSet<VertexId>) -> Result<FamilyIndex> {
    let m = ring.m();
    if m.is_multiple_of(2) {
        return Err(Error::NotOdd(m));
    }
    let n = m / 2;
    if set.len() != n {
        return Err(Error::NotMaximumIndependent(format!(
            "size {} != {n}",
            set.len()
        )));
    }
    let mut hits = vec![0usize; m];
    for v in set {
        let s = ring
            .sector_of(v)
            .ok_or_else(|| Error::NotMaximumIndependent(format!("{v} is not a ring vertex")))?;
        hits[s] += 1;
    }
    for a in 0..m {
        if hits[a] > 1 {
            return Err(Error::NotMaximumIndependent(format!(
                "two vertices of sector {}",
                a + 1
            )));
        }
        let b = (a + 1) % m;
        if hits[a] > 0 && hits[b] > 0 {
            return Err(Error::NotMaximumIndependent(format!(
                "adjacent sectors {} and {}",
                a + 1,
                b + 1
            )));
        }
    }
    let matches: Vec<usize> = (0..m)
        .filter(|&i| {
            hits[(i + m - 2) % m] == 0
                && hits[(i + m - 1) % m] == 0
                && (0..n).all(|k| hits[(i + 2 * k) % m] == 1)
        })
        .collect();
    match matches.as_slice() {
        [family] => Ok(FamilyIndex { m, family: *family }),
        [] => Err(Error::NotMaximumIndependent("matches no family".into())),
        _ => Err(Error::ClassificationAmbiguous(
            matches.iter().map(|i| i + 1).collect(),
        )),
    }
}

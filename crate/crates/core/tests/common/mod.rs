#![allow(dead_code)]

use std::collections::BTreeSet;

use cliquehole::oracle::AdjacencyGraph;

/// Every valid profile of length `m`: entries in `1..m`, cyclic pair sums at
/// most `m`.
pub fn all_profiles(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fill(m, &mut cur, &mut out);
    out
}

fn fill(m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == m {
        if cur[m - 1] + cur[0] <= m {
            out.push(cur.clone());
        }
        return;
    }
    for a in 1..m {
        if cur.last().is_some_and(|&p| p + a > m) {
            continue;
        }
        cur.push(a);
        fill(m, cur, out);
        cur.pop();
    }
}

/// Independent sets of exactly `size` vertices, by plain combination search
/// over the adjacency structure.
pub fn independent_sets_of_size(g: &AdjacencyGraph, size: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    combos(g, size, 0, &mut cur, &mut out);
    out
}

fn combos(
    g: &AdjacencyGraph,
    size: usize,
    from: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<BTreeSet<usize>>,
) {
    if cur.len() == size {
        out.push(cur.iter().copied().collect());
        return;
    }
    for v in from..g.vertex_count() {
        if cur.iter().all(|&u| !g.has_edge(u, v)) {
            cur.push(v);
            combos(g, size, v + 1, cur, out);
            cur.pop();
        }
    }
}

/// Largest independent set size, brute force.
pub fn independence_number(g: &AdjacencyGraph) -> usize {
    (0..=g.vertex_count())
        .rev()
        .find(|&k| !independent_sets_of_size(g, k).is_empty())
        .unwrap_or(0)
}

/// Coverage by walking each family's members explicitly: family `f`
/// contributes to sectors `f, f+2, ..., f+2(n-1)`.
pub fn coverage_by_walk(counts: &[i64]) -> Vec<i64> {
    let m = counts.len();
    let n = m / 2;
    let mut cover = vec![0i64; m];
    for (f, &c) in counts.iter().enumerate() {
        let mut at = f;
        for _ in 0..n {
            cover[at] += c;
            at = (at + 2) % m;
        }
    }
    cover
}

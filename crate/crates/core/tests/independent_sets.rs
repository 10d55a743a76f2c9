mod common;

use std::collections::{BTreeMap, BTreeSet};

use cliquehole::model::family_shape;
use cliquehole::oracle::{
    classify_mis, enumerate_max_independent_sets, graph_of_ring, SearchLimits,
};
use cliquehole::{Ring, RingProfile};

fn ring(v: &[usize]) -> Ring {
    Ring::from_profile(&RingProfile::new(v.to_vec()).unwrap())
}

fn wide() -> SearchLimits {
    SearchLimits { max_vertices: 128 }
}

/// Brute-force maximum independent sets, as vertex-name sets.
fn brute_force(r: &Ring) -> BTreeSet<BTreeSet<String>> {
    let g = graph_of_ring(r);
    let alpha = common::independence_number(&g);
    common::independent_sets_of_size(&g, alpha)
        .into_iter()
        .map(|s| {
            s.iter()
                .map(|&v| g.vertices()[v].as_str().to_string())
                .collect()
        })
        .collect()
}

fn names(sets: &[BTreeSet<cliquehole::VertexId>]) -> BTreeSet<BTreeSet<String>> {
    sets.iter()
        .map(|s| s.iter().map(|v| v.as_str().to_string()).collect())
        .collect()
}

#[test]
fn balanced_five_has_twenty() {
    let r = ring(&[2; 5]);
    let sets = enumerate_max_independent_sets(&r, &wide()).unwrap();
    assert_eq!(sets.len(), 20);
    assert_eq!(names(&sets), brute_force(&r));
}

#[test]
fn balanced_seven_has_189() {
    let r = ring(&[3; 7]);
    let sets = enumerate_max_independent_sets(&r, &wide()).unwrap();
    assert_eq!(sets.len(), 7 * 27);
    assert_eq!(names(&sets), brute_force(&r));
}

#[test]
fn families_partition_the_maximum_sets() {
    for profile in [
        vec![2; 5],
        vec![3; 7],
        vec![5, 2, 3, 4, 1, 4, 2],
        vec![1, 3, 2, 2, 2],
    ] {
        let r = ring(&profile);
        let m = r.m();
        let n = m / 2;
        let sets = enumerate_max_independent_sets(&r, &wide()).unwrap();
        let mut per_family: BTreeMap<usize, usize> = BTreeMap::new();
        for set in &sets {
            let fam = classify_mis(&r, set).unwrap();
            // membership checked against the shape directly
            let sectors: BTreeSet<usize> = set.iter().map(|v| r.sector_of(v).unwrap()).collect();
            let shape: BTreeSet<usize> = family_shape(m, fam.family).into_iter().collect();
            assert_eq!(sectors, shape);
            let others = (0..m)
                .filter(|&f| {
                    f != fam.family
                        && family_shape(m, f).into_iter().collect::<BTreeSet<_>>() == sectors
                })
                .count();
            assert_eq!(others, 0, "set in two families");
            *per_family.entry(fam.family).or_insert(0) += 1;
        }
        for f in 0..m {
            let expected: usize = (0..n).map(|k| profile[(f + 2 * k) % m]).product();
            assert_eq!(
                per_family.get(&f).copied().unwrap_or(0),
                expected,
                "{profile:?} family {f}"
            );
        }
        assert_eq!(per_family.values().sum::<usize>(), sets.len());
    }
}

#[test]
fn maximum_set_size_is_half_m() {
    for profile in common::all_profiles(5).into_iter().step_by(3) {
        let r = ring(&profile);
        assert_eq!(common::independence_number(&graph_of_ring(&r)), 2);
    }
}

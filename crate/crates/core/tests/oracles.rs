//! Counting, curvature, centrality and matching code against brute force.

mod support;

use motifph::complex::clique_expand;
use rand::Rng;
use support::*;

#[test]
fn cycle_counts_match_subset_enumeration() {
    for (name, g) in named_graphs() {
        check_cycle_counts(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    let mut rng = rng(1);
    for _ in 0..200 {
        let n = rng.random_range(3..=12);
        let p = rng.random_range(0.15..0.7);
        check_cycle_counts(&random_graph(&mut rng, n, p)).unwrap();
    }
}

#[test]
fn edge_betweenness_matches_path_enumeration() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            check_betweenness(&g).unwrap();
        }
    }
    let mut rng = rng(2);
    for _ in 0..300 {
        let n = rng.random_range(2..=8);
        let p = rng.random_range(0.1..0.8);
        check_betweenness(&random_graph(&mut rng, n, p)).unwrap();
    }
}

#[test]
fn ricci_matches_assignment_oracle() {
    for (name, g) in named_graphs() {
        for e in 0..g.n_edges() {
            check_ricci_edge(&g, e).unwrap_or_else(|err| panic!("{name}: {err}"));
        }
    }
    let mut rng = rng(3);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.random_range(2..=12);
        let p = rng.random_range(0.15..0.6);
        let g = random_graph(&mut rng, n, p);
        if g.n_edges() == 0 {
            continue;
        }
        let e = rng.random_range(0..g.n_edges());
        check_ricci_edge(&g, e).unwrap();
        checked += 1;
    }
}

#[test]
fn assignment_oracle_sanity() {
    assert_eq!(assignment_cost(&[vec![4, 1, 3], vec![2, 0, 5], vec![3, 2, 2]]), 5);
}

#[test]
fn bottleneck_matches_brute_force() {
    let mut rng = rng(4);
    for _ in 0..500 {
        let a = random_points(&mut rng, 6);
        let b = random_points(&mut rng, 6);
        check_bottleneck(&a, &b).unwrap();
    }
}

#[test]
fn graphlet_orbits_match_template_matching() {
    for (name, g) in named_graphs() {
        check_graphlets(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    let mut rng = rng(5);
    for _ in 0..100 {
        let n = rng.random_range(2..=10);
        let p = rng.random_range(0.1..0.8);
        check_graphlets(&random_graph(&mut rng, n, p)).unwrap();
    }
}

#[test]
fn clique_counts_match_subset_enumeration() {
    let mut rng = rng(6);
    for _ in 0..100 {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        for k in 1..=3 {
            let c = clique_expand(&g, &vec![0.0; n], &vec![0.0; g.n_edges()], k);
            assert_eq!(c.count_by_dim(), clique_counts(&g, k + 1), "{:?} k={k}", g.edges());
        }
    }
}

#[test]
fn graph_properties_match_naive_measures() {
    for (name, g) in named_graphs() {
        check_properties(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    for n in 1..=5 {
        for g in all_graphs(n) {
            check_properties(&g).unwrap();
        }
    }
    let mut rng = rng(7);
    for _ in 0..200 {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.05..0.7);
        check_properties(&random_graph(&mut rng, n, p)).unwrap();
    }
}

#[test]
fn oracles_reproduce_known_values() {
    use motifph::graph::named::*;
    assert_eq!(induced_cycles(&cycle(5), 5), vec![1; 5]);
    assert_eq!(induced_cycles(&cycle(4), 4), vec![1; 4]);
    assert_eq!(induced_cycles(&complete(4), 4), vec![0; 6]);
    assert_eq!(induced_cycles(&petersen(), 5), vec![4; 15]);
    let p4 = path(4);
    let b: Vec<i64> = edge_betweenness_by_paths(&p4).iter().map(|r| r.to_integer()).collect();
    assert_eq!(b, vec![3, 4, 3]);
    assert_eq!(graphlet_orbits_naive(&star(3))[0][7], 1);
    assert_eq!(bottleneck_brute(&[(0.0, 2.0)], &[]), 1.0);
    assert_eq!(bottleneck_brute(&[(0.0, f64::INFINITY)], &[]), f64::INFINITY);
    assert_eq!(properties_naive(&cycle(6)).girth, 6);
    assert_eq!(properties_naive(&path(4)).girth, -1);
}

//! The bundled strongly regular corpora, checked with petgraph.

mod support;

use std::path::PathBuf;

use motifph::weighting::{permute_edge_weighting, permute_node_weighting};
use motifph::{compute_weighting, Filtration, FiltrationSpec, Graph, Weighting};
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;

fn corpus(name: &str) -> Vec<Graph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    Graph::read_all(&path).unwrap()
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut h = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.n_nodes()).map(|_| h.add_node(())).collect();
    for &(u, v) in g.edges() {
        h.add_edge(nodes[u], nodes[v], ());
    }
    h
}

fn assert_srg(g: &Graph, n: usize, k: usize, lambda: usize, mu: usize) {
    assert_eq!(g.n_nodes(), n);
    assert!(g.degrees().iter().all(|&d| d == k));
    for u in 0..n {
        for v in u + 1..n {
            let common = g.common_neighbor_count(u, v);
            assert_eq!(common, if g.has_edge(u, v) { lambda } else { mu }, "pair ({u},{v})");
        }
    }
}

fn assert_pairwise_non_isomorphic(graphs: &[Graph]) {
    let pg: Vec<_> = graphs.iter().map(to_petgraph).collect();
    for i in 0..pg.len() {
        for j in i + 1..pg.len() {
            assert!(!is_isomorphic(&pg[i], &pg[j]), "graphs {i} and {j} are isomorphic");
        }
    }
}

#[test]
fn sr16622_is_two_distinct_srgs() {
    let graphs = corpus("sr16622.g6");
    assert_eq!(graphs.len(), 2);
    for g in &graphs {
        assert_srg(g, 16, 6, 2, 2);
    }
    assert_pairwise_non_isomorphic(&graphs);
}

#[test]
fn sr251256_is_fifteen_distinct_srgs() {
    let graphs = corpus("sr251256.g6");
    assert_eq!(graphs.len(), 15);
    for g in &graphs {
        assert_srg(g, 25, 12, 5, 6);
    }
    assert_pairwise_non_isomorphic(&graphs);
}

#[test]
fn named_graphs_are_equivariant_under_fifty_permutations() {
    let mut rng = support::rng(31);
    for (name, g) in support::named_graphs() {
        for _ in 0..50 {
            let perm = support::random_perm(&mut rng, g.n_nodes());
            let h = g.relabel(&perm);
            for f in Filtration::ALL {
                let spec = FiltrationSpec::new(f, 1);
                match (compute_weighting(&g, &spec), compute_weighting(&h, &spec)) {
                    (Weighting::Node(a), Weighting::Node(b)) => {
                        assert_eq!(permute_node_weighting(&a, &perm), b, "{name} {f}")
                    }
                    (Weighting::Edge { edges: a, .. }, Weighting::Edge { edges: b, .. }) => {
                        assert_eq!(permute_edge_weighting(&g, &a, &perm, &h), b, "{name} {f}")
                    }
                    (Weighting::Metric, Weighting::Metric) => {}
                    _ => panic!("{name} {f}: weighting kind changed"),
                }
            }
        }
    }
}

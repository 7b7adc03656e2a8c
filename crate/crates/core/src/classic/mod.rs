//! Comparison filtrations built from classical graph measures.

mod betweenness;
mod graphlet;
mod ricci;

pub use betweenness::{edge_betweenness, edge_betweenness_exact, ExactBetweenness};
pub use graphlet::{graphlet_orbits, graphlet_score, OrbitCounts, OrbitSet, ORBIT_COUNT};
pub use ricci::{lazy_walk, ollivier_ricci, wasserstein1, LazyWalkDistribution};

use num_traits::Zero;

use crate::graph::Graph;
use crate::weighting::{EdgeWeighting, NodeWeighting, Rational};

/// nD: `v ↦ deg(v)`.
pub fn degree_filtration(g: &Graph) -> NodeWeighting<i64> {
    NodeWeighting::new(g.degrees().into_iter().map(|d| d as i64).collect())
}

/// eF: `4 - deg(u) - deg(v) + 3 |N(u) ∩ N(v)|`.
pub fn forman_augmented(g: &Graph) -> EdgeWeighting<i64> {
    EdgeWeighting::new(
        g.edges()
            .iter()
            .map(|&(u, v)| {
                4 - g.degree(u) as i64 - g.degree(v) as i64
                    + 3 * g.common_neighbor_count(u, v) as i64
            })
            .collect(),
    )
}

/// eR: `1 / sqrt(d_u d_v)`. The only weighting without an exact rational
/// form; it is a fixed function of the integer product, hence still
/// label-independent bit for bit.
pub fn randic(g: &Graph) -> EdgeWeighting {
    EdgeWeighting::new(
        g.edges()
            .iter()
            .map(|&(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
            .collect(),
    )
}

/// eH: `2 / (d_u + d_v)`.
pub fn harmonic(g: &Graph) -> EdgeWeighting<Rational> {
    EdgeWeighting::new(
        g.edges()
            .iter()
            .map(|&(u, v)| Rational::new(2, (g.degree(u) + g.degree(v)) as i64))
            .collect(),
    )
}

/// eA: `(d_u + d_v + d_u d_v) / (1 + |N(u) ∩ N(v)|)`.
pub fn repulsion_attraction(g: &Graph) -> EdgeWeighting<Rational> {
    EdgeWeighting::new(
        g.edges()
            .iter()
            .map(|&(u, v)| {
                let (du, dv) = (g.degree(u) as i64, g.degree(v) as i64);
                Rational::new(du + dv + du * dv, 1 + g.common_neighbor_count(u, v) as i64)
            })
            .collect(),
    )
}

/// Triangles through each node.
pub fn node_triangles(g: &Graph) -> Vec<u64> {
    let mut t = vec![0u64; g.n_nodes()];
    for &(u, v) in g.edges() {
        let c = g.common_neighbor_count(u, v) as u64;
        t[u] += c;
        t[v] += c;
    }
    // each triangle at a node is seen through both of its incident edges
    t.iter_mut().for_each(|x| *x /= 2);
    t
}

/// nC: `2T(v) / (d_v (d_v - 1))`, 0 when `d_v <= 1`.
pub fn clustering_coefficient(g: &Graph) -> NodeWeighting<Rational> {
    let tri = node_triangles(g);
    NodeWeighting::new(
        (0..g.n_nodes())
            .map(|v| {
                let d = g.degree(v) as i64;
                if d <= 1 {
                    Rational::zero()
                } else {
                    Rational::new(2 * tri[v] as i64, d * (d - 1))
                }
            })
            .collect(),
    )
}

/// nE: fraction of the total degree of egonet members that stays inside
/// the egonet `{i} ∪ N(i)`; 0 for isolated nodes.
pub fn egonet_persistence(g: &Graph) -> NodeWeighting<Rational> {
    let mut in_ego = vec![false; g.n_nodes()];
    NodeWeighting::new(
        (0..g.n_nodes())
            .map(|i| {
                if g.degree(i) == 0 {
                    return Rational::zero();
                }
                in_ego[i] = true;
                for &j in g.neighbors(i) {
                    in_ego[j] = true;
                }
                let members = std::iter::once(i).chain(g.neighbors(i).iter().copied());
                let (mut internal, mut total) = (0i64, 0i64);
                for j in members {
                    internal += g.neighbors(j).iter().filter(|&&w| in_ego[w]).count() as i64;
                    total += g.degree(j) as i64;
                }
                in_ego[i] = false;
                for &j in g.neighbors(i) {
                    in_ego[j] = false;
                }
                Rational::new(internal, total)
            })
            .collect(),
    )
}

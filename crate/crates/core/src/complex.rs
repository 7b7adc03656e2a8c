//! Filtered simplicial complexes from weighted graphs.
//!
//! Simplices are kept in the filtration order `(value, dim, vertices)`;
//! since every simplex is valued at least as high as its facets, each face
//! precedes all of its cofaces.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use crate::filtration::{NodeRule, Weighting};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub struct Simplex {
    /// Strictly increasing node ids.
    pub vertices: Vec<usize>,
    pub value: f64,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    fn filtration_cmp(&self, other: &Simplex) -> Ordering {
        self.value
            .total_cmp(&other.value)
            .then(self.vertices.len().cmp(&other.vertices.len()))
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedComplex {
    simplices: Vec<Simplex>,
    max_dim: usize,
}

impl WeightedComplex {
    /// Sorts into filtration order. Panics (debug) if some simplex is valued
    /// below one of its facets.
    pub fn from_simplices(mut simplices: Vec<Simplex>, max_dim: usize) -> Self {
        simplices.sort_by(Simplex::filtration_cmp);
        let c = WeightedComplex { simplices, max_dim };
        debug_assert!(c.is_monotone());
        c
    }

    /// Simplices in filtration order.
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Highest simplex dimension allowed (`k`); homology is taken in
    /// dimensions `0..=max_dim`.
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn count_by_dim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_dim + 1];
        for s in &self.simplices {
            counts[s.dim()] += 1;
        }
        counts
    }

    /// Position of each simplex keyed by its vertex tuple.
    pub fn index(&self) -> HashMap<&[usize], usize> {
        self.simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.vertices.as_slice(), i))
            .collect()
    }

    /// Facet positions of simplex `i` (empty for vertices).
    pub fn boundary(&self, i: usize, index: &HashMap<&[usize], usize>) -> Vec<usize> {
        let v = &self.simplices[i].vertices;
        if v.len() == 1 {
            return Vec::new();
        }
        let mut facet = Vec::with_capacity(v.len() - 1);
        let mut out: Vec<usize> = (0..v.len())
            .map(|skip| {
                facet.clear();
                facet.extend(v.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x));
                index[facet.as_slice()]
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Faces exist, precede their cofaces, and carry no larger values.
    pub fn is_monotone(&self) -> bool {
        let index = self.index();
        (0..self.simplices.len()).all(|i| {
            let v = &self.simplices[i].vertices;
            v.len() == 1
                || (0..v.len()).all(|skip| {
                    let facet: Vec<usize> = v
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &x)| x)
                        .collect();
                    match index.get(facet.as_slice()) {
                        Some(&f) => f < i && self.simplices[f].value <= self.simplices[i].value,
                        None => false,
                    }
                })
        })
    }

    /// Debug dump: one simplex per line, `dim value v0 v1 ...`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for s in &self.simplices {
            write!(out, "{} {}", s.dim(), s.value).unwrap();
            for v in &s.vertices {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Node and edge values for clique expansion.
///
/// Node weightings value each edge at the larger endpoint value. Edge
/// weightings value nodes by `rule`, or, when the filtration fixes a node
/// value, by that value lowered to the smallest incident edge so that no
/// vertex enters after one of its edges.
pub fn propagate_weights(g: &Graph, weighting: &Weighting, rule: NodeRule) -> (Vec<f64>, Vec<f64>) {
    match weighting {
        Weighting::Node(w) => {
            let nodes = w.values().to_vec();
            let edges = g.edges().iter().map(|&(u, v)| nodes[u].max(nodes[v])).collect();
            (nodes, edges)
        }
        Weighting::Edge { edges, nodes: fixed } => {
            let edges = edges.values().to_vec();
            let global = edges.iter().copied().reduce(f64::min).unwrap_or(0.0);
            let incident_min = |v: usize| {
                g.incident_edges(v)
                    .iter()
                    .map(|&e| edges[e])
                    .reduce(f64::min)
            };
            let nodes = (0..g.n_nodes())
                .map(|v| match fixed {
                    Some(c) => incident_min(v).map_or(*c, |m| c.min(m)),
                    None => match rule {
                        NodeRule::GlobalMin => global,
                        NodeRule::IncidentMin => incident_min(v).unwrap_or(global),
                    },
                })
                .collect();
            (nodes, edges)
        }
        Weighting::Metric => (vec![0.0; g.n_nodes()], vec![1.0; g.n_edges()]),
    }
}

/// Flag complex of `g` with cliques of up to `k + 1` vertices. Each clique
/// of three or more vertices takes the largest value among its edges, which
/// equals the maximum over its proper subcliques.
pub fn clique_expand(g: &Graph, node_values: &[f64], edge_values: &[f64], k: usize) -> WeightedComplex {
    assert!(k >= 1, "expansion level must be at least 1");
    let mut simplices: Vec<Simplex> = (0..g.n_nodes())
        .map(|v| Simplex {
            vertices: vec![v],
            value: node_values[v],
        })
        .collect();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        simplices.push(Simplex {
            vertices: vec![u, v],
            value: edge_values[e].max(node_values[u]).max(node_values[v]),
        });
    }
    if k >= 2 {
        let mut clique = Vec::with_capacity(k + 1);
        for v in 0..g.n_nodes() {
            let higher: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
            clique.push(v);
            grow_cliques(g, edge_values, &mut clique, f64::NEG_INFINITY, &higher, k + 1, &mut simplices);
            clique.pop();
        }
    }
    WeightedComplex::from_simplices(simplices, k)
}

fn grow_cliques(
    g: &Graph,
    edge_values: &[f64],
    clique: &mut Vec<usize>,
    value: f64,
    candidates: &[usize],
    max_size: usize,
    out: &mut Vec<Simplex>,
) {
    for (i, &w) in candidates.iter().enumerate() {
        let mut v = value;
        for &c in clique.iter() {
            v = v.max(edge_values[g.edge_index(c, w).expect("candidate adjacent to clique")]);
        }
        clique.push(w);
        if clique.len() >= 3 {
            out.push(Simplex {
                vertices: clique.clone(),
                value: v,
            });
        }
        if clique.len() < max_size {
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&x| g.has_edge(w, x))
                .collect();
            if !next.is_empty() {
                grow_cliques(g, edge_values, clique, v, &next, max_size, out);
            }
        }
        clique.pop();
    }
}

/// Vietoris–Rips complex of the shortest-path metric, simplices up to
/// dimension `k`. A simplex enters at its largest pairwise distance;
/// vertices enter at 0. No simplex spans two components.
pub fn vietoris_rips(g: &Graph, k: usize) -> WeightedComplex {
    assert!(k >= 1, "expansion level must be at least 1");
    let n = g.n_nodes();
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|s| g.bfs_distances(s)).collect();
    let mut simplices = Vec::new();
    let mut current = Vec::with_capacity(k + 1);
    for v in 0..n {
        current.push(v);
        simplices.push(Simplex {
            vertices: vec![v],
            value: 0.0,
        });
        rips_extend(&dist, &mut current, 0, k + 1, &mut simplices);
        current.pop();
    }
    WeightedComplex::from_simplices(simplices, k)
}

fn rips_extend(
    dist: &[Vec<Option<usize>>],
    current: &mut Vec<usize>,
    value: usize,
    max_size: usize,
    out: &mut Vec<Simplex>,
) {
    if current.len() == max_size {
        return;
    }
    let last = *current.last().expect("nonempty");
    for w in last + 1..dist.len() {
        let mut v = value;
        let mut reachable = true;
        for &c in current.iter() {
            match dist[c][w] {
                Some(d) => v = v.max(d),
                None => {
                    reachable = false;
                    break;
                }
            }
        }
        if !reachable {
            continue;
        }
        current.push(w);
        out.push(Simplex {
            vertices: current.clone(),
            value: v as f64,
        });
        rips_extend(dist, current, v, max_size, out);
        current.pop();
    }
}

/// Build the complex for a weighting at level `k`.
pub fn build_complex(g: &Graph, weighting: &Weighting, rule: NodeRule, k: usize) -> WeightedComplex {
    match weighting {
        Weighting::Metric => vietoris_rips(g, k),
        _ => {
            let (nodes, edges) = propagate_weights(g, weighting, rule);
            clique_expand(g, &nodes, &edges, k)
        }
    }
}

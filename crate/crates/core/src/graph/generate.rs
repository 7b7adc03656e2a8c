//! Random graph models used by the sensitivity experiments.
//!
//! All randomness comes from ChaCha20 (a counter-based stream cipher
//! generator) keyed by a 64-bit seed through `rand_chacha`'s
//! `seed_from_u64`, with an explicit stream id: stream 0 is used for
//! generation, stream 1 for perturbations. The same `(seed, stream)` pair
//! always yields the same graph.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::GeneratorError;

/// Deterministic generator for `(seed, stream)`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model")]
pub enum GeneratorModel {
    /// Erdős–Rényi G(n, p).
    #[serde(rename = "ER")]
    ErdosRenyi { p: f64 },
    /// Barabási–Albert preferential attachment with `m` edges per new node.
    #[serde(rename = "BA")]
    BarabasiAlbert { m: usize },
    /// Watts–Strogatz ring of `s` neighbors, rewired with probability `beta`.
    #[serde(rename = "WS")]
    WattsStrogatz { beta: f64, s: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub model: GeneratorModel,
    pub n: usize,
    #[serde(default)]
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<(), GeneratorError> {
        let n = self.n;
        match self.model {
            GeneratorModel::ErdosRenyi { p } if !(0.0..=1.0).contains(&p) => {
                Err(GeneratorError::Probability(p))
            }
            GeneratorModel::BarabasiAlbert { m } if m < 1 || m >= n => {
                Err(GeneratorError::Attachment { m, n })
            }
            GeneratorModel::WattsStrogatz { s, .. } if s % 2 == 1 || s >= n => {
                Err(GeneratorError::Neighborhood { s, n })
            }
            GeneratorModel::WattsStrogatz { beta, .. } if !(0.0..=1.0).contains(&beta) => {
                Err(GeneratorError::Rewiring(beta))
            }
            _ => Ok(()),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Sample a graph. Pure function of `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GeneratorError> {
    spec.validate()?;
    let mut rng = rng_for(spec.seed, 0);
    let n = spec.n;
    let edges = match spec.model {
        GeneratorModel::ErdosRenyi { p } => erdos_renyi(n, p, &mut rng),
        GeneratorModel::BarabasiAlbert { m } => barabasi_albert(n, m, &mut rng),
        GeneratorModel::WattsStrogatz { beta, s } => watts_strogatz(n, s, beta, &mut rng),
    };
    Ok(Graph::from_edges(n, edges).expect("generators emit simple graphs"))
}

fn erdos_renyi(n: usize, p: f64, rng: &mut ChaCha20Rng) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

// Starts from m isolated nodes; node m attaches to all of them, later nodes
// pick m distinct targets with probability proportional to degree.
fn barabasi_albert(n: usize, m: usize, rng: &mut ChaCha20Rng) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(m * (n - m));
    let mut targets: Vec<usize> = (0..m).collect();
    let mut repeated: Vec<usize> = Vec::with_capacity(2 * m * n);
    for source in m..n {
        edges.extend(targets.iter().map(|&t| (t, source)));
        repeated.extend(targets.iter().copied());
        repeated.extend(std::iter::repeat_n(source, m));
        targets.clear();
        while targets.len() < m {
            let pick = repeated[rng.random_range(0..repeated.len())];
            if !targets.contains(&pick) {
                targets.push(pick);
            }
        }
    }
    edges
}

fn watts_strogatz(n: usize, s: usize, beta: f64, rng: &mut ChaCha20Rng) -> Vec<(usize, usize)> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for j in 1..=s / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    for j in 1..=s / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            if rng.random::<f64>() >= beta {
                continue;
            }
            if adj[u].len() >= n - 1 {
                continue;
            }
            let mut w = rng.random_range(0..n);
            while w == u || adj[u].contains(&w) {
                w = rng.random_range(0..n);
            }
            adj[u].remove(&v);
            adj[v].remove(&u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    adj.iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
        .collect()
}

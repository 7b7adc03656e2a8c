use std::collections::HashSet;

use rand::Rng;

use super::{rng_for, Graph};
use crate::error::GeneratorError;

/// Resamples allowed per rewiring step before the step becomes a no-op.
pub const REWIRE_RETRIES: usize = 100;

/// Graphs produced by a perturbation: `graphs[0]` is the input and
/// `graphs[i]` the state after step `i`.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub graphs: Vec<Graph>,
    /// Steps whose swap could not be realized within the retry budget.
    pub noop_steps: Vec<usize>,
}

/// Degree-preserving double-edge swaps: `(a,b),(c,d) -> (a,d),(c,b)`.
pub fn perturb_rewire(g: &Graph, steps: usize, seed: u64) -> Result<Trajectory, GeneratorError> {
    if steps > 0 && g.n_edges() < 2 {
        return Err(GeneratorError::TooFewEdges(g.n_edges()));
    }
    let mut rng = rng_for(seed, 1);
    let mut edges = g.edges().to_vec();
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut graphs = vec![g.clone()];
    let mut noop_steps = Vec::new();
    for step in 1..=steps {
        let mut done = false;
        for _ in 0..REWIRE_RETRIES {
            let i = rng.random_range(0..edges.len());
            let j = rng.random_range(0..edges.len());
            if i == j {
                continue;
            }
            let (a, b) = edges[i];
            let (mut c, mut d) = edges[j];
            if rng.random::<bool>() {
                std::mem::swap(&mut c, &mut d);
            }
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let ad = canon(a, d);
            let cb = canon(c, b);
            if present.contains(&ad) || present.contains(&cb) {
                continue;
            }
            present.remove(&edges[i]);
            present.remove(&edges[j]);
            present.insert(ad);
            present.insert(cb);
            edges[i] = ad;
            edges[j] = cb;
            done = true;
            break;
        }
        if !done {
            log::warn!("rewire step {step}: no valid swap after {REWIRE_RETRIES} tries");
            noop_steps.push(step);
        }
        graphs.push(Graph::from_edges(g.n_nodes(), edges.iter().copied()).expect("swap keeps graph simple"));
    }
    Ok(Trajectory { graphs, noop_steps })
}

/// Removes one uniformly chosen remaining edge per step.
pub fn perturb_remove(g: &Graph, steps: usize, seed: u64) -> Result<Trajectory, GeneratorError> {
    if steps > g.n_edges() {
        return Err(GeneratorError::TooManyRemovals {
            steps,
            edges: g.n_edges(),
        });
    }
    let mut rng = rng_for(seed, 1);
    let mut edges = g.edges().to_vec();
    let mut graphs = vec![g.clone()];
    for _ in 0..steps {
        let i = rng.random_range(0..edges.len());
        edges.swap_remove(i);
        graphs.push(Graph::from_edges(g.n_nodes(), edges.iter().copied()).expect("subgraph"));
    }
    Ok(Trajectory {
        graphs,
        noop_steps: Vec::new(),
    })
}

fn canon(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

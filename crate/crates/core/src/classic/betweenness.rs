//! Edge betweenness by Brandes' accumulation over all sources. Counted over
//! unordered node pairs, i.e. the ordered-pair sum halved.
//!
//! The exact variant accumulates in `Ratio<i128>` with checked arithmetic
//! and reports `None` if anything overflows.

use std::collections::VecDeque;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, ToPrimitive, Zero};

use crate::graph::Graph;
use crate::weighting::EdgeWeighting;

pub type ExactBetweenness = EdgeWeighting<Ratio<i128>>;

trait Accumulator: Clone {
    fn zero() -> Self;
    fn from_count(c: u128) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
}

impl Accumulator for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_count(c: u128) -> Option<Self> {
        Some(c as f64)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
}

impl Accumulator for Ratio<i128> {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_count(c: u128) -> Option<Self> {
        i128::try_from(c).ok().map(Ratio::from_integer)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
}

fn brandes<A: Accumulator>(g: &Graph) -> Option<Vec<A>> {
    let n = g.n_nodes();
    let mut score = vec![A::zero(); g.n_edges()];
    let one = A::from_count(1)?;
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0u128; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        sigma.fill(0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] = sigma[w].checked_add(sigma[v])?;
                }
            }
        }
        let mut delta = vec![A::zero(); n];
        for &w in order.iter().rev() {
            let sw = A::from_count(sigma[w])?;
            let carry = one.add(&delta[w])?;
            for (&v, &e) in g.neighbors(w).iter().zip(g.incident_edges(w)) {
                if dist[v] != usize::MAX && dist[v] + 1 == dist[w] {
                    let c = A::from_count(sigma[v])?.div(&sw)?.mul(&carry)?;
                    score[e] = score[e].add(&c)?;
                    delta[v] = delta[v].add(&c)?;
                }
            }
        }
    }
    let two = A::from_count(2)?;
    score.iter().map(|x| x.div(&two)).collect()
}

/// Exact values, or `None` on overflow.
pub fn edge_betweenness_exact(g: &Graph) -> Option<ExactBetweenness> {
    brandes::<Ratio<i128>>(g).map(EdgeWeighting::new)
}

/// eB. Uses the exact accumulation when it fits and converts once; falls
/// back to floating point otherwise.
pub fn edge_betweenness(g: &Graph) -> EdgeWeighting {
    match edge_betweenness_exact(g) {
        Some(w) => w.map(|r| {
            r.to_f64()
                .expect("finite rational converts to f64")
        }),
        None => {
            log::warn!("edge betweenness overflowed exact arithmetic; using f64");
            EdgeWeighting::new(brandes::<f64>(g).expect("f64 accumulation never fails"))
        }
    }
}

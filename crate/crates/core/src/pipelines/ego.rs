//! Ego-distance baseline: cumulative 3-D histograms of (normalized degree,
//! clustering, egonet persistence) compared in ℓ₂.

use num_traits::Zero;

use crate::classic::{clustering_coefficient, egonet_persistence};
use crate::graph::Graph;
use crate::persistence::DISTINCT_THRESHOLD;
use crate::weighting::Rational;

/// Cap `T` and bin width `Δ`; `T / Δ` must be a positive integer.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EgoParams {
    pub cap: Rational,
    pub step: Rational,
}

impl Default for EgoParams {
    fn default() -> Self {
        EgoParams {
            cap: Rational::new(1, 2),
            step: Rational::new(1, 100),
        }
    }
}

impl EgoParams {
    pub fn bins(&self) -> usize {
        let r = self.cap / self.step;
        assert!(r.is_integer() && r > Rational::zero(), "cap must be a multiple of the step");
        r.to_integer() as usize
    }

    // Values at or above the cap share the top bin.
    fn bin(&self, x: Rational, r: usize) -> usize {
        let b = (x / self.step).floor().to_integer().max(0) as usize;
        b.min(r - 1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EgoHistogram {
    pub bins: usize,
    pub n_nodes: usize,
    /// `bins³` node counts, index `(d * bins + c) * bins + p`.
    pub counts: Vec<u64>,
}

impl EgoHistogram {
    pub fn new(g: &Graph, params: &EgoParams) -> Self {
        let r = params.bins();
        let n = g.n_nodes();
        let clustering = clustering_coefficient(g);
        let egonet = egonet_persistence(g);
        let mut counts = vec![0u64; r * r * r];
        for v in 0..n {
            let nd = if n > 1 {
                Rational::new(g.degree(v) as i64, n as i64 - 1)
            } else {
                Rational::zero()
            };
            let (d, c, p) = (
                params.bin(nd, r),
                params.bin(*clustering.get(v), r),
                params.bin(*egonet.get(v), r),
            );
            counts[(d * r + c) * r + p] += 1;
        }
        EgoHistogram {
            bins: r,
            n_nodes: n,
            counts,
        }
    }

    /// Cumulative counts `Σ_{i≤h, j≤k, l≤m}`, same indexing as `counts`.
    pub fn cumulative_counts(&self) -> Vec<u64> {
        let r = self.bins;
        let mut q = self.counts.clone();
        let idx = |a: usize, b: usize, c: usize| (a * r + b) * r + c;
        for a in 0..r {
            for b in 0..r {
                for c in 1..r {
                    q[idx(a, b, c)] += q[idx(a, b, c - 1)];
                }
            }
        }
        for a in 0..r {
            for b in 1..r {
                for c in 0..r {
                    q[idx(a, b, c)] += q[idx(a, b - 1, c)];
                }
            }
        }
        for a in 1..r {
            for b in 0..r {
                for c in 0..r {
                    q[idx(a, b, c)] += q[idx(a - 1, b, c)];
                }
            }
        }
        q
    }

    /// Cumulative distribution (counts over node count).
    pub fn cumulative(&self) -> Vec<f64> {
        let n = self.n_nodes.max(1) as f64;
        self.cumulative_counts().into_iter().map(|c| c as f64 / n).collect()
    }
}

/// ℓ₂ distance between cumulative distributions.
pub fn histogram_distance(a: &EgoHistogram, b: &EgoHistogram) -> f64 {
    assert_eq!(a.bins, b.bins, "histograms must share a binning");
    a.cumulative()
        .iter()
        .zip(b.cumulative())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn ego_distance(g1: &Graph, g2: &Graph, params: &EgoParams) -> f64 {
    histogram_distance(&EgoHistogram::new(g1, params), &EgoHistogram::new(g2, params))
}

pub fn ego_distinct(distance: f64) -> bool {
    distance > DISTINCT_THRESHOLD
}

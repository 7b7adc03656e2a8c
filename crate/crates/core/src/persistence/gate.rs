//! Isomorphism gate: two graphs are distinct under a filtration when some
//! homology dimension separates their diagrams by more than the threshold.

use serde::Serialize;

use super::{bottleneck_all_dims, compute_persistence, PersistenceDiagram};
use crate::complex::build_complex;
use crate::error::Error;
use crate::filtration::{compute_weighting, FiltrationSpec};
use crate::graph::Graph;

pub const DISTINCT_THRESHOLD: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub distinct: bool,
    /// Dimension with the largest distance (lowest on ties).
    pub dim: usize,
    pub distance: f64,
}

/// Diagram of `g` under `spec`, homology in dimensions `0..=spec.k`.
pub fn diagram_for(g: &Graph, spec: &FiltrationSpec) -> PersistenceDiagram {
    let weighting = compute_weighting(g, spec);
    compute_persistence(&build_complex(g, &weighting, spec.node_rule, spec.k))
}

pub fn distinguish(g1: &Graph, g2: &Graph, spec: &FiltrationSpec) -> Result<Verdict, Error> {
    if g1.is_empty() || g2.is_empty() {
        return Err(Error::Input("cannot compare an empty graph".into()));
    }
    if spec.k == 0 {
        return Err(Error::Parameter("expansion level k must be at least 1".into()));
    }
    let d1 = diagram_for(g1, spec);
    let d2 = diagram_for(g2, spec);
    let (dim, distance) = bottleneck_all_dims(&d1, &d2);
    Ok(Verdict {
        distinct: distance > DISTINCT_THRESHOLD,
        dim,
        distance,
    })
}

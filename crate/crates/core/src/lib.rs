//! Persistent homology of graphs under cycle-density and classical
//! filtrations.
//!
//! A graph is weighted by one of fifteen [`Filtration`]s, expanded into a
//! clique (or Vietoris–Rips) complex, and reduced to a
//! [`PersistenceDiagram`]. Diagrams of two graphs are compared with the
//! bottleneck distance to decide whether the filtration tells them apart.
//!
//! ```
//! use motifph::{distinguish, graph::named, Filtration, FiltrationSpec};
//!
//! let hexagon = named::cycle(6);
//! let triangles = named::disjoint_union(&named::complete(3), &named::complete(3));
//! let spec = FiltrationSpec::new(Filtration::Triangles, 1);
//! assert!(distinguish(&hexagon, &triangles, &spec).unwrap().distinct);
//! ```

pub mod classic;
pub mod complex;
pub mod error;
pub mod filtration;
pub mod graph;
pub mod motif;
pub mod persistence;
pub mod pipelines;
pub mod weighting;

pub use complex::{build_complex, clique_expand, propagate_weights, vietoris_rips, Simplex, WeightedComplex};
pub use error::{Error, Result};
pub use filtration::{compute_weighting, Filtration, FiltrationSpec, NodeRule, Weighting};
pub use graph::Graph;
pub use persistence::{
    bottleneck, compute_persistence, distinguish, normalize_diagram, PersistenceDiagram,
    PersistencePoint, Verdict,
};
pub use weighting::{EdgeWeighting, NodeWeighting, Rational};

//! Experiment drivers built on the filtration and persistence layers.

pub mod ego;
pub mod features;
pub mod iso;
pub mod manifest;
pub mod metadata;
pub mod sensitivity;

pub use ego::{ego_distance, EgoHistogram, EgoParams};
pub use features::{export_features, FeatureTable, GraphProperties};
pub use iso::{iso_gate, IsoOptions, IsoReport, NamedPair};
pub use manifest::{Combination, ExperimentManifest, LoadedManifest};
pub use metadata::RunMetadata;
pub use sensitivity::{paired_t_greater, sensitivity_run, Perturbation, SensitivityConfig, SensitivityTable};

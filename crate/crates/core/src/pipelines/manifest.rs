//! Experiment manifests: a JSON description of which graphs to load, which
//! pairs to compare, and which filtrations and expansion levels to sweep.
//!
//! ```json
//! {
//!   "name": "sr16622",
//!   "datasets": ["sr16622.g6"],
//!   "pairs": "all",
//!   "filtrations": "all",
//!   "k": [1, 2, 3],
//!   "seed": 0,
//!   "output": "out/sr16622"
//! }
//! ```
//!
//! Paths are relative to the manifest file. `"pairs": "all"` takes every
//! pair within each dataset, labeled non-isomorphic; otherwise `pairs` is a
//! list of `{left, right, label}` whose integer references index the
//! concatenation of all datasets.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::filtration::{Filtration, NodeRule};
use crate::graph::{pairs::resolve_pairs, Graph, GraphPair, PairEntry, PairLabel};
use crate::classic::OrbitSet;
use crate::persistence::ImageParams;

use super::sensitivity::SensitivityConfig;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PairSource {
    Keyword(AllPairs),
    List(Vec<PairEntry>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AllPairs {
    All,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FiltrationSelection {
    Keyword(AllPairs),
    List(Vec<Filtration>),
}

impl FiltrationSelection {
    pub fn resolve(&self) -> Vec<Filtration> {
        match self {
            FiltrationSelection::Keyword(AllPairs::All) => Filtration::ALL.to_vec(),
            FiltrationSelection::List(l) => l.clone(),
        }
    }
}

fn default_pairs() -> PairSource {
    PairSource::Keyword(AllPairs::All)
}

fn default_filtrations() -> FiltrationSelection {
    FiltrationSelection::Keyword(AllPairs::All)
}

fn default_k() -> Vec<usize> {
    vec![1, 2, 3]
}

fn default_output() -> String {
    "out".into()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentManifest {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub datasets: Vec<String>,
    #[serde(default = "default_pairs")]
    pub pairs: PairSource,
    #[serde(default = "default_filtrations")]
    pub filtrations: FiltrationSelection,
    #[serde(default = "default_k")]
    pub k: Vec<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_output")]
    pub output: String,
    #[serde(default)]
    pub node_rule: NodeRule,
    #[serde(default)]
    pub orbit_set: OrbitSetName,
    #[serde(default)]
    pub sensitivity: Option<SensitivityConfig>,
    #[serde(default)]
    pub image: Option<ImageParams>,
}

/// A filtration at one expansion level.
pub type Combination = (Filtration, usize);

/// Serialized name of an [`OrbitSet`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitSetName {
    #[default]
    First11,
    NonRedundant,
}

impl From<OrbitSetName> for OrbitSet {
    fn from(n: OrbitSetName) -> Self {
        match n {
            OrbitSetName::First11 => OrbitSet::First11,
            OrbitSetName::NonRedundant => OrbitSet::NonRedundant,
        }
    }
}

/// A named graph from a dataset.
#[derive(Clone, Debug)]
pub struct DatasetGraph {
    /// `<file stem>#<record>`
    pub id: String,
    pub graph: Graph,
}

/// A manifest with its files read.
#[derive(Clone, Debug)]
pub struct LoadedManifest {
    pub manifest: ExperimentManifest,
    pub path: PathBuf,
    /// SHA-256 of the manifest file bytes, hex.
    pub sha256: String,
    /// Per dataset, its graphs.
    pub datasets: Vec<Vec<DatasetGraph>>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl ExperimentManifest {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let m: ExperimentManifest =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("manifest: {e}")))?;
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.datasets.is_empty() && self.sensitivity.is_none() {
            return Err(Error::Input("manifest lists no datasets and no sensitivity section".into()));
        }
        if self.k.is_empty() || self.k.contains(&0) {
            return Err(Error::Parameter("k levels must be nonempty and at least 1".into()));
        }
        if self.filtrations.resolve().is_empty() {
            return Err(Error::Input("manifest lists no filtrations".into()));
        }
        if let Some(s) = &self.sensitivity {
            s.validate()?;
        }
        Ok(())
    }

    /// Every (filtration, k) combination to run, with mV dropped at k = 4
    /// and above. Dropped combinations are returned separately.
    pub fn sweep(&self) -> (Vec<Combination>, Vec<Combination>) {
        let mut run = Vec::new();
        let mut skipped = Vec::new();
        for &k in &self.k {
            for f in self.filtrations.resolve() {
                if f == Filtration::VietorisRips && k >= 4 {
                    skipped.push((f, k));
                } else {
                    run.push((f, k));
                }
            }
        }
        (run, skipped)
    }
}

impl LoadedManifest {
    pub fn load(path: &Path) -> Result<Self, Error> {
        let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
        let text = std::str::from_utf8(&bytes)
            .map_err(|_| Error::Input(format!("{}: not UTF-8", path.display())))?;
        let manifest = ExperimentManifest::parse(text)?;
        let base = path.parent().unwrap_or(Path::new("."));
        let datasets = manifest
            .datasets
            .iter()
            .map(|d| {
                let file = base.join(d);
                let stem = file
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| d.clone());
                Ok(Graph::read_all(&file)?
                    .into_iter()
                    .enumerate()
                    .map(|(i, graph)| DatasetGraph {
                        id: format!("{stem}#{i}"),
                        graph,
                    })
                    .collect())
            })
            .collect::<Result<Vec<Vec<DatasetGraph>>, Error>>()?;
        Ok(LoadedManifest {
            manifest,
            path: path.to_path_buf(),
            sha256: sha256_hex(&bytes),
            datasets,
        })
    }

    pub fn base_dir(&self) -> &Path {
        self.path.parent().unwrap_or(Path::new("."))
    }

    /// Output directory, resolved against the manifest location.
    pub fn output_dir(&self) -> PathBuf {
        self.base_dir().join(&self.manifest.output)
    }

    pub fn all_graphs(&self) -> impl Iterator<Item = &DatasetGraph> + '_ {
        self.datasets.iter().flatten()
    }

    /// Pairs with display ids for each side.
    pub fn pairs(&self) -> Result<Vec<(String, String, GraphPair)>, Error> {
        match &self.manifest.pairs {
            PairSource::Keyword(AllPairs::All) => {
                let mut out = Vec::new();
                for ds in &self.datasets {
                    for i in 0..ds.len() {
                        for j in i + 1..ds.len() {
                            out.push((
                                ds[i].id.clone(),
                                ds[j].id.clone(),
                                GraphPair::new(
                                    ds[i].graph.clone(),
                                    ds[j].graph.clone(),
                                    PairLabel::NonIsomorphic,
                                )?,
                            ));
                        }
                    }
                }
                Ok(out)
            }
            PairSource::List(entries) => {
                let flat: Vec<Graph> = self.all_graphs().map(|g| g.graph.clone()).collect();
                let resolved = resolve_pairs(entries, &flat, self.base_dir())?;
                let describe = |r: &crate::graph::GraphRef| match r {
                    crate::graph::GraphRef::Index(i) => self
                        .all_graphs()
                        .nth(*i)
                        .map(|g| g.id.clone())
                        .unwrap_or_default(),
                    crate::graph::GraphRef::Path(p) => p.clone(),
                };
                Ok(entries
                    .iter()
                    .zip(resolved)
                    .map(|(e, p)| (describe(&e.left), describe(&e.right), p))
                    .collect())
            }
        }
    }
}

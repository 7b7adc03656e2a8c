//! Pair manifests: JSON arrays of `{left, right, label}` where each side is
//! either an index into a dataset's graph list or a file path. A path may
//! carry a `#n` suffix to pick record `n` of a graph6 file.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairLabel {
    #[serde(rename = "isomorphic")]
    Isomorphic,
    #[serde(rename = "non-isomorphic")]
    NonIsomorphic,
    #[default]
    #[serde(rename = "unknown")]
    Unknown,
}

impl PairLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            PairLabel::Isomorphic => "isomorphic",
            PairLabel::NonIsomorphic => "non-isomorphic",
            PairLabel::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphRef {
    Index(usize),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub left: GraphRef,
    pub right: GraphRef,
    #[serde(default)]
    pub label: PairLabel,
}

#[derive(Clone, Debug)]
pub struct GraphPair {
    pub left: Graph,
    pub right: Graph,
    pub label: PairLabel,
}

impl GraphPair {
    pub fn new(left: Graph, right: Graph, label: PairLabel) -> Result<Self, Error> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::Input("pair members must be nonempty graphs".into()));
        }
        Ok(GraphPair { left, right, label })
    }
}

impl GraphRef {
    /// Resolve against an indexed graph list and a base directory for paths.
    pub fn resolve(&self, graphs: &[Graph], base: &Path) -> Result<Graph, Error> {
        match self {
            GraphRef::Index(i) => graphs.get(*i).cloned().ok_or_else(|| {
                Error::Input(format!("graph index {i} out of range ({} graphs)", graphs.len()))
            }),
            GraphRef::Path(p) => {
                let (file, record) = match p.rsplit_once('#') {
                    Some((f, r)) => (
                        f,
                        r.parse::<usize>()
                            .map_err(|_| Error::Input(format!("bad record suffix in {p:?}")))?,
                    ),
                    None => (p.as_str(), 0),
                };
                Graph::read(&base.join(file), record)
            }
        }
    }
}

/// Parse a pair manifest file and resolve each side.
pub fn load_pair_manifest(path: &Path, graphs: &[Graph]) -> Result<Vec<GraphPair>, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let entries: Vec<PairEntry> = serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new("."));
    resolve_pairs(&entries, graphs, base)
}

pub(crate) fn resolve_pairs(
    entries: &[PairEntry],
    graphs: &[Graph],
    base: &Path,
) -> Result<Vec<GraphPair>, Error> {
    entries
        .iter()
        .map(|e| {
            GraphPair::new(
                e.left.resolve(graphs, base)?,
                e.right.resolve(graphs, base)?,
                e.label,
            )
        })
        .collect()
}

//! The fifteen filtrations and how each one weights a graph.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classic::{self, OrbitSet};
use crate::graph::Graph;
use crate::motif;
use crate::weighting::{EdgeWeighting, NodeWeighting, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Filtration {
    /// nD
    Degree,
    /// eO
    OllivierRicci,
    /// eF
    FormanRicci,
    /// mV
    VietorisRips,
    /// eT
    Triangles,
    /// eS
    Squares,
    /// eP
    Pentagons,
    /// eΣ
    CycleSum,
    /// eR
    Randic,
    /// eH
    Harmonic,
    /// eA
    RepulsionAttraction,
    /// eB
    Betweenness,
    /// nC
    Clustering,
    /// nE
    Egonet,
    /// nG
    Graphlet,
}

impl Filtration {
    /// Table order.
    pub const ALL: [Filtration; 15] = [
        Filtration::Degree,
        Filtration::OllivierRicci,
        Filtration::FormanRicci,
        Filtration::VietorisRips,
        Filtration::Triangles,
        Filtration::Squares,
        Filtration::Pentagons,
        Filtration::CycleSum,
        Filtration::Randic,
        Filtration::Harmonic,
        Filtration::RepulsionAttraction,
        Filtration::Betweenness,
        Filtration::Clustering,
        Filtration::Egonet,
        Filtration::Graphlet,
    ];

    /// ASCII abbreviation (`eSum` for eΣ).
    pub fn abbrev(self) -> &'static str {
        match self {
            Filtration::Degree => "nD",
            Filtration::OllivierRicci => "eO",
            Filtration::FormanRicci => "eF",
            Filtration::VietorisRips => "mV",
            Filtration::Triangles => "eT",
            Filtration::Squares => "eS",
            Filtration::Pentagons => "eP",
            Filtration::CycleSum => "eSum",
            Filtration::Randic => "eR",
            Filtration::Harmonic => "eH",
            Filtration::RepulsionAttraction => "eA",
            Filtration::Betweenness => "eB",
            Filtration::Clustering => "nC",
            Filtration::Egonet => "nE",
            Filtration::Graphlet => "nG",
        }
    }

    pub fn is_motif(self) -> bool {
        matches!(
            self,
            Filtration::Triangles | Filtration::Squares | Filtration::Pentagons | Filtration::CycleSum
        )
    }

    pub fn is_node_based(self) -> bool {
        matches!(
            self,
            Filtration::Degree | Filtration::Clustering | Filtration::Egonet | Filtration::Graphlet
        )
    }
}

impl fmt::Display for Filtration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbrev())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown filtration {0:?}")]
pub struct UnknownFiltration(pub String);

impl FromStr for Filtration {
    type Err = UnknownFiltration;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "eΣ" {
            return Ok(Filtration::CycleSum);
        }
        Filtration::ALL
            .into_iter()
            .find(|f| f.abbrev() == s)
            .ok_or_else(|| UnknownFiltration(s.to_string()))
    }
}

impl Serialize for Filtration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.abbrev())
    }
}

impl<'de> Deserialize<'de> for Filtration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How nodes are valued under an edge weighting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeRule {
    /// Every node takes the minimum over all edges of the graph.
    #[default]
    GlobalMin,
    /// Each node takes the minimum over its incident edges; isolated nodes
    /// fall back to the global minimum.
    IncidentMin,
}

/// A filtration together with its parameters and the expansion level.
#[derive(Clone, Debug, PartialEq)]
pub struct FiltrationSpec {
    pub filtration: Filtration,
    pub k: usize,
    /// Laziness of the random walk in eO.
    pub alpha: Rational,
    pub node_rule: NodeRule,
    pub orbits: OrbitSet,
}

impl FiltrationSpec {
    pub fn new(filtration: Filtration, k: usize) -> Self {
        FiltrationSpec {
            filtration,
            k,
            alpha: Rational::zero(),
            node_rule: NodeRule::default(),
            orbits: OrbitSet::default(),
        }
    }
}

/// What a filtration assigns before complex construction.
#[derive(Clone, Debug, PartialEq)]
pub enum Weighting {
    Node(NodeWeighting),
    /// Edge values, plus a fixed value for every node where the filtration
    /// prescribes one (eO and eF use −1).
    Edge {
        edges: EdgeWeighting,
        nodes: Option<f64>,
    },
    /// Vietoris–Rips over the shortest-path metric; no weighting needed.
    Metric,
}

fn node_exact(w: NodeWeighting<Rational>) -> Weighting {
    Weighting::Node(w.to_f64())
}

fn node_int(w: NodeWeighting<i64>) -> Weighting {
    Weighting::Node(w.map(|&x| x as f64))
}

fn edge_exact(w: EdgeWeighting<Rational>) -> Weighting {
    Weighting::Edge {
        edges: w.to_f64(),
        nodes: None,
    }
}

/// Compute the weighting of `g` for `spec`. Values are exact (integers or
/// rationals) up to this point and converted to `f64` here.
pub fn compute_weighting(g: &Graph, spec: &FiltrationSpec) -> Weighting {
    match spec.filtration {
        Filtration::Degree => node_int(classic::degree_filtration(g)),
        Filtration::OllivierRicci => Weighting::Edge {
            edges: classic::ollivier_ricci(g, spec.alpha).to_f64(),
            nodes: Some(-1.0),
        },
        Filtration::FormanRicci => Weighting::Edge {
            edges: classic::forman_augmented(g).map(|&x| x as f64),
            nodes: Some(-1.0),
        },
        Filtration::VietorisRips => Weighting::Metric,
        Filtration::Triangles => edge_exact(motif::density_triangles(g)),
        Filtration::Squares => edge_exact(motif::density_squares(g)),
        Filtration::Pentagons => edge_exact(motif::density_pentagons(g)),
        Filtration::CycleSum => edge_exact(motif::density_sum(g)),
        Filtration::Randic => Weighting::Edge {
            edges: classic::randic(g),
            nodes: None,
        },
        Filtration::Harmonic => edge_exact(classic::harmonic(g)),
        Filtration::RepulsionAttraction => edge_exact(classic::repulsion_attraction(g)),
        Filtration::Betweenness => Weighting::Edge {
            edges: classic::edge_betweenness(g),
            nodes: None,
        },
        Filtration::Clustering => node_exact(classic::clustering_coefficient(g)),
        Filtration::Egonet => node_exact(classic::egonet_persistence(g)),
        Filtration::Graphlet => node_int(classic::graphlet_score(g, spec.orbits)),
    }
}

//! Feature export for property prediction: persistence images of each
//! graph, concatenated over dimensions, next to structural target values.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::classic::clustering_coefficient;
use crate::error::Error;
use crate::filtration::FiltrationSpec;
use crate::graph::Graph;
use crate::persistence::{diagram_for, persistence_image, ImageGrid, ImageParams, PersistenceDiagram};
use crate::weighting::rational_to_f64;

/// Girth value written for acyclic graphs.
pub const NO_CYCLE: i64 = -1;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GraphProperties {
    pub avg_closeness: f64,
    pub avg_degree: f64,
    pub avg_clustering: f64,
    /// `<d²> / <d>²`, 0 for edgeless graphs.
    pub degree_heterogeneity: f64,
    /// Node betweenness normalized by the pair count `C(n−1, 2)`.
    pub avg_betweenness: f64,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Over connected pairs; 0 when there are none.
    pub avg_shortest_path: f64,
    pub max_radius: usize,
    pub max_diameter: usize,
    /// Shortest cycle over the whole graph, [`NO_CYCLE`] if acyclic.
    pub girth: i64,
}

impl GraphProperties {
    pub const NAMES: [&'static str; 11] = [
        "avg_closeness",
        "avg_degree",
        "avg_clustering",
        "degree_heterogeneity",
        "avg_betweenness",
        "min_degree",
        "max_degree",
        "avg_shortest_path",
        "max_radius",
        "max_diameter",
        "girth",
    ];

    pub fn compute(g: &Graph) -> Self {
        let n = g.n_nodes();
        let nf = n as f64;
        let degrees = g.degrees();
        let sum_d: usize = degrees.iter().sum();
        let sum_d2: usize = degrees.iter().map(|d| d * d).sum();
        let mean_d = if n == 0 { 0.0 } else { sum_d as f64 / nf };
        let heterogeneity = if sum_d == 0 {
            0.0
        } else {
            (sum_d2 as f64 / nf) / (mean_d * mean_d)
        };
        let avg_clustering = if n == 0 {
            0.0
        } else {
            clustering_coefficient(g).values().iter().map(rational_to_f64).sum::<f64>() / nf
        };

        let mut closeness_sum = 0.0;
        let mut path_total = 0usize;
        let mut path_pairs = 0usize;
        let mut eccentricity = vec![0usize; n];
        for (s, ecc) in eccentricity.iter_mut().enumerate() {
            let dist = g.bfs_distances(s);
            let (mut reach, mut total) = (0usize, 0usize);
            for d in dist.iter().flatten() {
                reach += 1;
                total += d;
                *ecc = (*ecc).max(*d);
            }
            if total > 0 && n > 1 {
                let r = (reach - 1) as f64;
                closeness_sum += r / total as f64 * (r / (nf - 1.0));
            }
            path_total += total;
            path_pairs += reach - 1;
        }
        let components = g.components();
        let n_comp = components.iter().copied().max().map_or(0, |c| c + 1);
        let mut radius = vec![usize::MAX; n_comp];
        let mut diameter = vec![0usize; n_comp];
        for v in 0..n {
            let c = components[v];
            radius[c] = radius[c].min(eccentricity[v]);
            diameter[c] = diameter[c].max(eccentricity[v]);
        }

        let betweenness = node_betweenness(g);
        let avg_betweenness = if n > 2 {
            let pairs = ((n - 1) * (n - 2) / 2) as f64;
            betweenness.iter().map(|b| b / pairs).sum::<f64>() / nf
        } else {
            0.0
        };

        GraphProperties {
            avg_closeness: if n == 0 { 0.0 } else { closeness_sum / nf },
            avg_degree: mean_d,
            avg_clustering,
            degree_heterogeneity: heterogeneity,
            avg_betweenness,
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            avg_shortest_path: if path_pairs == 0 {
                0.0
            } else {
                path_total as f64 / path_pairs as f64
            },
            max_radius: radius.into_iter().max().unwrap_or(0),
            max_diameter: diameter.into_iter().max().unwrap_or(0),
            girth: girth(g).map_or(NO_CYCLE, |x| x as i64),
        }
    }

    fn csv_values(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.avg_closeness,
            self.avg_degree,
            self.avg_clustering,
            self.degree_heterogeneity,
            self.avg_betweenness,
            self.min_degree,
            self.max_degree,
            self.avg_shortest_path,
            self.max_radius,
            self.max_diameter,
            self.girth
        )
    }
}

/// Unnormalized node betweenness over unordered pairs.
pub fn node_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.n_nodes();
    let mut score = vec![0.0; n];
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        sigma.fill(0.0);
        delta.fill(0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        for &w in order.iter().rev() {
            for &v in g.neighbors(w) {
                if dist[v] != usize::MAX && dist[v] + 1 == dist[w] {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }
    score.iter().map(|x| x / 2.0).collect()
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n_nodes();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// One exported graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeatureRow {
    pub id: String,
    pub features: Vec<f64>,
    pub properties: GraphProperties,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeatureTable {
    pub spec_filtration: String,
    pub k: usize,
    pub grid: ImageGrid,
    pub bandwidth: f64,
    pub essential_death: f64,
    pub rows: Vec<FeatureRow>,
}

/// Images for dimensions `0..=k` on one grid fitted to the whole corpus.
/// Essential classes are closed at `m + margin·|m|`, `m` the largest finite
/// value of any diagram in the corpus.
pub fn export_features(
    graphs: &[(String, Graph)],
    spec: &FiltrationSpec,
    params: &ImageParams,
) -> Result<FeatureTable, Error> {
    if params.rows == 0 || params.cols == 0 {
        return Err(Error::Parameter("image resolution must be positive".into()));
    }
    let diagrams: Vec<PersistenceDiagram> = graphs.par_iter().map(|(_, g)| diagram_for(g, spec)).collect();
    let max_finite = diagrams
        .iter()
        .flat_map(|d| d.points().iter().flat_map(|p| [p.birth, p.death]))
        .filter(|x| x.is_finite())
        .reduce(f64::max)
        .unwrap_or(0.0);
    let essential_death = max_finite + params.essential_margin * max_finite.abs();
    let coords = diagrams.iter().flat_map(|d| {
        d.points()
            .iter()
            .filter(|p| p.death > p.birth)
            .map(|p| {
                let death = if p.is_essential() { essential_death } else { p.death };
                (p.birth, death - p.birth)
            })
            .collect::<Vec<_>>()
    });
    let grid = ImageGrid::covering(coords, params.rows, params.cols);
    let bandwidth = params.bandwidth.unwrap_or_else(|| grid.default_bandwidth());
    let rows = graphs
        .par_iter()
        .zip(&diagrams)
        .map(|((id, g), d)| -> Result<FeatureRow, Error> {
            let mut features = Vec::with_capacity((spec.k + 1) * params.rows * params.cols);
            for dim in 0..=spec.k {
                features.extend(persistence_image(d, dim, &grid, bandwidth, essential_death)?.pixels);
            }
            Ok(FeatureRow {
                id: id.clone(),
                features,
                properties: GraphProperties::compute(g),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(FeatureTable {
        spec_filtration: spec.filtration.abbrev().to_string(),
        k: spec.k,
        grid,
        bandwidth,
        essential_death,
        rows,
    })
}

impl FeatureTable {
    /// `graph,<f>_d<dim>_r<row>_c<col>...,<properties>`
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph");
        for dim in 0..=self.k {
            for r in 0..self.grid.rows {
                for c in 0..self.grid.cols {
                    write!(out, ",{}_d{dim}_r{r}_c{c}", self.spec_filtration).unwrap();
                }
            }
        }
        for name in GraphProperties::NAMES {
            write!(out, ",{name}").unwrap();
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.id);
            for x in &row.features {
                write!(out, ",{x}").unwrap();
            }
            writeln!(out, ",{}", row.properties.csv_values()).unwrap();
        }
        out
    }
}

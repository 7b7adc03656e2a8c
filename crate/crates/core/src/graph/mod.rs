//! Simple undirected graphs with contiguous node ids, plus ingestion,
//! random generators and perturbations.

mod edgelist;
mod generate;
mod graph6;
pub(crate) mod pairs;
mod perturb;

pub use edgelist::parse_edge_list;
pub use generate::{generate, rng_for, GeneratorModel, GeneratorSpec};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_file};
pub use pairs::{load_pair_manifest, GraphPair, GraphRef, PairEntry, PairLabel};
pub use perturb::{perturb_remove, perturb_rewire, Trajectory};

use std::path::Path;

use crate::error::{Error, GraphError};

/// Simple undirected graph.
///
/// Node ids are `0..n_nodes()`. Neighbor lists are sorted and the edge list
/// is canonical: every `(u, v)` has `u < v`, sorted lexicographically. The
/// position of an edge in [`Graph::edges`] is its *edge index*; edge
/// weightings are stored in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    // edge index of (v, adjacency[v][i]), parallel to `adjacency`
    incident: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph on `n` nodes.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Checked constructor. Duplicate edges (in either orientation) are
    /// collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let m = u.max(v);
            if m >= n {
                return Err(GraphError::NodeOutOfRange { node: m, n });
            }
            canon.push((u.min(v), m));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self::from_canonical(n, canon))
    }

    // `edges` must be sorted, deduplicated, u < v < n.
    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            incident[u].push(idx);
            adjacency[v].push(u);
            incident[v].push(idx);
        }
        // lexicographic edge order pushes smaller neighbors first, then larger
        debug_assert!(adjacency
            .iter()
            .all(|nb: &Vec<usize>| nb.windows(2).all(|w| w[0] < w[1])));
        Graph {
            adjacency,
            incident,
            edges,
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Canonical edge list, `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edge indices incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a]
            .binary_search(&b)
            .ok()
            .map(|i| self.incident[a][i])
    }

    /// `|N(u) ∩ N(v)|` by merging the sorted neighbor lists.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        sorted_intersection_count(&self.adjacency[u], &self.adjacency[v])
    }

    /// Graph with node `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n_nodes(), "permutation length");
        Graph::from_edges(
            self.n_nodes(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabeling a valid graph")
    }

    /// Copy of the graph without edge `idx`.
    pub fn without_edge(&self, idx: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Graph::from_canonical(self.n_nodes(), edges)
    }

    /// Connected component id for every node; ids are assigned in order of
    /// the smallest node of each component.
    pub fn components(&self) -> Vec<usize> {
        let n = self.n_nodes();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// BFS hop distances from `source`; `None` for unreachable nodes.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n_nodes()];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Read a graph file: graph6 when the extension is `.g6` (record
    /// `index`), otherwise a whitespace edge list.
    pub fn read(path: &Path, index: usize) -> Result<Graph, Error> {
        let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
        if is_graph6_path(path) {
            let mut graphs = parse_graph6_file(&bytes)?;
            if index >= graphs.len() {
                return Err(Error::Input(format!(
                    "{}: record {} requested but file holds {} graphs",
                    path.display(),
                    index,
                    graphs.len()
                )));
            }
            Ok(graphs.swap_remove(index))
        } else {
            if index != 0 {
                return Err(Error::Input(format!(
                    "{}: edge-list files hold a single graph",
                    path.display()
                )));
            }
            let text = String::from_utf8(bytes)
                .map_err(|_| Error::Input(format!("{}: not UTF-8 text", path.display())))?;
            Ok(parse_edge_list(&text)?)
        }
    }

    /// Read every graph in a file (one for edge lists).
    pub fn read_all(path: &Path) -> Result<Vec<Graph>, Error> {
        let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
        if is_graph6_path(path) {
            Ok(parse_graph6_file(&bytes)?)
        } else {
            let text = String::from_utf8(bytes)
                .map_err(|_| Error::Input(format!("{}: not UTF-8 text", path.display())))?;
            Ok(vec![parse_edge_list(&text)?])
        }
    }
}

fn is_graph6_path(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("g6") | Some("graph6")
    )
}

pub(crate) fn sorted_intersection_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Small named graphs used in examples and tests.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(
            n,
            (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))),
        )
        .unwrap()
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Disjoint union of `a` and `b`, with `b`'s nodes shifted after `a`'s.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.n_nodes();
        Graph::from_edges(
            off + b.n_nodes(),
            a.edges()
                .iter()
                .copied()
                .chain(b.edges().iter().map(|&(u, v)| (u + off, v + off))),
        )
        .unwrap()
    }
}

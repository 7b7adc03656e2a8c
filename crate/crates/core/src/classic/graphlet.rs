//! Node orbit counts in connected induced subgraphs on 2–4 nodes, in the
//! usual 15-orbit numbering:
//!
//! | graphlet | orbits |
//! |---|---|
//! | edge | 0 |
//! | path P3 | 1 end, 2 middle |
//! | triangle | 3 |
//! | path P4 | 4 end, 5 inner |
//! | star K1,3 | 6 leaf, 7 center |
//! | cycle C4 | 8 |
//! | paw | 9 pendant, 10 degree-2, 11 degree-3 |
//! | diamond | 12 degree-2, 13 degree-3 |
//! | K4 | 14 |
//!
//! Subgraphs are enumerated once each with ESU (Wernicke 2006).

use crate::graph::Graph;
use crate::weighting::NodeWeighting;

pub const ORBIT_COUNT: usize = 15;

pub type OrbitCounts = Vec<[u64; ORBIT_COUNT]>;

/// Which orbits the nG score sums.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OrbitSet {
    /// Orbits 0 through 10.
    #[default]
    First11,
    /// The non-redundant subset {0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11}.
    NonRedundant,
}

impl OrbitSet {
    pub fn orbits(self) -> &'static [usize] {
        match self {
            OrbitSet::First11 => &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
            OrbitSet::NonRedundant => &[0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11],
        }
    }
}

/// Orbit of each member of a connected induced subgraph, in member order.
fn classify(g: &Graph, nodes: &[usize]) -> [usize; 4] {
    let k = nodes.len();
    let mut deg = [0usize; 4];
    for a in 0..k {
        for b in a + 1..k {
            if g.has_edge(nodes[a], nodes[b]) {
                deg[a] += 1;
                deg[b] += 1;
            }
        }
    }
    let edges: usize = deg[..k].iter().sum::<usize>() / 2;
    let mut out = [usize::MAX; 4];
    for a in 0..k {
        out[a] = match (k, edges, deg[a]) {
            (2, _, _) => 0,
            (3, 2, 1) => 1,
            (3, 2, 2) => 2,
            (3, 3, _) => 3,
            (4, 3, 1) if deg[..4].contains(&3) => 6,
            (4, 3, 3) => 7,
            (4, 3, 1) => 4,
            (4, 3, 2) => 5,
            (4, 4, 2) if deg[..4].contains(&3) => 10,
            (4, 4, 2) => 8,
            (4, 4, 1) => 9,
            (4, 4, 3) => 11,
            (4, 5, 2) => 12,
            (4, 5, 3) => 13,
            (4, 6, _) => 14,
            _ => unreachable!("subgraph is connected"),
        };
    }
    out
}

pub fn graphlet_orbits(g: &Graph) -> OrbitCounts {
    let n = g.n_nodes();
    let mut counts = vec![[0u64; ORBIT_COUNT]; n];
    let mut sub = Vec::with_capacity(4);
    for v in 0..n {
        sub.push(v);
        let ext: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
        extend(g, &mut sub, ext, v, &mut counts);
        sub.pop();
    }
    counts
}

fn extend(g: &Graph, sub: &mut Vec<usize>, mut ext: Vec<usize>, root: usize, counts: &mut OrbitCounts) {
    if sub.len() >= 2 {
        for (node, orbit) in sub.iter().zip(classify(g, sub)) {
            counts[*node][orbit] += 1;
        }
    }
    if sub.len() == 4 {
        return;
    }
    while let Some(w) = ext.pop() {
        let mut next = ext.clone();
        for &u in g.neighbors(w) {
            if u <= root || sub.contains(&u) || next.contains(&u) {
                continue;
            }
            // exclusive neighborhood: not adjacent to the current subgraph
            if sub.iter().any(|&s| g.has_edge(s, u)) {
                continue;
            }
            next.push(u);
        }
        sub.push(w);
        extend(g, sub, next, root, counts);
        sub.pop();
    }
}

/// nG: per-node sum of the selected orbit counts.
pub fn graphlet_score(g: &Graph, set: OrbitSet) -> NodeWeighting<i64> {
    let counts = graphlet_orbits(g);
    NodeWeighting::new(
        counts
            .iter()
            .map(|c| set.orbits().iter().map(|&o| c[o] as i64).sum())
            .collect(),
    )
}

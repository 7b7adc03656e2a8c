//! Node and edge weightings.
//!
//! Weightings are computed in the narrowest exact type available (integer
//! counts, `Rational`) and converted to `f64` once, when a complex is
//! built. The conversion is a deterministic function of the exact value, so
//! equal exact weights always map to identical floats.

use num_rational::Ratio;

use crate::graph::Graph;

pub type Rational = Ratio<i64>;

pub fn rational_to_f64(r: &Rational) -> f64 {
    // both parts are far below 2^53 for the graph sizes handled here, so the
    // quotient is correctly rounded
    *r.numer() as f64 / *r.denom() as f64
}

/// Values indexed by canonical edge index (see [`Graph::edges`]).
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeWeighting<T = f64> {
    values: Vec<T>,
}

/// Values indexed by node id.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeWeighting<T = f64> {
    values: Vec<T>,
}

impl<T> EdgeWeighting<T> {
    pub fn new(values: Vec<T>) -> Self {
        EdgeWeighting { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, edge: usize) -> &T {
        &self.values[edge]
    }

    pub fn between(&self, g: &Graph, u: usize, v: usize) -> Option<&T> {
        g.edge_index(u, v).map(|e| &self.values[e])
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> EdgeWeighting<U> {
        EdgeWeighting::new(self.values.iter().map(f).collect())
    }
}

impl<T> NodeWeighting<T> {
    pub fn new(values: Vec<T>) -> Self {
        NodeWeighting { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, node: usize) -> &T {
        &self.values[node]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> NodeWeighting<U> {
        NodeWeighting::new(self.values.iter().map(f).collect())
    }
}

impl EdgeWeighting<Rational> {
    pub fn to_f64(&self) -> EdgeWeighting {
        self.map(rational_to_f64)
    }
}

impl NodeWeighting<Rational> {
    pub fn to_f64(&self) -> NodeWeighting {
        self.map(rational_to_f64)
    }
}

/// Re-express a weighting of `g` on `g.relabel(perm)`.
pub fn permute_edge_weighting<T: Clone>(
    g: &Graph,
    w: &EdgeWeighting<T>,
    perm: &[usize],
    relabeled: &Graph,
) -> EdgeWeighting<T> {
    let mut out: Vec<Option<T>> = vec![None; w.len()];
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        let target = relabeled
            .edge_index(perm[u], perm[v])
            .expect("relabeled graph holds the image edge");
        out[target] = Some(w.get(idx).clone());
    }
    EdgeWeighting::new(out.into_iter().map(Option::unwrap).collect())
}

pub fn permute_node_weighting<T: Clone>(w: &NodeWeighting<T>, perm: &[usize]) -> NodeWeighting<T> {
    let mut out: Vec<Option<T>> = vec![None; w.len()];
    for (v, value) in w.values().iter().enumerate() {
        out[perm[v]] = Some(value.clone());
    }
    NodeWeighting::new(out.into_iter().map(Option::unwrap).collect())
}

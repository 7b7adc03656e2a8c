//! Ollivier–Ricci curvature `κ(u,v) = 1 − W₁(μ_u, μ_v)` with lazy random
//! walk measures, solved exactly as an integer transportation problem.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::weighting::{EdgeWeighting, Rational};

/// `μ_c^α`: mass `α` on the center and `(1 − α)/deg(c)` on each neighbor.
/// Zero-mass entries are omitted.
#[derive(Clone, Debug, PartialEq)]
pub struct LazyWalkDistribution {
    pub center: usize,
    pub alpha: Rational,
    pub mass: Vec<(usize, Rational)>,
}

pub fn lazy_walk(g: &Graph, center: usize, alpha: Rational) -> LazyWalkDistribution {
    let mut mass = Vec::new();
    let d = g.degree(center) as i64;
    if d == 0 {
        mass.push((center, Rational::one()));
    } else {
        if !alpha.is_zero() {
            mass.push((center, alpha));
        }
        let share = (Rational::one() - alpha) / d;
        if !share.is_zero() {
            mass.extend(g.neighbors(center).iter().map(|&w| (w, share)));
        }
    }
    LazyWalkDistribution {
        center,
        alpha,
        mass,
    }
}

/// eO for every edge. Panics if `alpha` is outside `[0, 1]`.
pub fn ollivier_ricci(g: &Graph, alpha: Rational) -> EdgeWeighting<Rational> {
    assert!(
        alpha >= Rational::zero() && alpha <= Rational::one(),
        "alpha must lie in [0, 1]"
    );
    EdgeWeighting::new(
        g.edges()
            .iter()
            .map(|&(u, v)| {
                let mu = lazy_walk(g, u, alpha);
                let nu = lazy_walk(g, v, alpha);
                Rational::one() - wasserstein1(g, &mu, &nu)
            })
            .collect(),
    )
}

/// Exact `W₁` with the shortest-path metric. Both measures must live in
/// one connected component.
pub fn wasserstein1(g: &Graph, mu: &LazyWalkDistribution, nu: &LazyWalkDistribution) -> Rational {
    let scale = mu
        .mass
        .iter()
        .chain(&nu.mass)
        .fold(1i64, |acc, (_, m)| acc.lcm(m.denom()));
    let to_int = |m: &Rational| (m * scale).to_integer();
    let supply: Vec<i64> = mu.mass.iter().map(|(_, m)| to_int(m)).collect();
    let demand: Vec<i64> = nu.mass.iter().map(|(_, m)| to_int(m)).collect();
    let targets: Vec<usize> = nu.mass.iter().map(|&(y, _)| y).collect();
    let cost: Vec<Vec<i64>> = mu
        .mass
        .iter()
        .map(|&(x, _)| {
            let dist = g.bfs_distances(x);
            targets
                .iter()
                .map(|&y| dist[y].expect("transport supports must be connected") as i64)
                .collect()
        })
        .collect();
    Rational::new(transport_cost(&supply, &demand, &cost), scale)
}

/// Minimum-cost transportation for balanced integer supplies/demands with
/// nonnegative costs and uncapacitated routes, by successive shortest paths.
fn transport_cost(supply: &[i64], demand: &[i64], cost: &[Vec<i64>]) -> i64 {
    let (na, nb) = (supply.len(), demand.len());
    debug_assert_eq!(supply.iter().sum::<i64>(), demand.iter().sum::<i64>());
    let source = na + nb;
    let sink = source + 1;
    let mut net = FlowNet::new(na + nb + 2);
    for (a, &s) in supply.iter().enumerate() {
        net.add_arc(source, a, s, 0);
    }
    for (b, &d) in demand.iter().enumerate() {
        net.add_arc(na + b, sink, d, 0);
    }
    let total: i64 = supply.iter().sum();
    for (a, row) in cost.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            net.add_arc(a, na + b, total, c);
        }
    }
    net.min_cost_flow(source, sink, total)
}

struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

struct FlowNet {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            arcs: Vec::new(),
            out: vec![Vec::new(); n],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, cost });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            cost: -cost,
        });
    }

    fn min_cost_flow(&mut self, s: usize, t: usize, mut need: i64) -> i64 {
        let n = self.out.len();
        let mut total_cost = 0;
        while need > 0 {
            // Bellman-Ford: residual costs may be negative
            let mut dist = vec![i64::MAX; n];
            let mut via = vec![usize::MAX; n];
            dist[s] = 0;
            let mut changed = true;
            while changed {
                changed = false;
                for v in 0..n {
                    if dist[v] == i64::MAX {
                        continue;
                    }
                    for &a in &self.out[v] {
                        let arc = &self.arcs[a];
                        if arc.cap > 0 && dist[v] + arc.cost < dist[arc.to] {
                            dist[arc.to] = dist[v] + arc.cost;
                            via[arc.to] = a;
                            changed = true;
                        }
                    }
                }
            }
            assert!(dist[t] != i64::MAX, "transport problem is balanced");
            let mut push = need;
            let mut v = t;
            while v != s {
                let a = via[v];
                push = push.min(self.arcs[a].cap);
                v = self.arcs[a ^ 1].to;
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.arcs[a].cap -= push;
                self.arcs[a ^ 1].cap += push;
                v = self.arcs[a ^ 1].to;
            }
            need -= push;
            total_cost += push * dist[t];
        }
        total_cost
    }
}

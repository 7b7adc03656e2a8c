//! Chordless-cycle counts through each edge and the cycle-density edge
//! weightings eT, eS, eP and eΣ.
//!
//! For an edge `(i, j)` with degrees `d_i, d_j` and `t` triangles:
//!
//! * eT = `t / (min(d_i, d_j) - 1)`
//! * eS = `s / ((d_i - 1 - t)(d_j - 1 - t))`, `s` the chordless squares
//!   through the edge. A chordless square `i-j-v-u` needs `u ∈ N(i) \ N[j]`
//!   and `v ∈ N(j) \ N[i]`, so the denominator counts every candidate pair.
//! * eP = `p / Σ min(d_u - 1, d_v - 1)` over `u ∈ N(i) \ {j}`,
//!   `v ∈ N(j) \ {i}`, `u ≠ v`, with `p` the chordless pentagons through the
//!   edge. Each candidate pair closes at most `min(d_u - 1, d_v - 1)`
//!   pentagons.
//!
//! A density is 0 whenever its denominator is not positive (this covers
//! degree-1 endpoints). All values are exact rationals.

use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::weighting::{EdgeWeighting, Rational};

/// Per-edge cycle counts, indexed by edge index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleCounts {
    pub triangles: Vec<u64>,
    pub squares: Vec<u64>,
    pub pentagons: Vec<u64>,
}

/// Neighborhood markers reused across edges.
struct Marks {
    stamp: Vec<u32>,
    current: u32,
}

impl Marks {
    fn new(n: usize) -> Self {
        Marks {
            stamp: vec![0; n],
            current: 0,
        }
    }

    fn mark(&mut self, nodes: &[usize]) {
        self.current += 1;
        for &v in nodes {
            self.stamp[v] = self.current;
        }
    }

    fn has(&self, v: usize) -> bool {
        self.stamp[v] == self.current
    }
}

pub fn count_triangles(g: &Graph) -> Vec<u64> {
    g.edges()
        .iter()
        .map(|&(i, j)| g.common_neighbor_count(i, j) as u64)
        .collect()
}

/// Chordless 4-cycles `i-j-v-u-i` through each edge.
pub fn count_chordless_squares(g: &Graph) -> Vec<u64> {
    let n = g.n_nodes();
    let mut in_i = Marks::new(n);
    let mut in_j = Marks::new(n);
    g.edges()
        .iter()
        .map(|&(i, j)| {
            in_i.mark(g.neighbors(i));
            in_j.mark(g.neighbors(j));
            let mut count = 0u64;
            for &u in g.neighbors(i) {
                if u == j || in_j.has(u) {
                    continue;
                }
                for &v in g.neighbors(u) {
                    if v != i && in_j.has(v) && !in_i.has(v) {
                        count += 1;
                    }
                }
            }
            count
        })
        .collect()
}

/// Chordless 5-cycles `i-j-v-w-u-i` through each edge.
pub fn count_chordless_pentagons(g: &Graph) -> Vec<u64> {
    let n = g.n_nodes();
    let mut in_i = Marks::new(n);
    let mut in_j = Marks::new(n);
    let mut in_u = Marks::new(n);
    g.edges()
        .iter()
        .map(|&(i, j)| {
            in_i.mark(g.neighbors(i));
            in_j.mark(g.neighbors(j));
            let mut count = 0u64;
            for &u in g.neighbors(i) {
                if u == j || in_j.has(u) {
                    continue;
                }
                in_u.mark(g.neighbors(u));
                for &v in g.neighbors(j) {
                    if v == i || in_i.has(v) || in_u.has(v) {
                        continue;
                    }
                    for &w in g.neighbors(v) {
                        if in_u.has(w) && w != i && w != j && !in_i.has(w) && !in_j.has(w) {
                            count += 1;
                        }
                    }
                }
            }
            count
        })
        .collect()
}

pub fn count_cycles(g: &Graph) -> CycleCounts {
    CycleCounts {
        triangles: count_triangles(g),
        squares: count_chordless_squares(g),
        pentagons: count_chordless_pentagons(g),
    }
}

/// The three densities plus the number of values that had to be clamped
/// into `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MotifDensities {
    pub triangles: EdgeWeighting<Rational>,
    pub squares: EdgeWeighting<Rational>,
    pub pentagons: EdgeWeighting<Rational>,
    pub clamped: usize,
}

impl MotifDensities {
    /// eΣ = eT + eS + eP, summed exactly.
    pub fn sum(&self) -> EdgeWeighting<Rational> {
        EdgeWeighting::new(
            self.triangles
                .values()
                .iter()
                .zip(self.squares.values())
                .zip(self.pentagons.values())
                .map(|((t, s), p)| t + s + p)
                .collect(),
        )
    }
}

fn ratio(num: u64, den: i64, clamped: &mut usize) -> Rational {
    if den <= 0 {
        return Rational::zero();
    }
    let r = Rational::new(num as i64, den);
    if r > Rational::one() {
        *clamped += 1;
        Rational::one()
    } else {
        r
    }
}

fn square_bound(g: &Graph, i: usize, j: usize, t: u64) -> i64 {
    let t = t as i64;
    let a = g.degree(i) as i64 - 1 - t;
    let b = g.degree(j) as i64 - 1 - t;
    if a <= 0 || b <= 0 {
        0
    } else {
        a * b
    }
}

fn pentagon_bound(g: &Graph, i: usize, j: usize) -> i64 {
    let mut total = 0i64;
    for &u in g.neighbors(i) {
        if u == j {
            continue;
        }
        let du = g.degree(u) as i64 - 1;
        for &v in g.neighbors(j) {
            if v == i || v == u {
                continue;
            }
            total += du.min(g.degree(v) as i64 - 1);
        }
    }
    total
}

/// All three densities from one pass of cycle counting.
pub fn motif_densities(g: &Graph) -> MotifDensities {
    let counts = count_cycles(g);
    let mut clamped = 0;
    let mut tri = Vec::with_capacity(g.n_edges());
    let mut sq = Vec::with_capacity(g.n_edges());
    let mut pent = Vec::with_capacity(g.n_edges());
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        let t = counts.triangles[e];
        let tri_den = g.degree(i).min(g.degree(j)) as i64 - 1;
        tri.push(ratio(t, tri_den, &mut clamped));
        sq.push(ratio(counts.squares[e], square_bound(g, i, j, t), &mut clamped));
        pent.push(ratio(counts.pentagons[e], pentagon_bound(g, i, j), &mut clamped));
    }
    MotifDensities {
        triangles: EdgeWeighting::new(tri),
        squares: EdgeWeighting::new(sq),
        pentagons: EdgeWeighting::new(pent),
        clamped,
    }
}

/// eT
pub fn density_triangles(g: &Graph) -> EdgeWeighting<Rational> {
    let mut clamped = 0;
    EdgeWeighting::new(
        g.edges()
            .iter()
            .map(|&(i, j)| {
                let t = g.common_neighbor_count(i, j) as u64;
                ratio(t, g.degree(i).min(g.degree(j)) as i64 - 1, &mut clamped)
            })
            .collect(),
    )
}

/// eS
pub fn density_squares(g: &Graph) -> EdgeWeighting<Rational> {
    let tri = count_triangles(g);
    let sq = count_chordless_squares(g);
    let mut clamped = 0;
    EdgeWeighting::new(
        g.edges()
            .iter()
            .enumerate()
            .map(|(e, &(i, j))| ratio(sq[e], square_bound(g, i, j, tri[e]), &mut clamped))
            .collect(),
    )
}

/// eP
pub fn density_pentagons(g: &Graph) -> EdgeWeighting<Rational> {
    let pent = count_chordless_pentagons(g);
    let mut clamped = 0;
    EdgeWeighting::new(
        g.edges()
            .iter()
            .enumerate()
            .map(|(e, &(i, j))| ratio(pent[e], pentagon_bound(g, i, j), &mut clamped))
            .collect(),
    )
}

/// eΣ
pub fn density_sum(g: &Graph) -> EdgeWeighting<Rational> {
    motif_densities(g).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn all(w: &EdgeWeighting<Rational>, v: Rational) -> bool {
        w.values().iter().all(|x| *x == v)
    }

    #[test]
    fn named_counts() {
        assert_eq!(count_triangles(&complete(3)), vec![1; 3]);
        assert_eq!(count_triangles(&cycle(4)), vec![0; 4]);
        assert_eq!(count_triangles(&petersen()), vec![0; 15]);
        assert_eq!(count_chordless_squares(&cycle(4)), vec![1; 4]);
        assert_eq!(count_chordless_squares(&complete(4)), vec![0; 6]);
        assert_eq!(count_chordless_pentagons(&cycle(5)), vec![1; 5]);
        assert_eq!(count_chordless_pentagons(&complete(5)), vec![0; 10]);
    }

    #[test]
    fn named_densities() {
        assert!(all(&density_triangles(&complete(3)), r(1, 1)));
        assert!(all(&density_triangles(&cycle(4)), r(0, 1)));
        assert!(all(&density_triangles(&star(3)), r(0, 1)));
        assert!(all(&density_squares(&cycle(4)), r(1, 1)));
        assert!(all(&density_squares(&complete(3)), r(0, 1)));
        assert!(all(&density_pentagons(&cycle(5)), r(1, 1)));
        assert!(all(&density_pentagons(&complete(3)), r(0, 1)));
        assert!(all(&density_sum(&cycle(5)), r(1, 1)));
        assert!(all(&density_sum(&complete(3)), r(1, 1)));
    }

    #[test]
    fn petersen_pentagon_density() {
        // 4 pentagons per edge over 2*2 candidate pairs of capacity 2
        assert!(all(&density_pentagons(&petersen()), r(4, 8)));
    }

    #[test]
    fn bounds_are_never_exceeded_on_dense_graphs() {
        for n in 3..8 {
            assert_eq!(motif_densities(&complete(n)).clamped, 0);
        }
    }
}

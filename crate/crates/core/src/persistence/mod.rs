//! Persistent homology over GF(2), diagrams and diagram distances.

mod bottleneck;
mod gate;
mod image;

pub use bottleneck::{bottleneck, bottleneck_all_dims};
pub use gate::{diagram_for, distinguish, Verdict, DISTINCT_THRESHOLD};
pub use image::{persistence_image, ImageGrid, ImageParams, PersistenceImage};

use std::fmt::Write as _;

use crate::complex::WeightedComplex;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PersistencePoint {
    pub dim: usize,
    pub birth: f64,
    /// `f64::INFINITY` for essential classes.
    pub death: f64,
}

impl PersistencePoint {
    pub fn is_essential(&self) -> bool {
        self.death.is_infinite()
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }
}

/// Multiset of points, kept sorted by `(dim, birth, death)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PersistenceDiagram {
    points: Vec<PersistencePoint>,
    max_dim: usize,
}

impl PersistenceDiagram {
    pub fn new(mut points: Vec<PersistencePoint>, max_dim: usize) -> Self {
        points.sort_by(|a, b| {
            a.dim
                .cmp(&b.dim)
                .then(a.birth.total_cmp(&b.birth))
                .then(a.death.total_cmp(&b.death))
        });
        PersistenceDiagram { points, max_dim }
    }

    /// All points, including zero-persistence pairs.
    pub fn points(&self) -> &[PersistencePoint] {
        &self.points
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn in_dim(&self, dim: usize) -> impl Iterator<Item = &PersistencePoint> + '_ {
        self.points.iter().filter(move |p| p.dim == dim)
    }

    /// Points with `death > birth` in `dim`.
    pub fn off_diagonal(&self, dim: usize) -> impl Iterator<Item = &PersistencePoint> + '_ {
        self.in_dim(dim).filter(|p| p.death > p.birth)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Largest absolute finite birth or death, or `None` if there are no
    /// points.
    pub fn max_abs_finite(&self) -> Option<f64> {
        self.points
            .iter()
            .flat_map(|p| [p.birth, p.death])
            .filter(|x| x.is_finite())
            .map(f64::abs)
            .reduce(f64::max)
    }

    /// Betti numbers of the sublevel complex at `t`.
    pub fn betti_at(&self, t: f64) -> Vec<usize> {
        let mut betti = vec![0; self.max_dim + 1];
        for p in &self.points {
            if p.birth <= t && t < p.death {
                betti[p.dim] += 1;
            }
        }
        betti
    }

    /// CSV with header `dim,birth,death`; infinite deaths are written `inf`.
    /// Zero-persistence pairs are left out unless `include_zero` is set.
    pub fn to_csv(&self, include_zero: bool) -> String {
        let mut out = String::from("dim,birth,death\n");
        for p in self.points.iter().filter(|p| include_zero || p.death > p.birth) {
            if p.is_essential() {
                writeln!(out, "{},{},inf", p.dim, p.birth).unwrap();
            } else {
                writeln!(out, "{},{},{}", p.dim, p.birth, p.death).unwrap();
            }
        }
        out
    }
}

/// Diagram scaled by its largest absolute finite value. A diagram whose
/// values are all zero (or that is empty) comes back unchanged, flagged
/// `true`.
pub fn normalize_diagram(d: &PersistenceDiagram) -> (PersistenceDiagram, bool) {
    match d.max_abs_finite() {
        Some(m) if m > 0.0 => {
            let points = d
                .points
                .iter()
                .map(|p| PersistencePoint {
                    dim: p.dim,
                    birth: p.birth / m,
                    death: p.death / m,
                })
                .collect();
            (PersistenceDiagram::new(points, d.max_dim), false)
        }
        _ => (d.clone(), true),
    }
}

/// Standard column reduction with clearing, dimensions processed from the
/// top down. Homology is reported in dimensions `0..=c.max_dim()`.
pub fn compute_persistence(c: &WeightedComplex) -> PersistenceDiagram {
    let simplices = c.simplices();
    let n = simplices.len();
    let index = c.index();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
    // pivot_of[row] = column whose lowest entry is `row`
    let mut pivot_of: Vec<Option<usize>> = vec![None; n];
    let mut cleared = vec![false; n];
    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); c.max_dim() + 1];
    for (i, s) in simplices.iter().enumerate() {
        by_dim[s.dim()].push(i);
    }

    for dim in (1..=c.max_dim()).rev() {
        for &j in &by_dim[dim] {
            if cleared[j] {
                continue;
            }
            let mut col = c.boundary(j, &index);
            while let Some(&low) = col.last() {
                match pivot_of[low] {
                    Some(other) => col = symmetric_difference(&col, &columns[other]),
                    None => break,
                }
            }
            if let Some(&low) = col.last() {
                pivot_of[low] = Some(j);
                cleared[low] = true;
            }
            columns[j] = col;
        }
    }

    let mut points = Vec::new();
    for (i, s) in simplices.iter().enumerate() {
        let positive = columns[i].is_empty();
        if !positive {
            continue;
        }
        let death = match pivot_of[i] {
            Some(j) => simplices[j].value,
            None => f64::INFINITY,
        };
        points.push(PersistencePoint {
            dim: s.dim(),
            birth: s.value,
            death,
        });
    }
    PersistenceDiagram::new(points, c.max_dim())
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::clique_expand;
    use crate::graph::named::*;
    use crate::graph::Graph;

    fn pt(dim: usize, birth: f64, death: f64) -> PersistencePoint {
        PersistencePoint { dim, birth, death }
    }

    #[test]
    fn single_node() {
        let c = clique_expand(&Graph::empty(1), &[0.25], &[], 1);
        let d = compute_persistence(&c);
        assert_eq!(d.points(), &[pt(0, 0.25, f64::INFINITY)]);
        assert_eq!(d.to_csv(false), "dim,birth,death\n0,0.25,inf\n");
    }

    #[test]
    fn cycle_has_essential_loop() {
        let c = clique_expand(&cycle(4), &[1.0; 4], &[1.0; 4], 1);
        let d = compute_persistence(&c);
        let nonzero: Vec<_> = d.points().iter().filter(|p| p.death > p.birth).collect();
        assert_eq!(nonzero, vec![&pt(0, 1.0, f64::INFINITY), &pt(1, 1.0, f64::INFINITY)]);
    }

    #[test]
    fn filled_triangle_kills_its_cycle_immediately() {
        // edges (0,1)=1, (0,2)=2, (1,2)=3; nodes at the global minimum
        let c = clique_expand(&complete(3), &[1.0; 3], &[1.0, 2.0, 3.0], 2);
        let d = compute_persistence(&c);
        assert_eq!(d.in_dim(1).collect::<Vec<_>>(), vec![&pt(1, 3.0, 3.0)]);
        assert_eq!(d.off_diagonal(1).count(), 0);
        assert_eq!(d.in_dim(2).count(), 0);
    }

    #[test]
    fn normalization() {
        let d = PersistenceDiagram::new(vec![pt(0, 1.0, 4.0), pt(0, 2.0, f64::INFINITY)], 0);
        let (n, degenerate) = normalize_diagram(&d);
        assert!(!degenerate);
        assert_eq!(n.points(), &[pt(0, 0.25, 1.0), pt(0, 0.5, f64::INFINITY)]);
        let zero = PersistenceDiagram::new(vec![pt(0, 0.0, f64::INFINITY)], 0);
        assert!(normalize_diagram(&zero).1);
        assert!(normalize_diagram(&PersistenceDiagram::default()).1);
    }
}

//! Bottleneck distance between persistence diagrams, per dimension.
//!
//! Finite points are matched with diagonal augmentation under the L∞ norm:
//! the answer is the smallest candidate cost (a pairwise L∞ distance or a
//! half persistence) that admits a perfect matching, found by binary search
//! with Hopcroft–Karp. Essential points only match each other; matching
//! them in sorted birth order is optimal on a line.

use std::collections::VecDeque;

use super::{PersistenceDiagram, PersistencePoint};

fn linf(a: &PersistencePoint, b: &PersistencePoint) -> f64 {
    (a.birth - b.birth).abs().max((a.death - b.death).abs())
}

fn half_persistence(p: &PersistencePoint) -> f64 {
    (p.death - p.birth) / 2.0
}

/// Distance restricted to homology dimension `dim`. Zero-persistence points
/// are ignored; unequal numbers of essential classes give `f64::INFINITY`.
pub fn bottleneck(d1: &PersistenceDiagram, d2: &PersistenceDiagram, dim: usize) -> f64 {
    let split = |d: &PersistenceDiagram| {
        let (ess, fin): (Vec<PersistencePoint>, Vec<PersistencePoint>) =
            d.off_diagonal(dim).copied().partition(PersistencePoint::is_essential);
        let mut births: Vec<f64> = ess.iter().map(|p| p.birth).collect();
        births.sort_by(f64::total_cmp);
        (births, fin)
    };
    let (e1, f1) = split(d1);
    let (e2, f2) = split(d2);
    if e1.len() != e2.len() {
        return f64::INFINITY;
    }
    let essential = e1
        .iter()
        .zip(&e2)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    essential.max(finite_bottleneck(&f1, &f2))
}

/// Largest per-dimension distance over `0..=max_dim`, with the dimension
/// that attains it (the lowest one on ties).
pub fn bottleneck_all_dims(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> (usize, f64) {
    let top = d1.max_dim().max(d2.max_dim());
    (0..=top)
        .map(|dim| (dim, bottleneck(d1, d2, dim)))
        .fold((0, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best })
}

fn finite_bottleneck(a: &[PersistencePoint], b: &[PersistencePoint]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    let mut candidates: Vec<f64> = a.iter().chain(b).map(half_persistence).collect();
    for p in a {
        for q in b {
            candidates.push(linf(p, q));
        }
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    // the largest half persistence always admits the all-diagonal matching
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if has_perfect_matching(a, b, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

/// Left side: points of `a`, then diagonal slots for points of `b`.
/// Right side: points of `b`, then diagonal slots for points of `a`.
fn has_perfect_matching(a: &[PersistencePoint], b: &[PersistencePoint], eps: f64) -> bool {
    let (na, nb) = (a.len(), b.len());
    let size = na + nb;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); size];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            if linf(p, q) <= eps {
                adj[i].push(j);
            }
        }
        if half_persistence(p) <= eps {
            adj[i].push(nb + i);
        }
    }
    for (j, q) in b.iter().enumerate() {
        let left = na + j;
        if half_persistence(q) <= eps {
            adj[left].push(j);
        }
        // diagonal to diagonal is free
        adj[left].extend(nb..nb + na);
    }
    hopcroft_karp(&adj, size) == size
}

fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> usize {
    const FREE: usize = usize::MAX;
    let n_left = adj.len();
    let mut match_left = vec![FREE; n_left];
    let mut match_right = vec![FREE; n_right];
    let mut layer = vec![0usize; n_left];
    let mut matched = 0;
    loop {
        // BFS from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if match_left[u] == FREE {
                layer[u] = 0;
                queue.push_back(u);
            } else {
                layer[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = match_right[v];
                if w == FREE {
                    found = true;
                } else if layer[w] == usize::MAX {
                    layer[w] = layer[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            return matched;
        }
        let mut next_edge = vec![0usize; n_left];
        for u in 0..n_left {
            if match_left[u] == FREE
                && augment(u, adj, &mut match_left, &mut match_right, &mut layer, &mut next_edge)
            {
                matched += 1;
            }
        }
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    layer: &mut [usize],
    next_edge: &mut [usize],
) -> bool {
    while next_edge[u] < adj[u].len() {
        let v = adj[u][next_edge[u]];
        next_edge[u] += 1;
        let w = match_right[v];
        let ok = w == usize::MAX
            || (layer[w] == layer[u] + 1
                && augment(w, adj, match_left, match_right, layer, next_edge));
        if ok {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    layer[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(points: &[(f64, f64)]) -> PersistenceDiagram {
        PersistenceDiagram::new(
            points
                .iter()
                .map(|&(birth, death)| PersistencePoint { dim: 0, birth, death })
                .collect(),
            0,
        )
    }

    #[test]
    fn identical_and_empty() {
        let d = diagram(&[(0.0, 1.0), (0.5, f64::INFINITY)]);
        assert_eq!(bottleneck(&d, &d, 0), 0.0);
        assert_eq!(bottleneck(&diagram(&[]), &diagram(&[]), 0), 0.0);
    }

    #[test]
    fn single_point_to_diagonal() {
        assert_eq!(bottleneck(&diagram(&[(0.0, 2.0)]), &diagram(&[]), 0), 1.0);
    }

    #[test]
    fn essential_counts_must_agree() {
        let a = diagram(&[(0.0, f64::INFINITY)]);
        let b = diagram(&[(0.0, f64::INFINITY), (1.0, f64::INFINITY)]);
        assert_eq!(bottleneck(&a, &b, 0), f64::INFINITY);
        let c = diagram(&[(0.75, f64::INFINITY)]);
        assert_eq!(bottleneck(&a, &c, 0), 0.75);
    }

    #[test]
    fn prefers_cheaper_of_matching_or_diagonal() {
        let a = diagram(&[(0.0, 10.0)]);
        let b = diagram(&[(1.0, 10.0)]);
        assert_eq!(bottleneck(&a, &b, 0), 1.0);
        let a = diagram(&[(0.0, 1.0)]);
        let b = diagram(&[(5.0, 6.0)]);
        assert_eq!(bottleneck(&a, &b, 0), 0.5);
    }

    #[test]
    fn zero_persistence_points_are_ignored() {
        let a = diagram(&[(1.0, 1.0), (0.0, 2.0)]);
        let b = diagram(&[(0.0, 2.0)]);
        assert_eq!(bottleneck(&a, &b, 0), 0.0);
    }
}

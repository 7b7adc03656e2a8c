//! Brute-force reference implementations and random inputs, shared by the
//! integration tests and the acceptance suite. Nothing here calls into the
//! library's own algorithms; each oracle recomputes its quantity from
//! definitions by enumeration.
#![allow(dead_code)]

use std::collections::VecDeque;

use motifph::complex::WeightedComplex;
use motifph::graph::{named, rng_for, GeneratorModel, GeneratorSpec, Graph};
use motifph::persistence::{bottleneck, PersistenceDiagram, PersistencePoint};
use motifph::pipelines::GraphProperties;
use motifph::{classic, motif, Rational};
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha20Rng;

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha20Rng {
    rng_for(seed, 7)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A random ER, BA or WS graph with at most `max_n` nodes.
pub fn random_model_graph(rng: &mut impl Rng, max_n: usize, seed: u64) -> Graph {
    let n = rng.random_range(5..=max_n);
    let model = match rng.random_range(0..3) {
        0 => GeneratorModel::ErdosRenyi {
            p: rng.random_range(0.05..0.5),
        },
        1 => GeneratorModel::BarabasiAlbert {
            m: rng.random_range(1..=3.min(n - 1)),
        },
        _ => GeneratorModel::WattsStrogatz {
            beta: rng.random_range(0.0..0.5),
            s: 2 * rng.random_range(1..=2),
        },
    };
    motifph::graph::generate(&GeneratorSpec { model, n, seed }).unwrap()
}

/// Every labeled graph on `n` nodes.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("C4", named::cycle(4)),
        ("C5", named::cycle(5)),
        ("K4", named::complete(4)),
        ("K5", named::complete(5)),
        ("Petersen", named::petersen()),
    ]
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), &mut f);
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n_nodes();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn edge_position(g: &Graph, u: usize, v: usize) -> usize {
    let key = (u.min(v), u.max(v));
    g.edges().iter().position(|&e| e == key).unwrap()
}

// ---------------------------------------------------------------- cycles

/// Per-edge count of induced cycles on `len` vertices, found by testing
/// every vertex subset.
pub fn induced_cycles(g: &Graph, len: usize) -> Vec<u64> {
    let a = adjacency(g);
    let mut counts = vec![0u64; g.n_edges()];
    combinations(g.n_nodes(), len, |s| {
        if s.iter().any(|&x| s.iter().filter(|&&y| a[x][y]).count() != 2) {
            return;
        }
        // 2-regular: a single cycle iff a walk visits every vertex
        let (mut prev, mut cur, mut seen) = (usize::MAX, s[0], 1);
        loop {
            let next = *s.iter().find(|&&y| a[cur][y] && y != prev).unwrap();
            if next == s[0] {
                break;
            }
            prev = cur;
            cur = next;
            seen += 1;
        }
        if seen != len {
            return;
        }
        for (i, &x) in s.iter().enumerate() {
            for &y in &s[i + 1..] {
                if a[x][y] {
                    counts[edge_position(g, x, y)] += 1;
                }
            }
        }
    });
    counts
}

pub fn check_cycle_counts(g: &Graph) -> Check {
    let got = [
        motif::count_triangles(g),
        motif::count_chordless_squares(g),
        motif::count_chordless_pentagons(g),
    ];
    for (len, counts) in (3..=5).zip(got) {
        let want = induced_cycles(g, len);
        if counts != want {
            return Err(format!("{len}-cycles on {:?}: got {counts:?}, want {want:?}", g.edges()));
        }
    }
    Ok(())
}

// ---------------------------------------------------------- betweenness

fn bfs(a: &[Vec<bool>], s: usize) -> Vec<Option<usize>> {
    let n = a.len();
    let mut dist = vec![None; n];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for w in 0..n {
            if a[v][w] && dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                q.push_back(w);
            }
        }
    }
    dist
}

/// Every shortest `s`–`t` path, listed explicitly.
fn shortest_paths(a: &[Vec<bool>], s: usize, t: usize) -> Vec<Vec<usize>> {
    let from_t = bfs(a, t);
    let Some(total) = from_t[s] else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut path = vec![s];
    fn walk(a: &[Vec<bool>], from_t: &[Option<usize>], t: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        if v == t {
            out.push(path.clone());
            return;
        }
        let here = from_t[v].unwrap();
        for w in 0..a.len() {
            if a[v][w] && from_t[w] == Some(here - 1) {
                path.push(w);
                walk(a, from_t, t, path, out);
                path.pop();
            }
        }
    }
    walk(a, &from_t, t, &mut path, &mut out);
    debug_assert!(out.iter().all(|p| p.len() == total + 1));
    out
}

/// Edge betweenness over unordered pairs from explicit path lists.
pub fn edge_betweenness_by_paths(g: &Graph) -> Vec<Ratio<i64>> {
    let a = adjacency(g);
    let n = g.n_nodes();
    let mut score = vec![Ratio::from_integer(0); g.n_edges()];
    for s in 0..n {
        for t in s + 1..n {
            let paths = shortest_paths(&a, s, t);
            let share = Ratio::new(1, paths.len().max(1) as i64);
            for p in &paths {
                for w in p.windows(2) {
                    score[edge_position(g, w[0], w[1])] += share;
                }
            }
        }
    }
    score
}

/// Node betweenness over unordered pairs from explicit path lists.
pub fn node_betweenness_by_paths(g: &Graph) -> Vec<Ratio<i64>> {
    let a = adjacency(g);
    let n = g.n_nodes();
    let mut score = vec![Ratio::from_integer(0); n];
    for s in 0..n {
        for t in s + 1..n {
            let paths = shortest_paths(&a, s, t);
            let share = Ratio::new(1, paths.len().max(1) as i64);
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    score[v] += share;
                }
            }
        }
    }
    score
}

pub fn check_betweenness(g: &Graph) -> Check {
    let want = edge_betweenness_by_paths(g);
    let got = classic::edge_betweenness_exact(g).ok_or("exact betweenness overflowed")?;
    for (e, w) in want.iter().enumerate() {
        let x = got.get(e);
        let w128 = Ratio::new(*w.numer() as i128, *w.denom() as i128);
        if *x != w128 {
            return Err(format!("edge {:?}: got {x}, want {w}", g.edges()[e]));
        }
    }
    Ok(())
}

// --------------------------------------------------------- Ollivier–Ricci

/// Minimum-cost perfect assignment on a square integer matrix (Hungarian
/// method with potentials).
pub fn assignment_cost(cost: &[Vec<i64>]) -> i64 {
    let n = cost.len();
    const INF: i64 = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    (1..=n).map(|j| cost[p[j] - 1][j - 1]).sum()
}

/// κ(u, v) = 1 − W₁(m_u, m_v) for the non-lazy walk, with W₁ solved as an
/// assignment between `lcm(deg u, deg v)` unit masses.
pub fn ricci_by_assignment(g: &Graph, u: usize, v: usize) -> Rational {
    let a = adjacency(g);
    let nu: Vec<usize> = (0..g.n_nodes()).filter(|&x| a[u][x]).collect();
    let nv: Vec<usize> = (0..g.n_nodes()).filter(|&x| a[v][x]).collect();
    let l = num_integer::lcm(nu.len(), nv.len());
    let left: Vec<usize> = nu.iter().flat_map(|&x| std::iter::repeat_n(x, l / nu.len())).collect();
    let right: Vec<usize> = nv.iter().flat_map(|&x| std::iter::repeat_n(x, l / nv.len())).collect();
    let dist: Vec<Vec<Option<usize>>> = left.iter().map(|&x| bfs(&a, x)).collect();
    let cost: Vec<Vec<i64>> = dist
        .iter()
        .map(|d| right.iter().map(|&y| d[y].expect("neighbors of an edge are connected") as i64).collect())
        .collect();
    Rational::from_integer(1) - Rational::new(assignment_cost(&cost), l as i64)
}

pub fn check_ricci_edge(g: &Graph, e: usize) -> Check {
    let (u, v) = g.edges()[e];
    let want = ricci_by_assignment(g, u, v);
    let got = *classic::ollivier_ricci(g, Rational::from_integer(0)).get(e);
    let gap = (motifph::weighting::rational_to_f64(&got) - motifph::weighting::rational_to_f64(&want)).abs();
    if got != want || gap > 1e-12 {
        return Err(format!("edge ({u},{v}) of {:?}: got {got}, want {want}", g.edges()));
    }
    Ok(())
}

// -------------------------------------------------------------- bottleneck

fn linf(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

/// Bottleneck distance by trying every partial matching of finite points
/// and every pairing of essential births.
pub fn bottleneck_brute(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let (ea, fa): (Vec<_>, Vec<_>) = a.iter().partition(|p| p.1.is_infinite());
    let (eb, fb): (Vec<_>, Vec<_>) = b.iter().partition(|p| p.1.is_infinite());
    if ea.len() != eb.len() {
        return f64::INFINITY;
    }
    fn finite(i: usize, a: &[(f64, f64)], b: &[(f64, f64)], used: &mut [bool], worst: f64) -> f64 {
        if i == a.len() {
            let rest = b
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(p, _)| (p.1 - p.0) / 2.0)
                .fold(0.0, f64::max);
            return worst.max(rest);
        }
        let mut best = finite(i + 1, a, b, used, worst.max((a[i].1 - a[i].0) / 2.0));
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                best = best.min(finite(i + 1, a, b, used, worst.max(linf(a[i], b[j]))));
                used[j] = false;
            }
        }
        best
    }
    fn essential(i: usize, a: &[f64], b: &[f64], used: &mut [bool], worst: f64) -> f64 {
        if i == a.len() {
            return worst;
        }
        let mut best = f64::INFINITY;
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                best = best.min(essential(i + 1, a, b, used, worst.max((a[i] - b[j]).abs())));
                used[j] = false;
            }
        }
        best
    }
    let f = finite(0, &fa, &fb, &mut vec![false; fb.len()], 0.0);
    let ba: Vec<f64> = ea.iter().map(|p| p.0).collect();
    let bb: Vec<f64> = eb.iter().map(|p| p.0).collect();
    f.max(essential(0, &ba, &bb, &mut vec![false; bb.len()], 0.0))
}

/// Up to `max_points` points on a grid of quarters, some essential.
pub fn random_points(rng: &mut impl Rng, max_points: usize) -> Vec<(f64, f64)> {
    let n = rng.random_range(0..=max_points);
    (0..n)
        .map(|_| {
            let b = rng.random_range(0..16) as f64 / 4.0;
            if rng.random_bool(0.2) {
                (b, f64::INFINITY)
            } else {
                (b, b + rng.random_range(0..12) as f64 / 4.0)
            }
        })
        .collect()
}

pub fn diagram(points: &[(f64, f64)]) -> PersistenceDiagram {
    PersistenceDiagram::new(
        points
            .iter()
            .map(|&(birth, death)| PersistencePoint { dim: 0, birth, death })
            .collect(),
        0,
    )
}

pub fn check_bottleneck(a: &[(f64, f64)], b: &[(f64, f64)]) -> Check {
    let want = bottleneck_brute(a, b);
    let got = bottleneck(&diagram(a), &diagram(b), 0);
    if got != want {
        return Err(format!("{a:?} vs {b:?}: got {got}, want {want}"));
    }
    Ok(())
}

// ------------------------------------------------------ complex topology

/// Euler characteristic and component count of every sublevel complex,
/// against the Betti numbers read off the diagram.
pub fn check_topology(c: &WeightedComplex, d: &PersistenceDiagram) -> Check {
    let simplices = c.simplices();
    let mut levels: Vec<f64> = simplices.iter().map(|s| s.value).collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let n = simplices
        .iter()
        .flat_map(|s| s.vertices.iter().copied())
        .max()
        .map_or(0, |m| m + 1);
    for &t in &levels {
        let present: Vec<_> = simplices.iter().filter(|s| s.value <= t).collect();
        let chi: i64 = present.iter().map(|s| if s.dim() % 2 == 0 { 1 } else { -1 }).sum();
        let betti = d.betti_at(t);
        let alt: i64 = betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        if chi != alt {
            return Err(format!("at t={t}: Euler characteristic {chi}, Betti sum {alt} ({betti:?})"));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut components = present.iter().filter(|s| s.dim() == 0).count();
        for s in present.iter().filter(|s| s.dim() == 1) {
            let (a, b) = (find(&mut parent, s.vertices[0]), find(&mut parent, s.vertices[1]));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        if components != betti[0] {
            return Err(format!("at t={t}: {components} components, {} dimension-0 bars", betti[0]));
        }
    }
    Ok(())
}

/// Clique counts by size, from every vertex subset.
pub fn clique_counts(g: &Graph, max_size: usize) -> Vec<usize> {
    let a = adjacency(g);
    (1..=max_size)
        .map(|k| {
            let mut count = 0;
            combinations(g.n_nodes(), k, |s| {
                if s.iter().enumerate().all(|(i, &x)| s[i + 1..].iter().all(|&y| a[x][y])) {
                    count += 1;
                }
            });
            count
        })
        .collect()
}

// --------------------------------------------------------------- graphlets

/// Edges of a graphlet and the orbit of each of its positions.
type Template = (Vec<(usize, usize)>, Vec<usize>);

/// Connected graphlets on 2–4 nodes.
fn templates() -> Vec<Template> {
    vec![
        (vec![(0, 1)], vec![0, 0]),
        (vec![(0, 1), (1, 2)], vec![1, 2, 1]),
        (vec![(0, 1), (1, 2), (0, 2)], vec![3, 3, 3]),
        (vec![(0, 1), (1, 2), (2, 3)], vec![4, 5, 5, 4]),
        (vec![(0, 1), (0, 2), (0, 3)], vec![7, 6, 6, 6]),
        (vec![(0, 1), (1, 2), (2, 3), (3, 0)], vec![8, 8, 8, 8]),
        (vec![(0, 1), (1, 2), (0, 2), (2, 3)], vec![10, 10, 11, 9]),
        (vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], vec![13, 12, 13, 12]),
        (vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], vec![14, 14, 14, 14]),
    ]
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Orbit counts by matching every connected induced subgraph on 2–4 nodes
/// against the templates under all vertex bijections.
pub fn graphlet_orbits_naive(g: &Graph) -> Vec<[u64; 15]> {
    let a = adjacency(g);
    let n = g.n_nodes();
    let templates = templates();
    let mut counts = vec![[0u64; 15]; n];
    for size in 2..=4 {
        let perms = permutations(size);
        combinations(n, size, |s| {
            for (edges, orbits) in templates.iter().filter(|t| t.1.len() == size) {
                let mut ta = vec![vec![false; size]; size];
                for &(x, y) in edges {
                    ta[x][y] = true;
                    ta[y][x] = true;
                }
                // perm maps subset position -> template position
                if let Some(p) = perms
                    .iter()
                    .find(|p| (0..size).all(|i| (0..size).all(|j| i == j || a[s[i]][s[j]] == ta[p[i]][p[j]])))
                {
                    for i in 0..size {
                        counts[s[i]][orbits[p[i]]] += 1;
                    }
                    return;
                }
            }
        });
    }
    counts
}

pub fn check_graphlets(g: &Graph) -> Check {
    let want = graphlet_orbits_naive(g);
    let got = classic::graphlet_orbits(g);
    if got != want {
        return Err(format!("orbits of {:?}: got {got:?}, want {want:?}", g.edges()));
    }
    Ok(())
}

// -------------------------------------------------------------- properties

/// All-pairs distances by Floyd–Warshall.
fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n_nodes();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Shortest cycle through any edge: 1 + distance between its endpoints once
/// the edge is removed.
fn girth_by_edge_removal(g: &Graph) -> i64 {
    (0..g.n_edges())
        .filter_map(|e| {
            let (u, v) = g.edges()[e];
            floyd(&g.without_edge(e))[u][v].map(|d| d as i64 + 1)
        })
        .min()
        .unwrap_or(-1)
}

pub fn properties_naive(g: &Graph) -> GraphProperties {
    let n = g.n_nodes();
    let nf = n as f64;
    let a = adjacency(g);
    let d = floyd(g);
    let deg: Vec<usize> = a.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    let mean = deg.iter().sum::<usize>() as f64 / nf;
    let mean_sq = deg.iter().map(|&x| (x * x) as f64).sum::<f64>() / nf;
    let clustering: f64 = (0..n)
        .map(|v| {
            let nb: Vec<usize> = (0..n).filter(|&w| a[v][w]).collect();
            if nb.len() < 2 {
                return 0.0;
            }
            let mut links = 0;
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    links += usize::from(a[nb[i]][nb[j]]);
                }
            }
            links as f64 / (nb.len() * (nb.len() - 1) / 2) as f64
        })
        .sum::<f64>()
        / nf;
    let closeness: f64 = (0..n)
        .map(|v| {
            let reach: Vec<usize> = (0..n).filter(|&w| w != v).filter_map(|w| d[v][w]).collect();
            let total: usize = reach.iter().sum();
            if total == 0 {
                0.0
            } else {
                let r = reach.len() as f64;
                r / total as f64 * r / (nf - 1.0)
            }
        })
        .sum::<f64>()
        / nf;
    let pair_dists: Vec<usize> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .filter_map(|(u, v)| d[u][v])
        .collect();
    let ecc: Vec<usize> = (0..n).map(|v| d[v].iter().flatten().copied().max().unwrap_or(0)).collect();
    // component of v = smallest reachable node
    let comp: Vec<usize> = (0..n).map(|v| (0..n).find(|&w| d[v][w].is_some()).unwrap()).collect();
    let max_radius = (0..n)
        .filter(|&v| comp[v] == v)
        .map(|c| (0..n).filter(|&v| comp[v] == c).map(|v| ecc[v]).min().unwrap())
        .max()
        .unwrap_or(0);
    let betweenness = node_betweenness_by_paths(g);
    let avg_betweenness = if n > 2 {
        let pairs = ((n - 1) * (n - 2) / 2) as i64;
        betweenness
            .iter()
            .map(|b| motifph::weighting::rational_to_f64(&Ratio::new(*b.numer(), b.denom() * pairs)))
            .sum::<f64>()
            / nf
    } else {
        0.0
    };
    GraphProperties {
        avg_closeness: closeness,
        avg_degree: mean,
        avg_clustering: clustering,
        degree_heterogeneity: if mean == 0.0 { 0.0 } else { mean_sq / (mean * mean) },
        avg_betweenness,
        min_degree: deg.iter().copied().min().unwrap_or(0),
        max_degree: deg.iter().copied().max().unwrap_or(0),
        avg_shortest_path: if pair_dists.is_empty() {
            0.0
        } else {
            pair_dists.iter().sum::<usize>() as f64 / pair_dists.len() as f64
        },
        max_radius,
        max_diameter: ecc.iter().copied().max().unwrap_or(0),
        girth: girth_by_edge_removal(g),
    }
}

pub fn check_properties(g: &Graph) -> Check {
    let got = GraphProperties::compute(g);
    let want = properties_naive(g);
    let reals = [
        ("avg_closeness", got.avg_closeness, want.avg_closeness),
        ("avg_degree", got.avg_degree, want.avg_degree),
        ("avg_clustering", got.avg_clustering, want.avg_clustering),
        ("degree_heterogeneity", got.degree_heterogeneity, want.degree_heterogeneity),
        ("avg_betweenness", got.avg_betweenness, want.avg_betweenness),
        ("avg_shortest_path", got.avg_shortest_path, want.avg_shortest_path),
    ];
    for (name, x, y) in reals {
        if (x - y).abs() > 1e-9 {
            return Err(format!("{name} of {:?}: got {x}, want {y}", g.edges()));
        }
    }
    let ints = [
        ("min_degree", got.min_degree as i64, want.min_degree as i64),
        ("max_degree", got.max_degree as i64, want.max_degree as i64),
        ("max_radius", got.max_radius as i64, want.max_radius as i64),
        ("max_diameter", got.max_diameter as i64, want.max_diameter as i64),
        ("girth", got.girth, want.girth),
    ];
    for (name, x, y) in ints {
        if x != y {
            return Err(format!("{name} of {:?}: got {x}, want {y}", g.edges()));
        }
    }
    Ok(())
}

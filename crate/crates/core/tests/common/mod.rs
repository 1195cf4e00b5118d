//! Reference implementations shared by the integration tests. None of these
//! call into the library's algebra or matrix code.

#![allow(dead_code)]

use neutrotrop::{ExtReal, NeutroMatrix, NeutroNumber, WeightedDigraph};
use rand::Rng;

pub fn nn(a: i32, b: i32) -> NeutroNumber {
    NeutroNumber::new(a, b)
}

pub fn int_nn<R: Rng>(rng: &mut R, lo: i32, hi: i32) -> NeutroNumber {
    nn(rng.random_range(lo..=hi), rng.random_range(lo..=hi))
}

pub fn random_matrix<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    lo: i32,
    hi: i32,
) -> NeutroMatrix {
    let entries = (0..rows * cols).map(|_| int_nn(rng, lo, hi)).collect();
    NeutroMatrix::new(rows, cols, entries).unwrap()
}

/// Random digraph with roughly half of all ordered pairs (self-loops
/// included) present; components drawn from `lo..=hi`.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    lo: i32,
    hi: i32,
    with_b: bool,
) -> WeightedDigraph {
    let mut g = WeightedDigraph::new(n).unwrap();
    for from in 0..n {
        for to in 0..n {
            if rng.random_bool(0.5) {
                let a = rng.random_range(lo..=hi);
                let b = if with_b { rng.random_range(lo..=hi) } else { 0 };
                g.add_edge(from, to, nn(a, b)).unwrap();
            }
        }
    }
    g
}

/// Plain `f64` components of a number.
pub fn parts(x: NeutroNumber) -> (f64, f64) {
    (x.a.value(), x.b.value())
}

pub fn from_parts(a: f64, b: f64) -> NeutroNumber {
    NeutroNumber::from_f64(a, b).unwrap()
}

/// Real min-plus: `min` and `+` on plain floats (finite inputs only).
pub mod minplus {
    pub fn add(x: f64, y: f64) -> f64 {
        if x < y {
            x
        } else {
            y
        }
    }

    pub fn mul(x: f64, y: f64) -> f64 {
        x + y
    }
}

/// Classical Floyd-Warshall on real weights; `None` entries are missing edges.
pub fn floyd_warshall(n: usize, weights: &[Option<f64>]) -> Vec<f64> {
    let mut d = vec![f64::INFINITY; n * n];
    for i in 0..n {
        d[i * n + i] = 0.0;
    }
    for i in 0..n {
        for j in 0..n {
            if let Some(w) = weights[i * n + j] {
                if w < d[i * n + j] {
                    d[i * n + j] = w;
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i * n + k] + d[k * n + j];
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    d
}

/// Componentwise least cost over every simple path `i -> j` (no repeated
/// nodes), plus the empty path when `i == j`. Unreachable pairs are
/// `+inf + infI`.
pub fn simple_path_costs(g: &WeightedDigraph) -> Vec<(f64, f64)> {
    let n = g.node_count();
    let mut best = vec![(f64::INFINITY, f64::INFINITY); n * n];
    for src in 0..n {
        best[src * n + src] = (0.0, 0.0);
        let mut visited = vec![false; n];
        visited[src] = true;
        dfs(g, src, src, (0.0, 0.0), &mut visited, &mut best);
    }
    best
}

fn dfs(
    g: &WeightedDigraph,
    src: usize,
    at: usize,
    cost: (f64, f64),
    visited: &mut [bool],
    best: &mut [(f64, f64)],
) {
    let n = g.node_count();
    for next in 0..n {
        if visited[next] {
            continue;
        }
        let Some(w) = g.weight(at, next) else {
            continue;
        };
        let c = (cost.0 + w.a.value(), cost.1 + w.b.value());
        let slot = &mut best[src * n + next];
        slot.0 = slot.0.min(c.0);
        slot.1 = slot.1.min(c.1);
        visited[next] = true;
        dfs(g, src, next, c, visited, best);
        visited[next] = false;
    }
}

pub fn as_matrix(n: usize, costs: &[(f64, f64)]) -> NeutroMatrix {
    let entries = costs.iter().map(|&(a, b)| from_parts(a, b)).collect();
    NeutroMatrix::new(n, n, entries).unwrap()
}

pub fn pos_inf() -> ExtReal {
    ExtReal::POS_INF
}

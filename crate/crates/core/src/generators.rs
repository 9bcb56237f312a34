//! Textbook graph constructors.
//!
//! These panic on sizes for which the graph is undefined (for example a
//! cycle on two vertices); [`crate::families::generate`] is the fallible
//! entry point used for user input.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// `C_k` on `0..k` with edges `i ~ i+1 (mod k)`. Panics if `k < 3`.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycle needs at least 3 vertices");
    Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
}

/// `P_k`: the path on `k` vertices `0 - 1 - .. - (k-1)`. Panics if `k == 0`.
pub fn path(k: usize) -> Graph {
    assert!(k >= 1, "path needs at least 1 vertex");
    Graph::new(k, (1..k).map(|i| (i - 1, i))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// `K_{s,s}` minus the perfect matching `{i, s+i}`; parts `0..s` and `s..2s`.
pub fn complete_bipartite_minus_matching(s: usize) -> Graph {
    Graph::new(
        2 * s,
        (0..s).flat_map(|u| (0..s).filter(move |&v| v != u).map(move |v| (u, s + v))),
    )
    .unwrap()
}

/// Index of grid vertex `(i, j)` (1-based row and column) in a grid with
/// `cols` columns.
pub fn grid_index(cols: usize, i: usize, j: usize) -> usize {
    (i - 1) * cols + (j - 1)
}

/// The `rows x cols` grid; vertex `(i, j)` is [`grid_index`]`(cols, i, j)`.
pub fn grid_rect(rows: usize, cols: usize) -> Graph {
    assert!(rows >= 1 && cols >= 1, "grid needs positive dimensions");
    let mut edges = Vec::new();
    for i in 1..=rows {
        for j in 1..=cols {
            let v = grid_index(cols, i, j);
            if j < cols {
                edges.push((v, grid_index(cols, i, j + 1)));
            }
            if i < rows {
                edges.push((v, grid_index(cols, i + 1, j)));
            }
        }
    }
    Graph::new(rows * cols, edges).unwrap()
}

/// The `n x n` grid.
pub fn grid(n: usize) -> Graph {
    grid_rect(n, n)
}

/// The `d`-dimensional hypercube `Q_d`.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    Graph::new(
        n,
        (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)),
    )
    .unwrap()
}

/// `G(n, p)`: every pair is an edge independently with probability `p`.
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Inserts random pairs that close no triangle until `tries` attempts fail
/// or `target` edges are placed.
pub fn random_triangle_free<R: Rng>(n: usize, target: usize, rng: &mut R) -> Graph {
    let mut adj = vec![0u64; n];
    let mut edges = Vec::new();
    let mut tries = 0;
    while edges.len() < target && tries < 20 * n * n && n >= 2 {
        tries += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || adj[u] >> v & 1 == 1 || adj[u] & adj[v] != 0 {
            continue;
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        edges.push((u, v));
    }
    Graph::new(n, edges).unwrap()
}

/// Reproducible mix of dense random graphs and triangle-free ones with
/// `2..=max_n` vertices.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    assert!((2..=64).contains(&max_n));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=max_n);
            if i % 2 == 0 {
                let p = rng.gen_range(0.2..0.6);
                random_gnp(n, p, &mut rng)
            } else {
                let target = rng.gen_range(n - 1..=n * n / 4);
                random_triangle_free(n, target, &mut rng)
            }
        })
        .collect()
}

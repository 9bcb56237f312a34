//! Independent brute-force oracles and helpers shared by the integration
//! tests. Nothing here calls the algorithms under test.
#![allow(dead_code)]

use cbu_core::{Graph, Orientation};
use rayon::prelude::*;

/// Homogeneity checked from scratch: equal out-labels, equal in-labels,
/// in-label below out-label.
pub fn homogeneous(o: &Orientation, labels: &[i64]) -> bool {
    let n = o.graph().n();
    let mut out = vec![None; n];
    let mut inn = vec![None; n];
    for ((t, h), &l) in o.arcs().zip(labels) {
        if *out[t].get_or_insert(l) != l || *inn[h].get_or_insert(l) != l {
            return false;
        }
    }
    (0..n).all(|v| match (inn[v], out[v]) {
        (Some(a), Some(b)) => a < b,
        _ => true,
    })
}

/// Tries every assignment of labels `1..=m` to the `m` arcs. Values beyond
/// `m` are never needed: only the relative order of labels matters.
pub fn brute_labelable(o: &Orientation) -> bool {
    let m = o.graph().m();
    assert!(m <= 7, "too many arcs for brute force");
    let mut labels = vec![1i64; m];
    loop {
        if homogeneous(o, &labels) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == m {
                return false;
            }
            labels[k] += 1;
            if labels[k] <= m as i64 {
                break;
            }
            labels[k] = 1;
            k += 1;
        }
    }
}

/// Every orientation as a list of arcs, by bitmask over the edge list.
pub fn orientations(g: &Graph) -> impl Iterator<Item = Orientation> + '_ {
    (0..1u64 << g.m()).map(move |bits| {
        let arcs: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| if bits >> e & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        Orientation::from_arcs(g.n(), &arcs).unwrap()
    })
}

pub fn connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in g.edges() {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub fn has_triangle(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)))
    })
}

pub fn two_colourable(g: &Graph) -> bool {
    (0..1u64 << g.n()).any(|c| g.edges().iter().all(|&(u, v)| (c >> u & 1) != (c >> v & 1)))
}

/// Any map to `C_5` (vertices `0..5`, `i ~ i+1 mod 5`) that is a
/// homomorphism.
pub fn brute_c5_hom(g: &Graph) -> bool {
    let n = g.n() as u32;
    (0..5usize.pow(n)).any(|code| {
        let f: Vec<usize> = (0..n).map(|i| code / 5usize.pow(i) % 5).collect();
        g.edges().iter().all(|&(u, v)| (f[u] + 5 - f[v]) % 5 == 1 || (f[v] + 5 - f[u]) % 5 == 1)
    })
}

pub fn brute_alpha(g: &Graph) -> usize {
    (0..1u64 << g.n())
        .filter(|s| g.edges().iter().all(|&(u, v)| !(s >> u & 1 == 1 && s >> v & 1 == 1)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&k| {
            if k == 0 {
                return n == 0;
            }
            (0..k.pow(n as u32)).any(|code| {
                let c: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
                g.edges().iter().all(|&(u, v)| c[u] != c[v])
            })
        })
        .unwrap()
}

/// Counts cycles by trying every sequence of distinct vertices: each cycle of
/// length `k` is found `2k` times.
pub fn count_cycles_by_permutation(g: &Graph) -> usize {
    fn extend(g: &Graph, seq: &mut Vec<usize>, used: &mut [bool], total: &mut [usize]) {
        let k = seq.len();
        if k >= 3 && g.has_edge(seq[k - 1], seq[0]) {
            total[k] += 1;
        }
        for v in 0..g.n() {
            if !used[v] && g.has_edge(seq[k - 1], v) {
                used[v] = true;
                seq.push(v);
                extend(g, seq, used, total);
                seq.pop();
                used[v] = false;
            }
        }
    }
    let mut total = vec![0usize; g.n() + 1];
    for s in 0..g.n() {
        let mut used = vec![false; g.n()];
        used[s] = true;
        extend(g, &mut vec![s], &mut used, &mut total);
    }
    total.iter().enumerate().skip(3).map(|(k, &c)| c / (2 * k)).sum()
}

/// Runs `f` over `items` in parallel, collecting up to `keep` failure
/// descriptions (in item order); returns the number of failures.
pub fn par_failures<T: Sync, F>(items: &[T], keep: usize, f: F) -> (usize, Vec<String>)
where
    F: Fn(&T) -> Option<String> + Sync,
{
    let failures: Vec<String> = items.par_iter().filter_map(|x| f(x)).collect();
    let count = failures.len();
    (count, failures.into_iter().take(keep).collect())
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> Vec<Graph> {
    cbu_core::iso::all_labelled_graphs(n).collect()
}

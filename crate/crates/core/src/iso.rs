//! Brute-force canonical forms for small graphs and enumeration of all
//! graphs up to isomorphism. Used by the exhaustive test suites.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest vertex count accepted by [`canonical_code`].
pub const MAX_CANONICAL_N: usize = 16;

fn pair_bit(a: usize, b: usize) -> u32 {
    let (a, b) = (a.min(b), a.max(b));
    (b * (b - 1) / 2 + a) as u32
}

/// Colour refinement; returns the stable colour of every vertex, colours
/// numbered in an isomorphism-invariant order.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = vec![0; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let classes_before = color.iter().collect::<HashSet<_>>().len();
        let classes_after = distinct.len();
        color = next;
        if classes_after == classes_before {
            return color;
        }
    }
}

/// A code equal for two graphs iff they are isomorphic. Panics for
/// `n > MAX_CANONICAL_N`.
pub fn canonical_code(g: &Graph) -> (usize, u128) {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_N, "canonical form limited to n <= {MAX_CANONICAL_N}");
    let color = refine(g);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let ncolors = color.iter().max().map_or(0, |c| c + 1);
    for c in 0..ncolors {
        classes.push((0..n).filter(|&v| color[v] == c).collect());
    }
    // Positions are filled class by class; within a class every permutation
    // is tried.
    let mut pos = vec![usize::MAX; n];
    let mut best = u128::MAX;
    let mut used = vec![false; n];
    search(g, &classes, 0, 0, &mut pos, &mut used, &mut best);
    (n, best)
}

fn search(
    g: &Graph,
    classes: &[Vec<usize>],
    class: usize,
    next_pos: usize,
    pos: &mut Vec<usize>,
    used: &mut Vec<bool>,
    best: &mut u128,
) {
    if class == classes.len() {
        let code = g
            .edges()
            .iter()
            .fold(0u128, |acc, &(u, v)| acc | (1u128 << pair_bit(pos[u], pos[v])));
        if code < *best {
            *best = code;
        }
        return;
    }
    let members = &classes[class];
    let filled = members.iter().filter(|&&v| used[v]).count();
    if filled == members.len() {
        search(g, classes, class + 1, next_pos, pos, used, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        pos[v] = next_pos;
        search(g, classes, class, next_pos + 1, pos, used, best);
        used[v] = false;
        pos[v] = usize::MAX;
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_code(a) == canonical_code(b)
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, in a deterministic order.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let edges = base
                    .edges()
                    .iter()
                    .copied()
                    .chain((0..k - 1).filter(|&w| mask >> w & 1 == 1).map(|w| (w, k - 1)));
                let g = Graph::new(k, edges).unwrap();
                if seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// Like [`nonisomorphic_graphs`], but for every size `1..=n`.
pub fn nonisomorphic_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(nonisomorphic_graphs).collect()
}

/// Every labelled graph on `n` vertices (`2^(n choose 2)` of them).
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        Graph::new(
            n,
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
        )
        .unwrap()
    })
}

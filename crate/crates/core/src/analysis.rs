//! Exact small-graph invariants: independence number, chromatic number,
//! fractional chromatic number and girth.
//!
//! Bitmask algorithms, so graphs are limited to 64 vertices; the fractional
//! chromatic number enumerates maximal independent sets and defaults to
//! [`DEFAULT_FRACTIONAL_LIMIT`] vertices.

use std::collections::VecDeque;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::rational::{q, Q};

pub const MAX_VERTICES: usize = 64;
pub const DEFAULT_FRACTIONAL_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph has {n} vertices, limit is {limit}")]
pub struct SizeLimit {
    pub n: usize,
    pub limit: usize,
}

fn check_size(g: &Graph, limit: usize) -> Result<(), SizeLimit> {
    if g.n() > limit {
        Err(SizeLimit { n: g.n(), limit })
    } else {
        Ok(())
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

fn full(n: usize) -> u64 {
    if n == 64 { u64::MAX } else { (1u64 << n) - 1 }
}

/// A maximum independent set, by branch and bound on the vertex of highest
/// remaining degree.
pub fn maximum_independent_set(g: &Graph) -> Result<Vec<usize>, SizeLimit> {
    check_size(g, MAX_VERTICES)?;
    let adj = g.adjacency_masks();
    fn go(adj: &[u64], cand: u64, cur: u64, best: &mut u64) {
        if cand == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        // vertices with no candidate neighbour can always be taken
        let mut cand = cand;
        let mut cur = cur;
        loop {
            let free: u64 = bits(cand).filter(|&v| adj[v] & cand == 0).fold(0, |m, v| m | 1 << v);
            if free == 0 {
                break;
            }
            cur |= free;
            cand &= !free;
        }
        if cand == 0 {
            return go(adj, 0, cur, best);
        }
        let v = bits(cand).max_by_key(|&v| (adj[v] & cand).count_ones()).unwrap();
        go(adj, cand & !(1 << v) & !adj[v], cur | 1 << v, best);
        go(adj, cand & !(1 << v), cur, best);
    }
    let mut best = 0u64;
    go(&adj, full(g.n()), 0, &mut best);
    Ok(bits(best).collect())
}

pub fn independence_number(g: &Graph) -> Result<usize, SizeLimit> {
    Ok(maximum_independent_set(g)?.len())
}

/// Proper colouring with `k` colours, if one exists.
pub fn colouring_with(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, SizeLimit> {
    check_size(g, MAX_VERTICES)?;
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    fn go(g: &Graph, k: usize, colour: &mut [usize], done: usize) -> bool {
        if done == colour.len() {
            return true;
        }
        // most constrained uncoloured vertex
        let v = (0..colour.len())
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen = 0u64;
                for &w in g.neighbors(v) {
                    if colour[w] != usize::MAX {
                        seen |= 1 << colour[w];
                    }
                }
                (seen.count_ones(), g.degree(v))
            })
            .unwrap();
        let used = colour.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().all(|&w| colour[w] != c) {
                colour[v] = c;
                if go(g, k, colour, done + 1) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    Ok(go(g, k, &mut colour, 0).then_some(colour))
}

pub fn chromatic_number(g: &Graph) -> Result<usize, SizeLimit> {
    check_size(g, MAX_VERTICES)?;
    let lower = if g.n() == 0 { 0 } else if g.m() == 0 { 1 } else { 2 };
    (lower..=g.n())
        .find(|&k| colouring_with(g, k).unwrap().is_some())
        .ok_or(SizeLimit { n: g.n(), limit: MAX_VERTICES })
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// All maximal independent sets as bitmasks (Bron-Kerbosch with pivoting on
/// the complement).
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<u64>, SizeLimit> {
    check_size(g, MAX_VERTICES)?;
    let n = g.n();
    let adj = g.adjacency_masks();
    // neighbourhoods in the complement
    let non: Vec<u64> = (0..n).map(|v| full(n) & !adj[v] & !(1 << v)).collect();
    let mut out = Vec::new();
    fn bk(non: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x).max_by_key(|&u| (non[u] & p).count_ones()).unwrap();
        let mut p = p;
        let mut x = x;
        for v in bits(p & !non[pivot]) {
            bk(non, r | 1 << v, p & non[v], x & non[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    if n > 0 {
        bk(&non, 0, full(n), 0, &mut out);
    }
    out.sort_unstable();
    Ok(out)
}

/// Optimal fractional colouring together with an optimal fractional clique
/// (vertex weights summing to `value` with every independent set of weight at
/// most 1), which certifies optimality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FractionalColoring {
    #[serde(serialize_with = "ser_weights")]
    pub weights: Vec<(Vec<usize>, Q)>,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub value: Q,
    #[serde(serialize_with = "ser_vec")]
    pub clique: Vec<Q>,
}

fn ser_weights<S: serde::Serializer>(w: &[(Vec<usize>, Q)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Entry<'a> {
        set: &'a [usize],
        #[serde(serialize_with = "crate::rational::serialize")]
        weight: &'a Q,
    }
    let mut seq = s.serialize_seq(Some(w.len()))?;
    for (set, weight) in w {
        seq.serialize_element(&Entry { set, weight })?;
    }
    seq.end()
}

fn ser_vec<S: serde::Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(crate::rational::format_q))
}

impl FractionalColoring {
    /// Rechecks both certificates exactly.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut cover = vec![q(0); g.n()];
        let mut total = q(0);
        for (set, w) in &self.weights {
            if w.is_negative() || set.iter().any(|&v| v >= g.n()) {
                return false;
            }
            for (i, &u) in set.iter().enumerate() {
                if set[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                    return false;
                }
                cover[u] += w;
            }
            total += w;
        }
        if total != self.value || cover.iter().any(|c| *c < Q::one()) {
            return false;
        }
        if self.clique.len() != g.n() || self.clique.iter().any(Signed::is_negative) {
            return false;
        }
        let csum: Q = self.clique.iter().sum();
        csum == self.value
            && maximal_independent_sets(g)
                .map(|sets| sets.iter().all(|&s| bits(s).map(|v| &self.clique[v]).sum::<Q>() <= Q::one()))
                .unwrap_or(false)
    }
}

pub fn fractional_chromatic_number(g: &Graph) -> Result<FractionalColoring, SizeLimit> {
    fractional_chromatic_number_with_limit(g, DEFAULT_FRACTIONAL_LIMIT)
}

/// Solves `min sum x_I` subject to every vertex being covered with weight at
/// least 1, over maximal independent sets `I`, by the dual simplex method
/// with smallest-index tie breaking.
pub fn fractional_chromatic_number_with_limit(g: &Graph, limit: usize) -> Result<FractionalColoring, SizeLimit> {
    check_size(g, limit.min(MAX_VERTICES))?;
    let n = g.n();
    if n == 0 {
        return Ok(FractionalColoring { weights: Vec::new(), value: q(0), clique: Vec::new() });
    }
    let sets = maximal_independent_sets(g)?;
    let r = sets.len();
    let cols = r + n;
    // rows: -sum_{I ni v} x_I + s_v = -1, basis s_v
    let mut t: Vec<Vec<Q>> = (0..n)
        .map(|v| {
            let mut row = vec![Q::zero(); cols + 1];
            for (j, &s) in sets.iter().enumerate() {
                if s >> v & 1 == 1 {
                    row[j] = -Q::one();
                }
            }
            row[r + v] = Q::one();
            row[cols] = -Q::one();
            row
        })
        .collect();
    let mut cost: Vec<Q> = (0..cols).map(|j| if j < r { Q::one() } else { Q::zero() }).collect();
    let mut objective = Q::zero();
    let mut basis: Vec<usize> = (r..cols).collect();
    loop {
        let leave = (0..n).filter(|&i| t[i][cols].is_negative()).min_by_key(|&i| basis[i]);
        let Some(i) = leave else { break };
        let mut enter: Option<(usize, Q)> = None;
        for j in 0..cols {
            if t[i][j].is_negative() {
                let ratio = &cost[j] / -&t[i][j];
                if enter.as_ref().is_none_or(|(_, best)| ratio < *best) {
                    enter = Some((j, ratio));
                }
            }
        }
        let (j, _) = enter.expect("every vertex lies in some independent set");
        let p = t[i][j].clone();
        for x in t[i].iter_mut() {
            *x /= &p;
        }
        let pivot_row = t[i].clone();
        for (k, row) in t.iter_mut().enumerate() {
            if k != i && !row[j].is_zero() {
                let f = row[j].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let f = cost[j].clone();
        if !f.is_zero() {
            for (x, y) in cost.iter_mut().zip(&pivot_row[..cols]) {
                *x -= &f * y;
            }
            objective += &f * &pivot_row[cols];
        }
        basis[i] = j;
    }
    let mut weights: Vec<(Vec<usize>, Q)> = basis
        .iter()
        .enumerate()
        .filter(|&(i, &b)| b < r && !t[i][cols].is_zero())
        .map(|(i, &b)| (bits(sets[b]).collect(), t[i][cols].clone()))
        .collect();
    weights.sort();
    let value: Q = weights.iter().map(|(_, w)| w).sum();
    debug_assert_eq!(value, objective);
    let clique = (0..n).map(|v| cost[r + v].clone()).collect();
    Ok(FractionalColoring { weights, value, clique })
}

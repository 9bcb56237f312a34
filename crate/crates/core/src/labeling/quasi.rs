//! Quasi-cycles: a directed path `v_1 -> .. -> v_k` (k >= 3) together with
//! the arc `v_1 -> v_k`. An acyclic orientation without quasi-cycles is the
//! Hasse diagram of its transitive closure.

use std::collections::VecDeque;

use crate::graph::{Graph, Orientation, WalkCycle};

/// Shortest directed path `from ~> to` avoiding the arc `from -> to`.
fn detour(out: &[Vec<usize>], from: usize, to: usize) -> Option<Vec<usize>> {
    let n = out.len();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in &out[v] {
            if v == from && w == to {
                continue;
            }
            if parent[w] == usize::MAX {
                parent[w] = v;
                if w == to {
                    let mut p = vec![to];
                    let mut x = to;
                    while x != from {
                        x = parent[x];
                        p.push(x);
                    }
                    p.reverse();
                    return Some(p);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

fn quasi_cycle_in_arcs(n: usize, arcs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for &(t, h) in arcs {
        out[t].push(h);
    }
    arcs.iter().find_map(|&(t, h)| detour(&out, t, h))
}

/// A quasi-cycle of `o`, listed as the directed path `v_1, .., v_k` whose
/// closing arc is `v_1 -> v_k`.
pub fn has_quasi_cycle(o: &Orientation) -> Option<WalkCycle> {
    let arcs: Vec<_> = o.arcs().collect();
    quasi_cycle_in_arcs(o.graph().n(), &arcs)
        .map(|p| WalkCycle::new(o.graph(), p).expect("quasi-cycle is a cycle"))
}

fn reaches(out: &[Vec<usize>], from: usize, to: usize) -> bool {
    let mut seen = vec![false; out.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for &w in &out[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Backtracking search for an acyclic orientation without quasi-cycles
/// (a cover-graph witness). `budget` bounds the number of search nodes;
/// `Err(())` means the budget ran out.
pub fn find_cover_orientation(g: &Graph, budget: u64) -> Result<Option<Orientation>, ()> {
    let m = g.m();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut nodes = 0u64;
    fn rec(
        g: &Graph,
        arcs: &mut Vec<(usize, usize)>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, ()> {
        *nodes += 1;
        if *nodes > budget {
            return Err(());
        }
        let e = arcs.len();
        if e == g.m() {
            return Ok(true);
        }
        let (u, v) = g.edges()[e];
        for (t, h) in [(u, v), (v, u)] {
            let mut out = vec![Vec::new(); g.n()];
            for &(a, b) in arcs.iter() {
                out[a].push(b);
            }
            if reaches(&out, h, t) {
                continue;
            }
            arcs.push((t, h));
            if quasi_cycle_in_arcs(g.n(), arcs).is_none() && rec(g, arcs, nodes, budget)? {
                return Ok(true);
            }
            arcs.pop();
        }
        Ok(false)
    }
    if rec(g, &mut arcs, &mut nodes, budget)? {
        Ok(Some(Orientation::from_graph_arcs(g.clone(), &arcs).expect("complete arc set")))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn quasi_c4_detected() {
        let o = Orientation::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let c = has_quasi_cycle(&o).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn alternating_c4_is_clean() {
        let o = Orientation::from_arcs(4, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        assert!(has_quasi_cycle(&o).is_none());
    }

    #[test]
    fn cover_orientations() {
        let o = find_cover_orientation(&cycle(5), 1000).unwrap().unwrap();
        assert!(o.is_acyclic() && has_quasi_cycle(&o).is_none());
        // every acyclic orientation of a triangle is transitive
        assert_eq!(find_cover_orientation(&complete(3), 1000), Ok(None));
    }
}

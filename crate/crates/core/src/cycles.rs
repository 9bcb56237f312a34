//! Simple-cycle enumeration.
//!
//! Every cycle is produced once, as its canonical representative: smallest
//! vertex first, and the second vertex smaller than the last.

use std::ops::ControlFlow;

use crate::graph::{Graph, WalkCycle};

/// Calls `visit` with every simple cycle of length `3..=max_len`; stops early
/// when `visit` breaks.
pub fn for_each_cycle<F>(g: &Graph, max_len: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(max_len);
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        let r = extend(g, s, max_len, &mut path, &mut on_path, &mut visit);
        on_path[s] = false;
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    g: &Graph,
    s: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            visit(path)?;
        }
        if w > s && !on_path[w] && path.len() < max_len {
            on_path[w] = true;
            path.push(w);
            let r = extend(g, s, max_len, path, on_path, visit);
            path.pop();
            on_path[w] = false;
            r?;
        }
    }
    ControlFlow::Continue(())
}

/// All cycles of length at most `max_len`, canonical, in discovery order.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Vec<WalkCycle> {
    assert!(max_len >= 3, "cycles have length at least 3");
    let mut out = Vec::new();
    let _ = for_each_cycle(g, max_len, |c| {
        out.push(WalkCycle::new_unchecked(c.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// Number of cycles of each length `0..=max_len` (index = length).
pub fn cycle_length_histogram(g: &Graph, max_len: usize) -> Vec<usize> {
    let mut hist = vec![0; max_len + 1];
    let _ = for_each_cycle(g, max_len, |c| {
        hist[c.len()] += 1;
        ControlFlow::Continue(())
    });
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, grid};

    #[test]
    fn c5_has_one_cycle() {
        let cs = enumerate_cycles(&cycle(5), 10);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn k4_has_four_triangles() {
        assert_eq!(enumerate_cycles(&complete(4), 3).len(), 4);
        // plus three 4-cycles
        assert_eq!(enumerate_cycles(&complete(4), 4).len(), 7);
    }

    #[test]
    fn grid3_has_four_squares() {
        assert_eq!(enumerate_cycles(&grid(3), 4).len(), 4);
    }

    #[test]
    fn output_is_canonical() {
        for c in enumerate_cycles(&complete(5), 5) {
            assert_eq!(c, c.canonical());
            assert!(WalkCycle::new(&complete(5), c.vertices().to_vec()).is_ok());
        }
    }
}

use std::ops::ControlFlow;

use crate::cycles::for_each_cycle;
use crate::graph::{Orientation, WalkCycle};

/// A badly oriented cycle: traversed as listed, `through` is a vertex entered
/// and left along arc direction, and no vertex is entered and left against
/// arc direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadCycle {
    pub cycle: WalkCycle,
    pub through: usize,
}

/// Counts forward-through and backward-through vertices of `vs` traversed in
/// the listed direction and returns the first forward-through index.
fn through_counts(o: &Orientation, vs: &[usize]) -> (usize, usize, Option<usize>) {
    let k = vs.len();
    let mut fwd = 0;
    let mut bwd = 0;
    let mut first = None;
    for i in 0..k {
        let prev = vs[(i + k - 1) % k];
        let cur = vs[i];
        let next = vs[(i + 1) % k];
        if o.has_arc(prev, cur) && o.has_arc(cur, next) {
            fwd += 1;
            first.get_or_insert(i);
        } else if o.has_arc(next, cur) && o.has_arc(cur, prev) {
            bwd += 1;
        }
    }
    (fwd, bwd, first)
}

/// If the cycle `vs` is badly oriented when traversed as listed, the index of
/// its first forward-through vertex.
pub fn bad_direction(o: &Orientation, vs: &[usize]) -> Option<usize> {
    match through_counts(o, vs) {
        (f, 0, first) if f > 0 => first,
        _ => None,
    }
}

impl BadCycle {
    /// Re-checks the definition against `o`.
    pub fn verify(&self, o: &Orientation) -> bool {
        let vs = self.cycle.vertices();
        let (_, bwd, _) = through_counts(o, vs);
        let k = vs.len();
        let i = self.through;
        i < k
            && bwd == 0
            && WalkCycle::new(o.graph(), vs.to_vec()).is_ok()
            && o.has_arc(vs[(i + k - 1) % k], vs[i])
            && o.has_arc(vs[i], vs[(i + 1) % k])
    }
}

/// Searches all cycles of length `<= max_len` (use `n` for completeness) for
/// one that is badly oriented in either traversal direction.
pub fn find_bad_cycle(o: &Orientation, max_len: usize) -> Option<BadCycle> {
    let mut found = None;
    let _ = for_each_cycle(o.graph(), max_len.max(3), |vs| {
        let (f, b, first) = through_counts(o, vs);
        if f > 0 && b == 0 {
            found = Some(BadCycle {
                cycle: WalkCycle::new_unchecked(vs.to_vec()),
                through: first.unwrap(),
            });
            return ControlFlow::Break(());
        }
        if b > 0 && f == 0 {
            let rev = WalkCycle::new_unchecked(vs.to_vec()).reversed();
            let through = bad_direction(o, rev.vertices()).expect("reversal swaps through kinds");
            found = Some(BadCycle { cycle: rev, through });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if let Some(bc) = &found {
        assert!(bc.verify(o), "bad cycle failed re-verification: {bc:?}");
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::solve_labeling;

    #[test]
    fn acyclic_triangle_is_bad_through_middle() {
        // a=0, b=1, c=2: a->b, a->c, b->c
        let o = Orientation::from_arcs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let bc = find_bad_cycle(&o, 3).unwrap();
        assert_eq!(bc.cycle.vertices()[bc.through], 1);
    }

    #[test]
    fn alternating_c4_has_none() {
        let o = Orientation::from_arcs(4, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        assert_eq!(find_bad_cycle(&o, 4), None);
    }

    #[test]
    fn quasi_cycle_c5_is_bad() {
        let o = Orientation::from_arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let bc = find_bad_cycle(&o, 5).unwrap();
        assert!(bc.verify(&o));
        // standalone, the cycle is unlabelable
        assert!(!solve_labeling(&o.restrict_to_cycle(&bc.cycle)).is_feasible());
    }

    #[test]
    fn reversed_direction_is_reported_forward() {
        // traversal 0,1,2,3 sees only backward-through vertices
        let o = Orientation::from_arcs(4, &[(1, 0), (2, 1), (3, 2), (3, 0)]).unwrap();
        let bc = find_bad_cycle(&o, 4).unwrap();
        assert!(bc.verify(&o));
    }
}

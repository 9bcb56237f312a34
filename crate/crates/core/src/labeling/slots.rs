//! The slot system: every vertex has an in-slot and an out-slot. Each arc
//! `u -> v` identifies `out(u)` with `in(v)` (the arc's label), and each vertex
//! with both kinds of arcs requires `in(v) < out(v)`. A homogeneous labeling
//! exists iff the quotient precedence digraph is acyclic; longest-path ranks
//! in that DAG give the canonical labels.

use std::collections::VecDeque;

use crate::graph::Orientation;
use crate::unionfind::RollbackUnionFind;

use super::ArcLabeling;

pub(crate) fn in_slot(v: usize) -> usize {
    2 * v
}

pub(crate) fn out_slot(v: usize) -> usize {
    2 * v + 1
}

/// Directed cycle of slot classes. Entry `i` is a vertex whose precedence
/// `in(v_i) < out(v_i)` is an arc of the cycle; `out(v_i)` and `in(v_{i+1})`
/// lie in the same class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotCycle {
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct SlotSystem {
    /// Class id (dense) of every slot.
    class: Vec<usize>,
    classes: usize,
    /// `(vertex, class of in-slot, class of out-slot)`.
    precedences: Vec<(usize, usize, usize)>,
}

impl SlotSystem {
    pub fn new(o: &Orientation) -> SlotSystem {
        let n = o.graph().n();
        let mut uf = RollbackUnionFind::new(2 * n);
        let mut has_in = vec![false; n];
        let mut has_out = vec![false; n];
        for (t, h) in o.arcs() {
            uf.union(out_slot(t), in_slot(h));
            has_out[t] = true;
            has_in[h] = true;
        }
        let mut dense = vec![usize::MAX; 2 * n];
        let mut class = vec![0; 2 * n];
        let mut classes = 0;
        for s in 0..2 * n {
            let r = uf.find(s);
            if dense[r] == usize::MAX {
                dense[r] = classes;
                classes += 1;
            }
            class[s] = dense[r];
        }
        let precedences = (0..n)
            .filter(|&v| has_in[v] && has_out[v])
            .map(|v| (v, class[in_slot(v)], class[out_slot(v)]))
            .collect();
        SlotSystem { class, classes, precedences }
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn class_of_slot(&self, slot: usize) -> usize {
        self.class[slot]
    }

    /// Longest-path rank (from 1) of every class, or a directed cycle.
    pub fn ranks(&self) -> Result<Vec<i64>, SlotCycle> {
        let k = self.classes;
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut indeg = vec![0usize; k];
        for &(_, a, b) in &self.precedences {
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut rank = vec![1i64; k];
        let mut queue: VecDeque<usize> = (0..k).filter(|&c| indeg[c] == 0).collect();
        let mut done = 0;
        while let Some(c) = queue.pop_front() {
            done += 1;
            for &d in &succ[c] {
                rank[d] = rank[d].max(rank[c] + 1);
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push_back(d);
                }
            }
        }
        if done == k {
            return Ok(rank);
        }
        Err(self.extract_cycle(&indeg))
    }

    /// Walks predecessor edges inside the Kahn residue (classes with
    /// positive remaining in-degree) until a class repeats.
    fn extract_cycle(&self, indeg: &[usize]) -> SlotCycle {
        let residue = |c: usize| indeg[c] > 0;
        let start = (0..self.classes).find(|&c| residue(c)).expect("non-empty residue");
        let mut seen_at = vec![usize::MAX; self.classes];
        let mut trail: Vec<(usize, usize)> = Vec::new(); // (class, vertex entering it)
        let mut c = start;
        loop {
            if seen_at[c] != usize::MAX {
                let mut vertices: Vec<usize> =
                    trail[seen_at[c]..].iter().map(|&(_, v)| v).collect();
                vertices.reverse();
                return SlotCycle { vertices };
            }
            seen_at[c] = trail.len();
            let &(v, from, _) = self
                .precedences
                .iter()
                .find(|&&(_, from, to)| to == c && residue(from))
                .expect("every residue class has a residue predecessor");
            trail.push((c, v));
            c = from;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelingOutcome {
    Feasible(ArcLabeling),
    Infeasible(SlotCycle),
}

impl LabelingOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LabelingOutcome::Feasible(_))
    }

    pub fn labeling(self) -> Option<ArcLabeling> {
        match self {
            LabelingOutcome::Feasible(l) => Some(l),
            LabelingOutcome::Infeasible(_) => None,
        }
    }
}

/// Decides whether `o` admits a homogeneous labeling. On success the labels
/// are longest-path ranks in the quotient DAG (smallest label 1).
pub fn solve_labeling(o: &Orientation) -> LabelingOutcome {
    let system = SlotSystem::new(o);
    match system.ranks() {
        Ok(rank) => {
            let labels = o
                .arcs()
                .map(|(t, _)| rank[system.class_of_slot(out_slot(t))])
                .collect();
            LabelingOutcome::Feasible(
                ArcLabeling::new(o.clone(), labels).expect("one label per arc"),
            )
        }
        Err(cycle) => LabelingOutcome::Infeasible(cycle),
    }
}

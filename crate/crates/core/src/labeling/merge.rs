//! Constructive labeling by repeatedly eliminating a source.
//!
//! Take a source `u` with out-neighbours `v_1..v_k`. If `u` is the only
//! in-neighbour of every `v_i`, label the rest of the graph recursively and
//! give `u`'s arcs a label below every other. Otherwise some `v_i` has a
//! second in-neighbour `u'`: delete `u`, add arcs `u' -> v_j` for all `j`,
//! label the result, and copy the out-label of `u'` onto `u`'s arcs.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::Orientation;

use super::ArcLabeling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeFailure {
    #[error("no source among the remaining vertices (directed cycle)")]
    NoSource,
    #[error("merging source {source_vertex} into {target} conflicts with arc {from}->{to}")]
    Conflict { source_vertex: usize, target: usize, from: usize, to: usize },
    #[error("the assembled labeling is not homogeneous: {0}")]
    NotHomogeneous(super::LabelingViolation),
}

#[derive(Clone)]
struct Digraph {
    alive: Vec<bool>,
    out: Vec<BTreeSet<usize>>,
    inn: Vec<BTreeSet<usize>>,
}

impl Digraph {
    fn remove(&mut self, u: usize) {
        self.alive[u] = false;
        for w in std::mem::take(&mut self.out[u]) {
            self.inn[w].remove(&u);
        }
        for w in std::mem::take(&mut self.inn[u]) {
            self.out[w].remove(&u);
        }
    }

    fn add_arc(&mut self, t: usize, h: usize) {
        self.out[t].insert(h);
        self.inn[h].insert(t);
    }

    fn has_arcs(&self) -> bool {
        self.out.iter().any(|s| !s.is_empty())
    }
}

type Labels = BTreeMap<(usize, usize), i64>;

fn label_rec(g: &Digraph) -> Result<Labels, MergeFailure> {
    if !g.has_arcs() {
        return Ok(Labels::new());
    }
    let n = g.alive.len();
    let u = (0..n)
        .find(|&v| g.alive[v] && g.inn[v].is_empty() && !g.out[v].is_empty())
        .ok_or(MergeFailure::NoSource)?;
    let outs: Vec<usize> = g.out[u].iter().copied().collect();
    let second = outs
        .iter()
        .find_map(|&v| g.inn[v].iter().copied().find(|&w| w != u).map(|w| (v, w)));

    let mut rest = g.clone();
    rest.remove(u);
    match second {
        None => {
            let mut labels = label_rec(&rest)?;
            let low = labels.values().copied().min().map_or(0, |m| m - 1);
            for &v in &outs {
                labels.insert((u, v), low);
            }
            Ok(labels)
        }
        Some((_, u2)) => {
            let mut added = Vec::new();
            for &v in &outs {
                if v == u2 || rest.out[v].contains(&u2) {
                    return Err(MergeFailure::Conflict { source_vertex: u, target: u2, from: v, to: u2 });
                }
                if !rest.out[u2].contains(&v) {
                    rest.add_arc(u2, v);
                    added.push((u2, v));
                }
            }
            let mut labels = label_rec(&rest)?;
            let shared = *labels
                .iter()
                .find(|(&(t, _), _)| t == u2)
                .map(|(_, l)| l)
                .expect("u' keeps at least one out-arc");
            for arc in added {
                labels.remove(&arc);
            }
            for &v in &outs {
                labels.insert((u, v), shared);
            }
            Ok(labels)
        }
    }
}

/// Runs the source-merge recursion on `o`. Failure means `o` contains a
/// badly oriented cycle (the recursion's precondition was violated).
pub fn synthesize_by_source_merge(o: &Orientation) -> Result<ArcLabeling, MergeFailure> {
    let n = o.graph().n();
    let mut g = Digraph {
        alive: vec![true; n],
        out: vec![BTreeSet::new(); n],
        inn: vec![BTreeSet::new(); n],
    };
    for (t, h) in o.arcs() {
        g.add_arc(t, h);
    }
    let labels = label_rec(&g)?;
    let values = o.arcs().map(|arc| labels[&arc]).collect();
    let labeling = ArcLabeling::new(o.clone(), values).expect("one label per arc");
    labeling.check().map_err(MergeFailure::NotHomogeneous)?;
    Ok(labeling)
}

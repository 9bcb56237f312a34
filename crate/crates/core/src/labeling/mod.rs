//! Homogeneous arc labelings of oriented graphs.
//!
//! A labeling is homogeneous when, at every vertex, all outgoing arcs carry
//! one label, all incoming arcs carry one label, and the incoming label is
//! strictly smaller than the outgoing one whenever both exist.
//!
//! [`solve_labeling`] decides labelability in polynomial time through the
//! slot system; [`find_bad_cycle`] is the independent combinatorial oracle and
//! [`synthesize_by_source_merge`] the recursive constructive procedure.

mod bad_cycle;
mod certificate;
mod merge;
mod quasi;
mod slots;

pub use bad_cycle::{bad_direction, find_bad_cycle, BadCycle};
pub use certificate::{infeasibility_certificate, LabelingCertificate};
pub use merge::{synthesize_by_source_merge, MergeFailure};
pub use quasi::{find_cover_orientation, has_quasi_cycle};
pub use slots::{solve_labeling, LabelingOutcome, SlotCycle, SlotSystem};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Orientation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingViolation {
    #[error("vertex {vertex}: outgoing arcs carry different labels {first} and {second}")]
    MixedOutLabels { vertex: usize, first: i64, second: i64 },
    #[error("vertex {vertex}: incoming arcs carry different labels {first} and {second}")]
    MixedInLabels { vertex: usize, first: i64, second: i64 },
    #[error("vertex {vertex}: incoming label {in_label} is not below outgoing label {out_label}")]
    NotIncreasing { vertex: usize, in_label: i64, out_label: i64 },
    #[error("expected {expected} labels, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// An orientation together with one integer label per arc (indexed like the
/// edges of the underlying graph).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabeling {
    orientation: Orientation,
    labels: Vec<i64>,
}

impl ArcLabeling {
    /// Pairs an orientation with labels. Only the length is checked here; use
    /// [`ArcLabeling::check`] for homogeneity.
    pub fn new(orientation: Orientation, labels: Vec<i64>) -> Result<ArcLabeling, LabelingViolation> {
        if labels.len() != orientation.graph().m() {
            return Err(LabelingViolation::WrongLength {
                expected: orientation.graph().m(),
                got: labels.len(),
            });
        }
        Ok(ArcLabeling { orientation, labels })
    }

    /// Builds a labeling from `(tail, head, label)` triples covering every
    /// edge of the base graph exactly once.
    pub fn from_triples(
        graph: crate::graph::Graph,
        triples: &[(usize, usize, i64)],
    ) -> Result<ArcLabeling, crate::graph::GraphError> {
        let arcs: Vec<_> = triples.iter().map(|&(t, h, _)| (t, h)).collect();
        let orientation = Orientation::from_graph_arcs(graph, &arcs)?;
        let mut labels = vec![0; orientation.graph().m()];
        for &(t, h, l) in triples {
            labels[orientation.graph().edge_index(t, h).unwrap()] = l;
        }
        Ok(ArcLabeling { orientation, labels })
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// `(tail, head, label)` for every arc, in edge order.
    pub fn triples(&self) -> Vec<(usize, usize, i64)> {
        self.orientation
            .arcs()
            .zip(&self.labels)
            .map(|((t, h), &l)| (t, h, l))
            .collect()
    }

    pub fn label_of(&self, tail: usize, head: usize) -> Option<i64> {
        let e = self.orientation.graph().edge_index(tail, head)?;
        (self.orientation.arc(e) == (tail, head)).then(|| self.labels[e])
    }

    /// Common label of the incoming arcs of `v` (the first one found).
    pub fn in_label(&self, v: usize) -> Option<i64> {
        self.orientation.in_neighbors(v).next().and_then(|u| self.label_of(u, v))
    }

    /// Common label of the outgoing arcs of `v` (the first one found).
    pub fn out_label(&self, v: usize) -> Option<i64> {
        self.orientation.out_neighbors(v).next().and_then(|w| self.label_of(v, w))
    }

    /// Inspects every vertex and every incident arc.
    pub fn check(&self) -> Result<(), LabelingViolation> {
        check_homogeneous(&self.orientation, &self.labels)
    }

    /// Replaces labels by their rank among the distinct labels, starting at
    /// `start`. Homogeneity is preserved since the map is order-preserving.
    pub fn renumbered(&self, start: i64) -> ArcLabeling {
        let mut distinct = self.labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let rank: BTreeMap<i64, i64> =
            distinct.iter().enumerate().map(|(i, &l)| (l, start + i as i64)).collect();
        ArcLabeling {
            orientation: self.orientation.clone(),
            labels: self.labels.iter().map(|l| rank[l]).collect(),
        }
    }

    /// Number of distinct labels used.
    pub fn distinct_labels(&self) -> usize {
        let mut d = self.labels.clone();
        d.sort_unstable();
        d.dedup();
        d.len()
    }
}

/// The homogeneity checker, independent of how the labels were produced.
pub fn check_homogeneous(o: &Orientation, labels: &[i64]) -> Result<(), LabelingViolation> {
    let g = o.graph();
    if labels.len() != g.m() {
        return Err(LabelingViolation::WrongLength { expected: g.m(), got: labels.len() });
    }
    let n = g.n();
    let mut out_label: Vec<Option<i64>> = vec![None; n];
    let mut in_label: Vec<Option<i64>> = vec![None; n];
    for (e, &l) in labels.iter().enumerate() {
        let (t, h) = o.arc(e);
        match out_label[t] {
            None => out_label[t] = Some(l),
            Some(first) if first != l => {
                return Err(LabelingViolation::MixedOutLabels { vertex: t, first, second: l })
            }
            _ => {}
        }
        match in_label[h] {
            None => in_label[h] = Some(l),
            Some(first) if first != l => {
                return Err(LabelingViolation::MixedInLabels { vertex: h, first, second: l })
            }
            _ => {}
        }
    }
    for v in 0..n {
        if let (Some(i), Some(o)) = (in_label[v], out_label[v]) {
            if i >= o {
                return Err(LabelingViolation::NotIncreasing { vertex: v, in_label: i, out_label: o });
            }
        }
    }
    Ok(())
}

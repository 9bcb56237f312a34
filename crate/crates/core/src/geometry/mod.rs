//! Closed axis-parallel boxes with rational endpoints and the exact
//! verifier for unidirectional contact representations. Axis 0 is the
//! contact axis.

mod json;
pub mod svg;

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::ArcLabeling;
use crate::rational::{format_q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoxError {
    #[error("box has no axes")]
    ZeroDimensional,
    #[error("interval {axis} is empty or degenerate: [{lo}, {hi}]")]
    Degenerate { axis: usize, lo: String, hi: String },
    #[error("box {vertex} has dimension {got}, expected {expected}")]
    DimensionMismatch { vertex: usize, expected: usize, got: usize },
}

/// Product of closed intervals `[lo_k, hi_k]` with `lo_k < hi_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AxisBox {
    intervals: Vec<(Q, Q)>,
}

impl fmt::Debug for AxisBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|(a, b)| format!("[{}, {}]", format_q(a), format_q(b)))
            .collect();
        f.write_str(&parts.join("x"))
    }
}

impl AxisBox {
    pub fn new(intervals: Vec<(Q, Q)>) -> Result<AxisBox, BoxError> {
        if intervals.is_empty() {
            return Err(BoxError::ZeroDimensional);
        }
        for (axis, (lo, hi)) in intervals.iter().enumerate() {
            if lo >= hi {
                return Err(BoxError::Degenerate { axis, lo: format_q(lo), hi: format_q(hi) });
            }
        }
        Ok(AxisBox { intervals })
    }

    /// Integer-endpoint shorthand; panics on a degenerate interval.
    pub fn from_ints(intervals: &[(i64, i64)]) -> AxisBox {
        AxisBox::new(
            intervals.iter().map(|&(a, b)| (crate::rational::q(a), crate::rational::q(b))).collect(),
        )
        .expect("non-degenerate integer box")
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(Q, Q)] {
        &self.intervals
    }

    pub fn lo(&self, axis: usize) -> &Q {
        &self.intervals[axis].0
    }

    pub fn hi(&self, axis: usize) -> &Q {
        &self.intervals[axis].1
    }

    pub fn with_axis(&self, interval: (Q, Q)) -> Result<AxisBox, BoxError> {
        let mut iv = self.intervals.clone();
        iv.push(interval);
        AxisBox::new(iv)
    }

    pub fn with_prefix_axis(&self, interval: (Q, Q)) -> Result<AxisBox, BoxError> {
        let mut iv = Vec::with_capacity(self.dim() + 1);
        iv.push(interval);
        iv.extend(self.intervals.iter().cloned());
        AxisBox::new(iv)
    }

    pub fn contains_point(&self, p: &[Q]) -> bool {
        p.len() == self.dim() && self.intervals.iter().zip(p).all(|((lo, hi), x)| lo <= x && x <= hi)
    }

    pub fn intersects(&self, other: &AxisBox) -> bool {
        self.intervals
            .iter()
            .zip(&other.intervals)
            .all(|((a, b), (c, d))| a.max(c) <= b.min(d))
    }
}

/// How two closed boxes meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Disjoint,
    /// The boxes share a facet orthogonal to axis 0 at coordinate `at`;
    /// `first_below` says the first box ends there.
    Contact { at: Q, first_below: bool },
    InteriorOverlap,
    /// Intersection of dimension below `d - 1`.
    DegenerateTouching,
    /// Facet contact orthogonal to some axis other than 0.
    WrongAxis(usize),
}

pub fn classify(a: &AxisBox, b: &AxisBox) -> Relation {
    let mut zero_axes = Vec::new();
    for (k, ((lo1, hi1), (lo2, hi2))) in a.intervals.iter().zip(&b.intervals).enumerate() {
        let len = hi1.min(hi2) - lo1.max(lo2);
        if len < Q::zero() {
            return Relation::Disjoint;
        }
        if len.is_zero() {
            zero_axes.push(k);
        }
    }
    match zero_axes.as_slice() {
        [] => Relation::InteriorOverlap,
        [0] => {
            let first_below = a.hi(0) == b.lo(0);
            let at = if first_below { a.hi(0).clone() } else { a.lo(0).clone() };
            Relation::Contact { at, first_below }
        }
        [k] => Relation::WrongAxis(*k),
        _ => Relation::DegenerateTouching,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ViolationKind {
    #[error("interior overlap")]
    InteriorOverlap,
    #[error("degenerate touching")]
    DegenerateTouching,
    #[error("touching along wrong axis {0}")]
    WrongAxis(usize),
    #[error("contact missing for edge")]
    MissingEdge,
    #[error("contact without an edge")]
    ExtraEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}: {}", self.u, self.v, self.kind)
    }
}

/// A box per vertex, all of dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRepresentation {
    d: usize,
    boxes: Vec<AxisBox>,
}

impl BoxRepresentation {
    pub fn new(d: usize, boxes: Vec<AxisBox>) -> Result<BoxRepresentation, BoxError> {
        for (vertex, b) in boxes.iter().enumerate() {
            if b.dim() != d {
                return Err(BoxError::DimensionMismatch { vertex, expected: d, got: b.dim() });
            }
        }
        if d == 0 {
            return Err(BoxError::ZeroDimensional);
        }
        Ok(BoxRepresentation { d, boxes })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> &[AxisBox] {
        &self.boxes
    }

    pub fn get(&self, v: usize) -> &AxisBox {
        &self.boxes[v]
    }

    /// Keeps the listed vertices, renumbered in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> BoxRepresentation {
        BoxRepresentation { d: self.d, boxes: vertices.iter().map(|&v| self.boxes[v].clone()).collect() }
    }

    /// Every pair of boxes that meets in a forbidden way.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                let kind = match classify(&self.boxes[u], &self.boxes[v]) {
                    Relation::Disjoint | Relation::Contact { .. } => continue,
                    Relation::InteriorOverlap => ViolationKind::InteriorOverlap,
                    Relation::DegenerateTouching => ViolationKind::DegenerateTouching,
                    Relation::WrongAxis(k) => ViolationKind::WrongAxis(k),
                };
                out.push(Violation { u, v, kind });
            }
        }
        out
    }

    /// Contacts as `(tail, head, coordinate)`, tail being the box that ends
    /// at the contact coordinate along axis 0.
    pub fn contacts(&self) -> Result<Vec<(usize, usize, Q)>, Vec<Violation>> {
        let bad = self.violations();
        if !bad.is_empty() {
            return Err(bad);
        }
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if let Relation::Contact { at, first_below } = classify(&self.boxes[u], &self.boxes[v]) {
                    if first_below {
                        out.push((u, v, at));
                    } else {
                        out.push((v, u, at));
                    }
                }
            }
        }
        Ok(out)
    }
}

pub fn contact_graph(r: &BoxRepresentation) -> Result<Graph, Vec<Violation>> {
    let contacts = r.contacts()?;
    Ok(Graph::new(r.n(), contacts.into_iter().map(|(u, v, _)| (u, v))).expect("contacts are simple"))
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub vertex_count: Option<(usize, usize)>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.vertex_count.is_none() && self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((boxes, vertices)) = self.vertex_count {
            writeln!(f, "{boxes} boxes for {vertices} vertices")?;
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for VerificationReport {}

/// Checks the box invariants and that the contact graph equals `g` under the
/// identity vertex map. All violations are reported, sorted by pair.
pub fn verify_representation(r: &BoxRepresentation, g: &Graph) -> Result<(), VerificationReport> {
    let mut report = VerificationReport::default();
    if r.n() != g.n() {
        report.vertex_count = Some((r.n(), g.n()));
        return Err(report);
    }
    for u in 0..r.n() {
        for v in u + 1..r.n() {
            let rel = classify(r.get(u), r.get(v));
            let kind = match (rel, g.has_edge(u, v)) {
                (Relation::Contact { .. }, true) | (Relation::Disjoint, false) => continue,
                (Relation::Contact { .. }, false) => ViolationKind::ExtraEdge,
                (Relation::Disjoint, true) => ViolationKind::MissingEdge,
                (Relation::InteriorOverlap, _) => ViolationKind::InteriorOverlap,
                (Relation::DegenerateTouching, _) => ViolationKind::DegenerateTouching,
                (Relation::WrongAxis(k), _) => ViolationKind::WrongAxis(k),
            };
            report.violations.push(Violation { u, v, kind });
        }
    }
    if report.is_ok() {
        Ok(())
    } else {
        Err(report)
    }
}

/// Appends `intervals[v]` as a new last axis of box `v`.
pub fn lift_dimension(r: &BoxRepresentation, intervals: &[(Q, Q)]) -> Result<BoxRepresentation, BoxError> {
    assert_eq!(intervals.len(), r.n(), "one interval per vertex");
    let boxes = r
        .boxes
        .iter()
        .zip(intervals)
        .map(|(b, iv)| b.with_axis(iv.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    BoxRepresentation::new(r.d + 1, boxes)
}

/// Orients every contact along axis 0 and labels it by the rank (from 1) of
/// its contact coordinate among all distinct contact coordinates. Ranking is
/// order-preserving, so homogeneity is that of the coordinate labeling.
pub fn induced_labeling(r: &BoxRepresentation) -> Result<ArcLabeling, Vec<Violation>> {
    let contacts = r.contacts()?;
    let mut coords: Vec<&Q> = contacts.iter().map(|(_, _, c)| c).collect();
    coords.sort();
    coords.dedup();
    let triples: Vec<(usize, usize, i64)> = contacts
        .iter()
        .map(|(t, h, c)| (*t, *h, coords.binary_search(&c).unwrap() as i64 + 1))
        .collect();
    let g = Graph::new(r.n(), contacts.iter().map(|&(t, h, _)| (t, h))).expect("contacts are simple");
    Ok(ArcLabeling::from_triples(g, &triples).expect("arcs match edges"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path;
    use crate::rational::q;

    fn rep(d: usize, boxes: &[&[(i64, i64)]]) -> BoxRepresentation {
        BoxRepresentation::new(d, boxes.iter().map(|b| AxisBox::from_ints(b)).collect()).unwrap()
    }

    #[test]
    fn side_contact_is_an_edge() {
        let r = rep(2, &[&[(0, 1), (0, 1)], &[(1, 2), (0, 1)]]);
        assert_eq!(contact_graph(&r).unwrap().edges(), &[(0, 1)]);
    }

    #[test]
    fn corner_touch_is_degenerate() {
        let r = rep(2, &[&[(0, 1), (0, 1)], &[(1, 2), (1, 2)]]);
        assert_eq!(contact_graph(&r).unwrap_err()[0].kind, ViolationKind::DegenerateTouching);
    }

    #[test]
    fn wrong_axis_and_overlap() {
        let r = rep(2, &[&[(0, 1), (0, 1)], &[(0, 1), (1, 2)], &[(0, 2), (0, 2)]]);
        let v = r.violations();
        assert_eq!(v[0], Violation { u: 0, v: 1, kind: ViolationKind::WrongAxis(1) });
        assert_eq!(v[1].kind, ViolationKind::InteriorOverlap);
    }

    #[test]
    fn one_dimensional_path() {
        let r = rep(1, &[&[(0, 1)], &[(1, 2)], &[(2, 3)]]);
        assert!(verify_representation(&r, &path(3)).is_ok());
        let l = induced_labeling(&r).unwrap();
        assert_eq!(l.triples(), vec![(0, 1, 1), (1, 2, 2)]);
    }

    #[test]
    fn mismatch_is_reported() {
        let r = rep(1, &[&[(0, 1)], &[(1, 2)], &[(2, 3)]]);
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let report = verify_representation(&r, &g).unwrap_err();
        assert_eq!(report.violations, vec![Violation { u: 1, v: 2, kind: ViolationKind::ExtraEdge }]);
    }

    #[test]
    fn degenerate_box_rejected() {
        assert!(AxisBox::new(vec![(q(1), q(1))]).is_err());
    }

    #[test]
    fn lifting_separates_pairs() {
        let r = rep(1, &[&[(0, 1)], &[(1, 2)], &[(2, 3)]]);
        let all = vec![(q(0), q(3)); 3];
        assert_eq!(contact_graph(&lift_dimension(&r, &all).unwrap()).unwrap(), path(3));
        let split = vec![(q(0), q(1)), (q(2), q(3)), (q(0), q(3))];
        let g = contact_graph(&lift_dimension(&r, &split).unwrap()).unwrap();
        assert_eq!(g.edges(), &[(1, 2)]);
    }
}

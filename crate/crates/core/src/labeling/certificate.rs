use serde::{Deserialize, Serialize};

use crate::graph::Orientation;

use super::{find_bad_cycle, ArcLabeling, SlotCycle};

/// Serializable result of checking one orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LabelingCertificate {
    /// Arcs as `[tail, head, label]`.
    Labeling { n: usize, arcs: Vec<(usize, usize, i64)> },
    /// `cycle[through]` is entered and left along arc direction.
    BadCycle { n: usize, cycle: Vec<usize>, through: usize },
    /// Vertices whose `in < out` constraints close a cycle of slot classes.
    SlotCycle { n: usize, vertices: Vec<usize> },
}

impl LabelingCertificate {
    pub fn from_labeling(l: &ArcLabeling) -> Self {
        LabelingCertificate::Labeling { n: l.orientation().graph().n(), arcs: l.triples() }
    }

    pub fn is_labeling(&self) -> bool {
        matches!(self, LabelingCertificate::Labeling { .. })
    }
}

/// Expands an infeasibility witness into a concrete badly oriented cycle when
/// one exists among cycles of length `<= n`; otherwise returns the slot cycle.
pub fn infeasibility_certificate(o: &Orientation, slot_cycle: &SlotCycle) -> LabelingCertificate {
    let n = o.graph().n();
    match find_bad_cycle(o, n) {
        Some(bc) => LabelingCertificate::BadCycle {
            n,
            cycle: bc.cycle.vertices().to_vec(),
            through: bc.through,
        },
        None => LabelingCertificate::SlotCycle { n, vertices: slot_cycle.vertices.clone() },
    }
}

//! Contact graphs of axis-parallel boxes with unidirectional contacts.

pub mod analysis;
pub mod constructors;
pub mod cycles;
pub mod families;
pub mod formats;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod iso;
pub mod labeling;
pub mod rational;
pub mod recognition;
pub mod selftest;
pub mod unionfind;

pub use geometry::{AxisBox, BoxRepresentation};
pub use graph::{Graph, GraphError, Orientation, WalkCycle};
pub use labeling::{ArcLabeling, LabelingOutcome};

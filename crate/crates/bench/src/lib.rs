//! Fixed inputs for the benchmarks.

use cbu_core::generators::random_corpus;
use cbu_core::labeling::solve_labeling;
use cbu_core::{ArcLabeling, Graph, Orientation};

pub const SEED: u64 = 97;

/// Orientations of a fixed random corpus, one per graph, picked by a
/// multiplicative hash of the index.
pub fn orientations(count: usize, max_n: usize) -> Vec<Orientation> {
    random_corpus(SEED, count, max_n)
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let bits = (i as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
            let mask = if g.m() >= 64 { u64::MAX } else { (1u64 << g.m()) - 1 };
            Orientation::from_bits(g, bits & mask)
        })
        .collect()
}

/// Graphs of the corpus with a homogeneous labeling of the chosen
/// orientation.
pub fn labelled(count: usize, max_n: usize) -> Vec<(Graph, ArcLabeling)> {
    orientations(count, max_n)
        .into_iter()
        .filter_map(|o| solve_labeling(&o).labeling().map(|l| (o.graph().clone(), l)))
        .collect()
}

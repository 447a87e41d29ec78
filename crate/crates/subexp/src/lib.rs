//! Subexponential MWIS solver for the abbak forbidden patterns: high-degree
//! branching followed by a greedy segment decomposition of the low-degree
//! residue, solved by windowed guessing over small segments and guard
//! neighborhoods.

mod segments;
mod solver;

pub use segments::{partition_segments, Segment, SegmentDecomposition};
pub use solver::solve_abbak;

use omwis_core::{find_pattern, MatchMode, OrderedGraph, Pattern};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SubexpError {
    #[error("input is not {pattern}-free: occurrence at {witness:?}")]
    NotFree { pattern: String, witness: Vec<usize> },
    #[error("segment decomposition needs a connected graph")]
    Disconnected,
    #[error("segment decomposition needs at least two vertices, got {n}")]
    Trivial { n: usize },
}

pub(crate) fn ensure_free(
    g: &OrderedGraph,
    pattern: &Pattern,
    name: &str,
) -> Result<(), SubexpError> {
    if let Some(emb) = find_pattern(g, pattern, MatchMode::Induced) {
        return Err(SubexpError::NotFree {
            pattern: name.to_string(),
            witness: emb.positions().to_vec(),
        });
    }
    Ok(())
}

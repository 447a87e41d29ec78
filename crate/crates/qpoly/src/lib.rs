//! Quasipolynomial MWIS solvers for the aabb, aakbb and ababk forbidden
//! patterns: seagull branching, workspace halving over structured
//! instances, and chain refinement.

mod aabb;
mod aakbb;
mod ababk;

pub use aabb::{branch_vertex_aabb, enumerate_seagulls, seagull_free_parts, solve_aabb};
pub use aakbb::{halve_workspace, solve_aakbb, StructuredInstance};
pub use ababk::{refine_chain, solve_ababk, Chain, Link, Tag};

use omwis_core::{find_pattern, MatchMode, OrderedGraph, Pattern, WeightMap};
use thiserror::Error;

pub use omwis_core::Trace;

/// Denominator for turning scaled credits back into approximate rationals
/// in trace output (the exact values stay in scaled arithmetic).
pub(crate) fn scale_f64(w: &WeightMap) -> f64 {
    w.scale_f64()
}

#[derive(Debug, Error)]
pub enum QpolyError {
    #[error("input is not {pattern}-free: occurrence at {witness:?}")]
    NotFree { pattern: String, witness: Vec<usize> },
    #[error("no seagull to branch on")]
    NoSeagull,
}

pub(crate) fn ensure_free(
    g: &OrderedGraph,
    pattern: &Pattern,
    name: &str,
) -> Result<(), QpolyError> {
    if let Some(emb) = find_pattern(g, pattern, MatchMode::Induced) {
        return Err(QpolyError::NotFree {
            pattern: name.to_string(),
            witness: emb.positions().to_vec(),
        });
    }
    Ok(())
}

/// One branch of a guess-and-branch step: a child object, the scaled weight
/// credited for committed vertices, and those vertices themselves (for
/// witness reconstruction). The parent optimum is the max of child optimum
/// plus credit over all branches.
#[derive(Clone, Debug)]
pub struct Outcome<T> {
    pub item: T,
    pub credit: i64,
    pub chosen: Vec<usize>,
}

/// Sorted-set helpers shared by the structured-instance and chain solvers.
pub(crate) mod sets {
    pub use omwis_core::sets::{independent_subsets, minus, minus_closed_nbhd};
}

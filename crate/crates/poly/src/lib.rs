//! Polynomial-time MWIS solvers for the three smallest forbidden patterns:
//! the ordered path p3 (1-2,2-3), the chord patterns (1-2,1-3 and its
//! mirror), and the one-edge-with-gap patterns (k+2):1-(k+2).

mod chordfree;
mod oneedgek;
mod p3free;

pub use chordfree::{solve_chordfree, Direction};
pub use oneedgek::solve_oneedgek;
pub use p3free::solve_p3free;

use omwis_core::{find_pattern, MatchMode, OrderedGraph, Pattern};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("input is not {pattern}-free: occurrence at {witness:?}")]
    NotFree { pattern: String, witness: Vec<usize> },
}

/// Freeness probe shared by the solvers' `validate` paths.
pub(crate) fn ensure_free(g: &OrderedGraph, pattern: &Pattern, name: &str) -> Result<(), PolyError> {
    if let Some(emb) = find_pattern(g, pattern, MatchMode::Induced) {
        return Err(PolyError::NotFree {
            pattern: name.to_string(),
            witness: emb.positions().to_vec(),
        });
    }
    Ok(())
}

//! Pattern-aware front door for the solver suite: peel isolated end
//! positions off the forbidden pattern by guessing the extreme vertices of
//! an optimum solution, classify the remaining core, and route to the
//! cheapest solver whose family contains it — with an exact branch-and-bound
//! fallback when no tractable structure applies.

mod auto;
mod generic;
mod pacman;
mod route;

pub use auto::solve_auto;
pub use generic::solve_generic;
pub use pacman::pacman_reduce;
pub use route::{plan_route, Engine, Route};

use omwis_poly::PolyError;
use omwis_qpoly::QpolyError;
use omwis_subexp::SubexpError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DispatchError {
    #[error("input is not {pattern}-free: occurrence at {witness:?}")]
    NotFree { pattern: String, witness: Vec<usize> },
    #[error("pattern {0} has no isolated end to strip")]
    NoIsolatedEnds(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Qpoly(#[from] QpolyError),
    #[error(transparent)]
    Subexp(#[from] SubexpError),
}

//! Instance generators for the intractable side of the pattern landscape.
//!
//! Every generator takes a source instance (an arbitrary ordered graph with a
//! target independence number, or a 3-SAT formula) and produces an ordered
//! graph that avoids a specific pattern together with a shifted threshold, so
//! that the answer to the source question can be read off the output. The
//! constructions are meant for verification-sized inputs: each one is paired
//! with an empirical checker ([`verify_reduction`]) that brute-forces both
//! sides of the biconditional and sweeps the output for the patterns it is
//! supposed to avoid.
//!
//! The train machinery ([`Train`], [`couple_trains`], [`PermutationGadget`])
//! is exposed separately because the gadget algebra is worth testing on its
//! own: gadgets compose, and every composition must stay interchangeable with
//! a plain linear forest.

mod cnf;
mod gadget;
mod interchange;
mod longsub;
mod output;
mod reduction;
mod subdiv2;
mod train;
mod verify;

pub use cnf::{gen_3sat, CnfFormula};
pub use gadget::{
    bubble_swaps, compose_gadgets, identity_gadget, realize_permutation, swap_gadget,
    PermutationGadget,
};
pub use interchange::{alpha_embedded, braiding_pair, forest_replacement};
pub use longsub::gen_long_subdivision;
pub use output::{LayerVariant, Provenance, ReductionOutput, SubdivisionScheme, TrainTarget};
pub use reduction::gen_train_reduction;
pub use subdiv2::gen_two_subdivision;
pub use train::{couple_trains, train_alpha, Train};
pub use verify::{verify_reduction, FreenessCheck, SourceInstance, VerifyReport};

use omwis_core::brute::OracleError;
use omwis_core::graph::GraphError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HardnessError {
    #[error("clause {index} is malformed: {reason}")]
    MalformedClause { index: usize, reason: String },
    #[error("invalid CNF input: {0}")]
    Cnf(String),
    #[error("formula too large for the brute-force oracle: {vars} variables > cap {cap}")]
    FormulaTooLarge { vars: usize, cap: usize },
    #[error("train interfaces do not match: {left} outputs vs {right} inputs")]
    ArityMismatch { left: usize, right: usize },
    #[error("not a train: {0}")]
    InvalidTrain(String),
    #[error("swap position {j} out of range 1..={max}")]
    SwapOutOfRange { j: usize, max: usize },
    #[error("not a permutation gadget: {0}")]
    InvalidGadget(String),
    #[error("train interface too wide for the exact solver: {ell} > cap {cap}")]
    InterfaceTooWide { ell: usize, cap: usize },
    #[error("the source graph has no edges")]
    EdgelessSource,
    #[error("invalid embedding: {0}")]
    BadEmbedding(String),
    #[error("source kind does not match the output's scheme ({scheme})")]
    SourceMismatch { scheme: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

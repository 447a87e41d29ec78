use crate::cnf::CnfFormula;
use crate::train::Train;
use omwis_core::graph::OrderedGraph;
use std::fmt;
use std::str::FromStr;

/// Placement of the dummy vertices in the 2-subdivision generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubdivisionScheme {
    /// Core first, then dummy pairs in edge order, left dummy before right.
    LR,
    /// Core first, then dummy pairs in edge order, right dummy before left.
    RL,
    /// All right dummies, then the core, then all left dummies.
    RCoreL,
    /// Core, then all left dummies, then all right dummies.
    CoreLR,
}

impl SubdivisionScheme {
    pub const ALL: [SubdivisionScheme; 4] = [
        SubdivisionScheme::LR,
        SubdivisionScheme::RL,
        SubdivisionScheme::RCoreL,
        SubdivisionScheme::CoreLR,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SubdivisionScheme::LR => "LR",
            SubdivisionScheme::RL => "RL",
            SubdivisionScheme::RCoreL => "RcoreL",
            SubdivisionScheme::CoreLR => "coreLR",
        }
    }
}

impl fmt::Display for SubdivisionScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubdivisionScheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "LR" => Ok(SubdivisionScheme::LR),
            "RL" => Ok(SubdivisionScheme::RL),
            "RcoreL" => Ok(SubdivisionScheme::RCoreL),
            "coreLR" => Ok(SubdivisionScheme::CoreLR),
            other => Err(format!("unknown subdivision scheme {other:?}")),
        }
    }
}

/// Within-layer ordering used by the long-subdivision generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerVariant {
    /// Every layer is ordered the same way.
    Straight,
    /// Odd layers are reversed.
    Flip,
}

impl LayerVariant {
    pub const ALL: [LayerVariant; 2] = [LayerVariant::Straight, LayerVariant::Flip];

    pub fn as_str(self) -> &'static str {
        match self {
            LayerVariant::Straight => "straight",
            LayerVariant::Flip => "flip",
        }
    }
}

impl fmt::Display for LayerVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LayerVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "straight" => Ok(LayerVariant::Straight),
            "flip" => Ok(LayerVariant::Flip),
            other => Err(format!("unknown layer variant {other:?}")),
        }
    }
}

/// Pattern the train reduction is built to avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrainTarget {
    /// 5:1-5,2-4 — a nested edge pair with a spare vertex in the middle.
    Abxba,
    /// 6:1-5,2-6,3-4 — an edge under two crossing edges.
    Abccab,
}

impl TrainTarget {
    pub const ALL: [TrainTarget; 2] = [TrainTarget::Abxba, TrainTarget::Abccab];

    pub fn as_str(self) -> &'static str {
        match self {
            TrainTarget::Abxba => "abxba",
            TrainTarget::Abccab => "abccab",
        }
    }

    pub fn literal(self) -> &'static str {
        match self {
            TrainTarget::Abxba => "5:1-5,2-4",
            TrainTarget::Abccab => "6:1-5,2-6,3-4",
        }
    }
}

impl fmt::Display for TrainTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TrainTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "abxba" => Ok(TrainTarget::Abxba),
            "abccab" => Ok(TrainTarget::Abccab),
            other => Err(format!("unknown train target {other:?}")),
        }
    }
}

/// How a [`ReductionOutput`] was produced, with enough bookkeeping to verify
/// it after the fact.
#[derive(Clone, Debug)]
pub enum Provenance {
    ThreeSat {
        formula: CnfFormula,
    },
    TwoSubdivision {
        scheme: SubdivisionScheme,
        /// Exact independence-number shift: α(out) = α(src) + offset.
        offset: usize,
    },
    LongSubdivision {
        variant: LayerVariant,
        offset: usize,
    },
    Train {
        target: TrainTarget,
        /// Slot routing chosen for the source's edge occurrences (1-based).
        sigma: Vec<usize>,
        /// Wire lengths of the realized permutation gadget.
        kvec: Vec<usize>,
        offset: usize,
        /// The coupled pieces in order, kept for the exact interface DP.
        carriages: Vec<Train>,
    },
}

impl Provenance {
    pub fn scheme(&self) -> String {
        match self {
            Provenance::ThreeSat { .. } => "3sat".into(),
            Provenance::TwoSubdivision { scheme, .. } => format!("subdiv2-{scheme}"),
            Provenance::LongSubdivision { variant, .. } => format!("longsub-{variant}"),
            Provenance::Train { target, .. } => format!("train-{target}"),
        }
    }

    /// The promised exact shift α(out) − α(src), when the scheme has one.
    pub fn offset(&self) -> Option<usize> {
        match self {
            Provenance::ThreeSat { .. } => None,
            Provenance::TwoSubdivision { offset, .. }
            | Provenance::LongSubdivision { offset, .. }
            | Provenance::Train { offset, .. } => Some(*offset),
        }
    }
}

/// A generated instance: the output graph and the threshold k′ such that
/// α(graph) ≥ k′ exactly when the source instance was a yes-instance.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: OrderedGraph,
    pub threshold: usize,
    pub provenance: Provenance,
}

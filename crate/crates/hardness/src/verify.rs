use crate::cnf::CnfFormula;
use crate::output::{LayerVariant, Provenance, ReductionOutput, SubdivisionScheme, TrainTarget};
use crate::HardnessError;
use omwis_core::brute::alpha_brute_capped;
use omwis_core::graph::OrderedGraph;
use omwis_core::matcher::{contains_pattern, MatchMode};
use omwis_core::pattern::Pattern;
use omwis_core::weights::WeightMap;

/// The source side of a reduction: what the output graph was generated from.
#[derive(Debug, Clone, Copy)]
pub enum SourceInstance<'a> {
    /// An ordered graph with the independence threshold being reduced.
    Graph { graph: &'a OrderedGraph, threshold: usize },
    /// A 3-SAT formula; the source question is satisfiability.
    Formula(&'a CnfFormula),
}

/// Result of sweeping the output for one pattern its scheme promises to
/// avoid.
#[derive(Debug, Clone)]
pub struct FreenessCheck {
    pub name: &'static str,
    pub literal: &'static str,
    /// Induced match when true, subgraph match when false. Subgraph freeness
    /// is the stronger claim.
    pub induced: bool,
    pub free: bool,
}

/// Empirical check of both directions of a reduction, plus the freeness
/// sweep. `unchecked` names the patterns the scheme is known to avoid but
/// whose edge sets the suite cannot express; they are reported instead of
/// silently skipped.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub scheme: String,
    pub alpha_out: usize,
    pub threshold: usize,
    pub alpha_src: Option<usize>,
    pub src_satisfiable: Option<bool>,
    /// α(out) ≥ threshold evaluated the same way as the source question.
    pub equivalence: bool,
    /// The scheme's promised shift of the independence number, if it
    /// promises one.
    pub offset: Option<usize>,
    pub offset_exact: Option<bool>,
    pub freeness: Vec<FreenessCheck>,
    pub unchecked: Vec<&'static str>,
}

impl VerifyReport {
    /// All checks that could be run came out right.
    pub fn passed(&self) -> bool {
        self.equivalence
            && self.offset_exact.unwrap_or(true)
            && self.freeness.iter().all(|c| c.free)
    }
}

/// Brute-force both sides of `out`'s biconditional against the given source
/// and sweep the output graph for the scheme's decoded patterns. Both α
/// computations go through the capped oracle; outputs or sources beyond
/// `cap` vertices are an error, not a skipped check.
pub fn verify_reduction(
    out: &ReductionOutput,
    src: SourceInstance<'_>,
    cap: usize,
) -> Result<VerifyReport, HardnessError> {
    let scheme = out.provenance.scheme();
    let alpha_out =
        alpha_brute_capped(&out.graph, &WeightMap::unit(out.graph.n()), cap)?.witness.len();

    let (alpha_src, src_satisfiable, src_meets) = match (&out.provenance, src) {
        (Provenance::ThreeSat { .. }, SourceInstance::Formula(f)) => {
            let sat = f.satisfiable_brute()?;
            (None, Some(sat), sat)
        }
        (_, SourceInstance::Graph { graph, threshold })
            if !matches!(out.provenance, Provenance::ThreeSat { .. }) =>
        {
            let a =
                alpha_brute_capped(graph, &WeightMap::unit(graph.n()), cap)?.witness.len();
            (Some(a), None, a >= threshold)
        }
        _ => return Err(HardnessError::SourceMismatch { scheme }),
    };

    let equivalence = (alpha_out >= out.threshold) == src_meets;
    let offset = out.provenance.offset();
    let offset_exact = match (offset, alpha_src) {
        (Some(off), Some(a)) => Some(alpha_out == a + off),
        _ => None,
    };

    let (decoded, unchecked) = catalog(&out.provenance);
    let freeness = decoded
        .into_iter()
        .map(|(name, literal, mode)| {
            let pattern = Pattern::parse(literal).expect("catalog literals are well-formed");
            FreenessCheck {
                name,
                literal,
                induced: mode == MatchMode::Induced,
                free: !contains_pattern(&out.graph, &pattern, mode),
            }
        })
        .collect();

    Ok(VerifyReport {
        scheme,
        alpha_out,
        threshold: out.threshold,
        alpha_src,
        src_satisfiable,
        equivalence,
        offset,
        offset_exact,
        freeness,
        unchecked,
    })
}

type Decoded = (&'static str, &'static str, MatchMode);

/// Patterns each scheme's output is known to avoid: the ones with concrete
/// edge lists are swept, the rest are only named.
fn catalog(p: &Provenance) -> (Vec<Decoded>, Vec<&'static str>) {
    use MatchMode::{Induced, Subgraph};
    match p {
        Provenance::ThreeSat { .. } => (vec![("bad", "4:1-2,1-4", Induced)], vec![]),
        Provenance::TwoSubdivision { scheme, .. } => match scheme {
            SubdivisionScheme::LR => (
                vec![],
                vec!["adb", "abd", "abnce", "abncde", "abcd", "acbd", "adcb", "aenbcd"],
            ),
            SubdivisionScheme::RL => {
                (vec![], vec!["adb", "acbd", "aenbdc", "abd", "abnce", "abcd", "abncde"])
            }
            SubdivisionScheme::RCoreL => (
                vec![
                    ("aabbcc", "6:1-2,3-4,5-6", Subgraph),
                    ("badc", "4:1-2,1-4,3-4", Subgraph),
                ],
                vec![],
            ),
            SubdivisionScheme::CoreLR => (
                vec![
                    ("abbcca", "6:1-6,2-3,4-5", Subgraph),
                    ("aabbcc", "6:1-2,3-4,5-6", Subgraph),
                ],
                vec!["acbnde", "aednbc"],
            ),
        },
        Provenance::LongSubdivision { variant, .. } => match variant {
            LayerVariant::Straight => (
                vec![
                    ("abxxba", "6:1-6,2-5", Subgraph),
                    ("abcbca", "6:1-6,2-4,3-5", Subgraph),
                ],
                vec![],
            ),
            LayerVariant::Flip => (vec![("abcabc", "6:1-4,2-5,3-6", Subgraph)], vec![]),
        },
        Provenance::Train { target, .. } => match target {
            TrainTarget::Abxba => (vec![("abxba", "5:1-5,2-4", Induced)], vec![]),
            TrainTarget::Abccab => (vec![("abccab", "6:1-5,2-6,3-4", Induced)], vec![]),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::gen_3sat;
    use crate::subdiv2::gen_two_subdivision;

    #[test]
    fn checks_a_two_subdivision_end_to_end() {
        let k2 = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        let out = gen_two_subdivision(&k2, 1, SubdivisionScheme::LR);
        let report =
            verify_reduction(&out, SourceInstance::Graph { graph: &k2, threshold: 1 }, 16)
                .unwrap();
        assert!(report.passed());
        assert_eq!(report.alpha_out, 2);
        assert_eq!(report.alpha_src, Some(1));
        assert_eq!(report.offset, Some(1));
        assert_eq!(report.offset_exact, Some(true));
        assert_eq!(report.unchecked.len(), 8);
        assert!(report.freeness.is_empty());
    }

    #[test]
    fn checks_a_satisfiable_formula() {
        let f = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
        let out = gen_3sat(&f);
        let report = verify_reduction(&out, SourceInstance::Formula(&f), 16).unwrap();
        assert!(report.passed());
        assert_eq!(report.src_satisfiable, Some(true));
        assert_eq!(report.offset, None);
        let bad = &report.freeness[0];
        assert_eq!(bad.name, "bad");
        assert!(bad.induced);
        assert!(bad.free);
    }

    #[test]
    fn rejects_mismatched_sources() {
        let k2 = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        let f = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
        let sub = gen_two_subdivision(&k2, 1, SubdivisionScheme::RL);
        assert!(matches!(
            verify_reduction(&sub, SourceInstance::Formula(&f), 16),
            Err(HardnessError::SourceMismatch { .. })
        ));
        let sat = gen_3sat(&f);
        assert!(matches!(
            verify_reduction(&sat, SourceInstance::Graph { graph: &k2, threshold: 1 }, 16),
            Err(HardnessError::SourceMismatch { .. })
        ));
    }

    #[test]
    fn surfaces_oracle_cap_overruns() {
        let k2 = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        let out = gen_two_subdivision(&k2, 1, SubdivisionScheme::LR);
        assert!(matches!(
            verify_reduction(&out, SourceInstance::Graph { graph: &k2, threshold: 1 }, 3),
            Err(HardnessError::Oracle(_))
        ));
    }
}

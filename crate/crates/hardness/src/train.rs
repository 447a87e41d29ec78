use crate::HardnessError;
use omwis_core::graph::OrderedGraph;

/// An ordered graph with distinguished interface wires: the `inputs` are a
/// prefix of the order, the `outputs` a suffix, and both sets are
/// independent. Trains compose by identifying one train's outputs with the
/// next one's inputs, wire by wire.
#[derive(Debug, Clone)]
pub struct Train {
    graph: OrderedGraph,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
}

impl Train {
    /// Wrap `graph` with its first `n_in` positions as inputs and last
    /// `n_out` as outputs, checking that the two ranges do not meet and that
    /// each is independent.
    pub fn new(graph: OrderedGraph, n_in: usize, n_out: usize) -> Result<Self, HardnessError> {
        let n = graph.n();
        if n_in + n_out > n {
            return Err(HardnessError::InvalidTrain(format!(
                "{n_in} inputs and {n_out} outputs overlap in a graph on {n} vertices"
            )));
        }
        let inputs: Vec<usize> = (1..=n_in).collect();
        let outputs: Vec<usize> = (n - n_out + 1..=n).collect();
        if !graph.is_independent(&inputs) {
            return Err(HardnessError::InvalidTrain("inputs are not independent".into()));
        }
        if !graph.is_independent(&outputs) {
            return Err(HardnessError::InvalidTrain("outputs are not independent".into()));
        }
        Ok(Train { graph, inputs, outputs })
    }

    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }
}

/// Couple two trains by identifying the i-th output of `a` with the i-th
/// input of `b`. The result keeps `a`'s order, with the non-input remainder
/// of `b` appended; its inputs are `a`'s and its outputs are `b`'s.
pub fn couple_trains(a: &Train, b: &Train) -> Result<Train, HardnessError> {
    let ell = a.outputs.len();
    if b.inputs.len() != ell {
        return Err(HardnessError::ArityMismatch { left: ell, right: b.inputs.len() });
    }
    let n1 = a.graph.n();
    let n2 = b.graph.n();
    // b's input j sits on a's output wire; everything after shifts into the
    // fresh suffix.
    let relocate = |j: usize| if j <= ell { n1 - ell + j } else { n1 + j - ell };
    let mut edges: Vec<(usize, usize)> = a.graph.edges().to_vec();
    edges.extend(b.graph.edges().iter().map(|&(u, v)| (relocate(u), relocate(v))));
    // Wire vertices are independent on both sides, so no edge can appear in
    // both trains.
    let graph = OrderedGraph::new(n1 + n2 - ell, &edges).expect("coupling keeps edges valid");
    Train::new(graph, a.inputs.len(), b.outputs.len())
}

/// Exact maximum independent set size of the chain of `carriages`, coupled
/// left to right, computed by dynamic programming over the interface wires:
/// each carriage contributes a table indexed by (input subset, output subset)
/// holding the best interior count, and tables are chained by matching
/// subsets. Shared wire vertices are attributed to the earlier carriage.
///
/// Interfaces wider than `cap` wires are rejected, since tables grow as
/// 4^width.
pub fn train_alpha(carriages: &[Train], cap: usize) -> Result<usize, HardnessError> {
    let first = carriages
        .first()
        .ok_or_else(|| HardnessError::InvalidTrain("empty carriage list".into()))?;
    for pair in carriages.windows(2) {
        if pair[0].outputs.len() != pair[1].inputs.len() {
            return Err(HardnessError::ArityMismatch {
                left: pair[0].outputs.len(),
                right: pair[1].inputs.len(),
            });
        }
    }
    for t in carriages {
        let widest = t.inputs.len().max(t.outputs.len());
        if widest > cap {
            return Err(HardnessError::InterfaceTooWide { ell: widest, cap });
        }
    }

    const UNSET: i64 = i64::MIN;
    // Seed: the first carriage's inputs are ordinary vertices of the chain,
    // so a chosen input mask starts with its own cardinality.
    let mut frontier: Vec<i64> =
        (0..1u32 << first.inputs.len()).map(|mask| i64::from(mask.count_ones())).collect();

    for t in carriages {
        let table = carriage_table(t);
        let out_dim = 1usize << t.outputs.len();
        let mut next = vec![UNSET; out_dim];
        for (in_mask, &base) in frontier.iter().enumerate() {
            if base == UNSET {
                continue;
            }
            for (out_mask, &gain) in table[in_mask].iter().enumerate() {
                if gain == UNSET {
                    continue;
                }
                next[out_mask] = next[out_mask].max(base + gain);
            }
        }
        frontier = next;
    }

    let best = frontier.into_iter().max().expect("frontier is nonempty");
    debug_assert!(best != UNSET, "the empty set is always feasible");
    Ok(best as usize)
}

/// table[in_mask][out_mask] = max over independent sets J of the carriage
/// with the given wire intersections of |J| - |J ∩ inputs| (inputs were
/// already counted by the previous carriage or the seed).
fn carriage_table(t: &Train) -> Vec<Vec<i64>> {
    let n = t.graph.n();
    let n_in = t.inputs.len();
    let out_base = n - t.outputs.len();
    let mut table = vec![vec![i64::MIN; 1 << t.outputs.len()]; 1 << n_in];

    // Depth-first include/exclude over positions 1..=n, visiting every
    // independent set exactly once; a vertex may be included only when none
    // of its earlier neighbors was.
    fn descend(
        graph: &OrderedGraph,
        v: usize,
        n: usize,
        n_in: usize,
        out_base: usize,
        chosen: &mut [bool],
        in_mask: &mut usize,
        out_mask: &mut usize,
        count: &mut i64,
        table: &mut [Vec<i64>],
    ) {
        if v > n {
            let cell = &mut table[*in_mask][*out_mask];
            *cell = (*cell).max(*count - in_mask.count_ones() as i64);
            return;
        }
        descend(graph, v + 1, n, n_in, out_base, chosen, in_mask, out_mask, count, table);
        if graph.adj(v).iter().all(|&u| u > v || !chosen[u]) {
            chosen[v] = true;
            *count += 1;
            if v <= n_in {
                *in_mask |= 1 << (v - 1);
            }
            if v > out_base {
                *out_mask |= 1 << (v - out_base - 1);
            }
            descend(graph, v + 1, n, n_in, out_base, chosen, in_mask, out_mask, count, table);
            chosen[v] = false;
            *count -= 1;
            if v <= n_in {
                *in_mask &= !(1 << (v - 1));
            }
            if v > out_base {
                *out_mask &= !(1 << (v - out_base - 1));
            }
        }
    }

    let mut chosen = vec![false; n + 1];
    descend(
        &t.graph,
        1,
        n,
        n_in,
        out_base,
        &mut chosen,
        &mut 0,
        &mut 0,
        &mut 0,
        &mut table,
    );
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use omwis_core::brute::alpha_brute;
    use omwis_core::weights::WeightMap;

    fn path(n: usize) -> OrderedGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v, v + 1)).collect();
        OrderedGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn validates_wire_structure() {
        assert!(Train::new(path(4), 1, 1).is_ok());
        // Prefix and suffix collide.
        assert!(matches!(Train::new(path(3), 2, 2), Err(HardnessError::InvalidTrain(_))));
        // Adjacent inputs.
        assert!(matches!(Train::new(path(4), 2, 1), Err(HardnessError::InvalidTrain(_))));
    }

    #[test]
    fn coupling_joins_paths() {
        let a = Train::new(path(3), 1, 1).unwrap();
        let b = Train::new(path(3), 1, 1).unwrap();
        let ab = couple_trains(&a, &b).unwrap();
        assert_eq!(ab.graph().n(), 5);
        assert_eq!(ab.graph().edges(), &[(1, 2), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(ab.inputs(), &[1]);
        assert_eq!(ab.outputs(), &[5]);
    }

    #[test]
    fn coupling_rejects_arity_mismatch() {
        let two_wires = OrderedGraph::new(4, &[(1, 3), (2, 4)]).unwrap();
        let a = Train::new(two_wires, 2, 2).unwrap();
        let b = Train::new(path(3), 1, 1).unwrap();
        assert!(matches!(
            couple_trains(&a, &b),
            Err(HardnessError::ArityMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn dp_matches_brute_force_on_chains() {
        let wire2 = || Train::new(OrderedGraph::new(4, &[(1, 3), (2, 4)]).unwrap(), 2, 2).unwrap();
        let cases: Vec<Vec<Train>> = vec![
            vec![Train::new(path(4), 1, 1).unwrap()],
            vec![Train::new(path(3), 1, 1).unwrap(), Train::new(path(3), 1, 1).unwrap()],
            vec![wire2(), wire2()],
            vec![wire2(), wire2(), wire2()],
        ];
        for carriages in cases {
            let coupled = carriages[1..]
                .iter()
                .try_fold(carriages[0].clone(), |acc, t| couple_trains(&acc, t))
                .unwrap();
            let w = WeightMap::unit(coupled.graph().n());
            let exact = alpha_brute(coupled.graph(), &w).unwrap();
            let dp = train_alpha(&carriages, 8).unwrap();
            assert_eq!(dp, exact.witness.len());
        }
    }

    #[test]
    fn dp_rejects_wide_interfaces() {
        let wide = OrderedGraph::edgeless(20);
        let t = Train::new(wide, 10, 10).unwrap();
        assert!(matches!(
            train_alpha(&[t], 8),
            Err(HardnessError::InterfaceTooWide { ell: 10, cap: 8 })
        ));
    }
}

use crate::gadget::{bubble_swaps, identity_gadget, realize_permutation, swap_gadget};
use crate::output::{Provenance, ReductionOutput, TrainTarget};
use crate::train::{couple_trains, Train};
use crate::HardnessError;
use omwis_core::graph::OrderedGraph;

/// Reduce MIS on an arbitrary ordered graph to MIS on a graph avoiding the
/// chosen train target, by replacing every edge with a long even
/// subdivision threaded through a train: a locomotive exposes two wire ends
/// per edge, a permutation gadget routes the two ends of each edge to
/// consecutive slots, and a caboose closes each slot pair.
pub fn gen_train_reduction(
    g: &OrderedGraph,
    k: usize,
    target: TrainTarget,
) -> Result<ReductionOutput, HardnessError> {
    let n = g.n();
    let m = g.num_edges();
    if m == 0 {
        return Err(HardnessError::EdgelessSource);
    }

    // One occurrence per edge endpoint, ordered by (endpoint, edge rank);
    // occurrence t sits at position n + t and is output wire t.
    let mut occurrences: Vec<(usize, usize)> = Vec::with_capacity(2 * m);
    for (rank, &(u, v)) in g.edges().iter().enumerate() {
        occurrences.push((u, rank));
        occurrences.push((v, rank));
    }
    occurrences.sort_unstable();

    let mut loco_edges = Vec::with_capacity(2 * m);
    // slot[rank] = the two wire numbers carrying that edge's endpoints.
    let mut slot = vec![(0usize, 0usize); m];
    let mut sigma = vec![0usize; 2 * m];
    for (idx, &(endpoint, rank)) in occurrences.iter().enumerate() {
        let wire = idx + 1;
        loco_edges.push((endpoint, n + wire));
        if slot[rank].0 == 0 {
            slot[rank].0 = wire;
            sigma[idx] = 2 * rank + 1;
        } else {
            slot[rank].1 = wire;
            sigma[idx] = 2 * rank + 2;
        }
    }
    let locomotive = Train::new(OrderedGraph::new(n + 2 * m, &loco_edges)?, 0, 2 * m)?;

    // Route each edge's two wires onto consecutive caboose slots.
    let gadget = realize_permutation(target, &sigma)?;

    // Caboose: wire ends y_1..y_{2m}, then closers z_1..z_{2m} paired up;
    // the y-z matching is straight for abxba and reversed for abccab.
    let m2 = 2 * m;
    let mut cab_edges = Vec::with_capacity(2 * m2);
    for i in 1..=m2 {
        let z = match target {
            TrainTarget::Abxba => m2 + i,
            TrainTarget::Abccab => 2 * m2 + 1 - i,
        };
        cab_edges.push((i, z));
    }
    for t in 1..=m {
        cab_edges.push((m2 + 2 * t - 1, m2 + 2 * t));
    }
    let caboose = Train::new(OrderedGraph::new(2 * m2, &cab_edges)?, m2, 0)?;

    let coupled = couple_trains(&couple_trains(&locomotive, gadget.train())?, &caboose)?;

    // Each edge ends up doubly subdivided k_e times: its two wire paths plus
    // the closer pair, halved.
    let kvec = gadget.kvec().to_vec();
    let offset: usize =
        slot.iter().map(|&(a, b)| (kvec[a - 1] + kvec[b - 1] + 2) / 2).sum();

    // Keep the carriages elementary so verification can chain small tables
    // instead of enumerating the composed gadget at once.
    let mut carriages = vec![locomotive];
    let swaps = bubble_swaps(&sigma);
    if swaps.is_empty() {
        carriages.push(identity_gadget(m2).train().clone());
    } else {
        for &j in &swaps {
            carriages.push(swap_gadget(target, m2, j)?.train().clone());
        }
    }
    carriages.push(caboose);

    Ok(ReductionOutput {
        graph: coupled.graph().clone(),
        threshold: k + offset,
        provenance: Provenance::Train {
            target,
            sigma: gadget.sigma().to_vec(),
            kvec,
            offset,
            carriages,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn provenance(out: &ReductionOutput) -> (&[usize], &[usize], usize, &[Train]) {
        match &out.provenance {
            Provenance::Train { sigma, kvec, offset, carriages, .. } => {
                (sigma, kvec, *offset, carriages)
            }
            other => panic!("unexpected provenance {other:?}"),
        }
    }

    #[test]
    fn single_edge_becomes_a_long_path() {
        let k2 = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        for target in TrainTarget::ALL {
            let out = gen_train_reduction(&k2, 1, target).unwrap();
            let (sigma, kvec, offset, carriages) = provenance(&out);
            assert_eq!(sigma, &[1, 2], "{target}");
            assert_eq!(kvec, &[2, 2], "{target}");
            assert_eq!(offset, 3, "{target}");
            assert_eq!(out.threshold, 4, "{target}");
            assert_eq!(carriages.len(), 3, "{target}");
            let g = &out.graph;
            assert_eq!(g.n(), 8, "{target}");
            assert_eq!(g.components().len(), 1, "{target}");
            let deg1 = (1..=8).filter(|&v| g.degree(v) == 1).count();
            let deg2 = (1..=8).filter(|&v| g.degree(v) == 2).count();
            assert_eq!((deg1, deg2), (2, 6), "{target}");
        }
    }

    #[test]
    fn path_source_needs_no_swaps() {
        let p3 = OrderedGraph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let out = gen_train_reduction(&p3, 2, TrainTarget::Abxba).unwrap();
        let (sigma, kvec, offset, carriages) = provenance(&out);
        assert_eq!(sigma, &[1, 2, 3, 4]);
        assert_eq!(kvec, &[2, 2, 2, 2]);
        assert_eq!(offset, 6);
        assert_eq!(out.graph.n(), 15);
        assert_eq!(carriages.len(), 3);
    }

    #[test]
    fn triangle_needs_two_swaps() {
        let k3 = OrderedGraph::new(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let out = gen_train_reduction(&k3, 1, TrainTarget::Abxba).unwrap();
        let (sigma, kvec, offset, carriages) = provenance(&out);
        assert_eq!(sigma, &[1, 3, 2, 5, 4, 6]);
        assert_eq!(kvec, &[7, 7, 9, 7, 9, 7]);
        assert_eq!(offset, 26);
        assert_eq!(out.threshold, 27);
        assert_eq!(out.graph.n(), 57);
        // locomotive, two elementary swaps, caboose
        assert_eq!(carriages.len(), 4);
    }

    #[test]
    fn triangle_abccab_sizes() {
        let k3 = OrderedGraph::new(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let out = gen_train_reduction(&k3, 1, TrainTarget::Abccab).unwrap();
        let (sigma, kvec, offset, _) = provenance(&out);
        assert_eq!(sigma, &[1, 3, 2, 5, 4, 6]);
        assert_eq!(kvec, &[5, 7, 7, 7, 7, 5]);
        assert_eq!(offset, 22);
        assert_eq!(out.graph.n(), 47);
    }

    #[test]
    fn rejects_edgeless_source() {
        let g = OrderedGraph::edgeless(3);
        assert!(matches!(
            gen_train_reduction(&g, 1, TrainTarget::Abxba),
            Err(HardnessError::EdgelessSource)
        ));
    }
}

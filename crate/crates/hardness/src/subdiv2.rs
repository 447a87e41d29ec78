use crate::output::{Provenance, ReductionOutput, SubdivisionScheme};
use omwis_core::graph::OrderedGraph;

/// Replace every edge xy (x ≺ y) of `g` by the path x–ℓ–r–y and order the
/// new vertices according to `scheme`. Each replacement raises the
/// independence number by exactly one, so the threshold shifts by |E|.
/// Dummy groups are ordered lexicographically by their edge, which fixes the
/// otherwise-arbitrary placements deterministically.
pub fn gen_two_subdivision(
    g: &OrderedGraph,
    k: usize,
    scheme: SubdivisionScheme,
) -> ReductionOutput {
    let n = g.n();
    let m = g.num_edges();
    let total = n + 2 * m;

    // Position of core vertex v, and of the left/right dummy of edge t.
    let core = |v: usize| match scheme {
        SubdivisionScheme::RCoreL => m + v,
        _ => v,
    };
    let dummies = |t: usize| -> (usize, usize) {
        match scheme {
            SubdivisionScheme::LR => (n + 2 * t + 1, n + 2 * t + 2),
            SubdivisionScheme::RL => (n + 2 * t + 2, n + 2 * t + 1),
            SubdivisionScheme::RCoreL => (m + n + t + 1, t + 1),
            SubdivisionScheme::CoreLR => (n + t + 1, n + m + t + 1),
        }
    };

    let mut edges = Vec::with_capacity(3 * m);
    for (t, &(x, y)) in g.edges().iter().enumerate() {
        let (left, right) = dummies(t);
        edges.push((core(x), left));
        edges.push((left, right));
        edges.push((right, core(y)));
    }

    let graph = OrderedGraph::new(total, &edges).expect("construction yields valid edges");
    ReductionOutput {
        graph,
        threshold: k + m,
        provenance: Provenance::TwoSubdivision { scheme, offset: m },
    }
}

use crate::{ensure_free, PolyError};
use omwis_core::flow::{Dinic, INF};
use omwis_core::{OrderedGraph, Solution, WeightMap};
use omwis_classify::family_pattern;
use std::time::Instant;

/// MWIS on a p3-free ordered graph.
///
/// In a p3-free graph "v is a later neighbor of u" is transitive, so it is a
/// partial order P, and independent sets are exactly the antichains of P. The
/// maximum-weight antichain is the value of a minimum feasible flow in the
/// split network where each vertex arc carries a lower bound of its scaled
/// weight; the witness is read off the canonical cut of the final residual
/// network.
pub fn solve_p3free(
    g: &OrderedGraph,
    w: &WeightMap,
    validate: bool,
) -> Result<Solution, PolyError> {
    let start = Instant::now();
    if validate {
        ensure_free(g, &family_pattern("p3", 0).expect("catalog"), "p3")?;
    }
    let n = g.n();
    if n == 0 {
        return Ok(Solution {
            weight: w.to_rational(0),
            witness: Vec::new(),
            nodes: 0,
            millis: start.elapsed().as_millis(),
        });
    }

    // Node ids: source 0, sink 1, v_in = 2v, v_out = 2v+1, then the
    // super-source/sink of the lower-bound transformation.
    let s = 0;
    let t = 1;
    let v_in = |v: usize| 2 * v;
    let v_out = |v: usize| 2 * v + 1;
    let ss = 2 * n + 2;
    let tt = 2 * n + 3;
    let mut net = Dinic::new(2 * n + 4);

    // Vertex arcs v_in→v_out with lower bound = scaled weight: the bound
    // moves to the super source/sink as an excess, the arc itself keeps
    // residual capacity INF (cap ∞ minus the bound is still unbounded).
    let mut excess = vec![0i64; 2 * n + 4];
    for v in 1..=n {
        net.add_edge(v_in(v), v_out(v), INF, 0);
        let lb = w.scaled(v);
        excess[v_out(v)] += lb;
        excess[v_in(v)] -= lb;
    }
    for &(u, v) in g.edges() {
        // u ≺ v and uv ∈ E, i.e. u <_P v; the full relation, no reduction.
        net.add_edge(v_out(u), v_in(v), INF, 0);
    }
    for v in 1..=n {
        if g.neighbors_before(v).is_empty() {
            net.add_edge(s, v_in(v), INF, 0);
        }
        if g.neighbors_after(v).is_empty() {
            net.add_edge(v_out(v), t, INF, 0);
        }
    }
    let ts = net.add_edge(t, s, INF, 0);
    let mut supply = 0i64;
    for (x, &e) in excess.iter().enumerate() {
        if e > 0 {
            net.add_edge(ss, x, e, 0);
            supply += e;
        } else if e < 0 {
            net.add_edge(x, tt, -e, 0);
        }
    }

    // Phase 1: a feasible flow exists because every vertex lies on a chain
    // from a minimal to a maximal element, so the transform must saturate.
    let pushed = net.max_flow(ss, tt);
    assert_eq!(pushed, supply, "lower-bound transform did not saturate");
    let f0 = net.pushed(ts, INF);

    // Phase 2: minimize by draining the circulation arc and augmenting t→s
    // in what is exactly the residual network of the feasible flow.
    net.set_residual(ts, 0);
    net.set_residual(ts ^ 1, 0);
    let drained = net.max_flow(t, s);
    let best = f0 - drained;

    // No arc leaves the set Y of nodes residually reachable from t (all
    // original capacities are infinite), so every arc entering Y is at its
    // lower bound and the vertex arcs crossing into Y form an antichain of
    // weight exactly `best`.
    let reach = net.reachable_from(t);
    let witness: Vec<usize> =
        (1..=n).filter(|&v| reach[v_out(v)] && !reach[v_in(v)]).collect();
    debug_assert!(g.is_independent(&witness));
    debug_assert_eq!(witness.iter().map(|&v| w.scaled(v)).sum::<i64>(), best);

    Ok(Solution {
        weight: w.to_rational(best),
        witness,
        nodes: net.augmentations,
        millis: start.elapsed().as_millis(),
    })
}

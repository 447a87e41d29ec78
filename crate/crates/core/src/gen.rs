use crate::graph::OrderedGraph;
use crate::matcher::{find_pattern, MatchMode};
use crate::pattern::Pattern;
use crate::weights::WeightMap;
use num::{BigInt, BigRational};
use rand::seq::SliceRandom;
use rand::Rng;

/// Erdős–Rényi style graph on positions 1..=n with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> OrderedGraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    OrderedGraph::new(n, &edges).expect("generated edges are valid")
}

/// Deletes a random edge of each induced occurrence of `pat` until none
/// remain. Terminates because the edge count strictly decreases; patterns
/// with at least one edge always lose an occurrence this way.
pub fn repair_to_free<R: Rng>(rng: &mut R, g: &OrderedGraph, pat: &Pattern) -> OrderedGraph {
    assert!(
        pat.graph().num_edges() > 0,
        "cannot repair against an edgeless pattern"
    );
    let mut cur = g.clone();
    while let Some(emb) = find_pattern(&cur, pat, MatchMode::Induced) {
        let &(pu, pv) = pat
            .graph()
            .edges()
            .choose(rng)
            .expect("pattern has an edge");
        let (hu, hv) = (emb.image(pu), emb.image(pv));
        let edges: Vec<(usize, usize)> = cur
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (hu.min(hv), hu.max(hv)))
            .collect();
        cur = OrderedGraph::new(cur.n(), &edges).expect("edge removal keeps graph valid");
    }
    cur
}

/// Random positive rationals with numerators in 1..=max_num and denominators
/// in 1..=max_den.
pub fn random_weights<R: Rng>(rng: &mut R, n: usize, max_num: u32, max_den: u32) -> WeightMap {
    let ws: Vec<BigRational> = (0..n)
        .map(|_| {
            let p = rng.gen_range(1..=max_num);
            let q = rng.gen_range(1..=max_den);
            BigRational::new(BigInt::from(p), BigInt::from(q))
        })
        .collect();
    WeightMap::from_rationals(ws).expect("weights are positive")
}

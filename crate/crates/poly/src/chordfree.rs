use crate::{ensure_free, PolyError};
use omwis_classify::family_pattern;
use omwis_core::{OrderedGraph, Solution, WeightMap};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// G itself is chord-free: the position order is a perfect elimination
    /// ordering (every later neighborhood is a clique).
    Forward,
    /// mirror(G) is chord-free, i.e. G avoids the mirrored chord 3:1-3,2-3.
    Mirrored,
}

/// MWIS on a chord-free ordered graph by the two-pass elimination greedy:
/// walk the order accumulating residual weights, marking vertices whose
/// residual stays positive and charging that residual to all later
/// neighbors; then sweep backwards selecting marked vertices that are not
/// adjacent to anything already selected. The marked residuals form a
/// fractional clique cover of equal total, which certifies optimality.
pub fn solve_chordfree(
    g: &OrderedGraph,
    w: &WeightMap,
    direction: Direction,
    validate: bool,
) -> Result<Solution, PolyError> {
    let start = Instant::now();
    match direction {
        Direction::Forward => {
            if validate {
                ensure_free(g, &family_pattern("chord", 0).expect("catalog"), "chord")?;
            }
            let (best, mut witness) = greedy(g, w);
            witness.sort_unstable();
            finish(g, w, best, witness, start)
        }
        Direction::Mirrored => {
            if validate {
                ensure_free(g, &family_pattern("chordrev", 0).expect("catalog"), "chordrev")?;
            }
            let m = g.mirror();
            let (best, flipped) = greedy(&m, &mirror_weights(w, g.n()));
            let mut witness: Vec<usize> = flipped.iter().map(|&v| g.n() + 1 - v).collect();
            witness.sort_unstable();
            finish(g, w, best, witness, start)
        }
    }
}

fn mirror_weights(w: &WeightMap, n: usize) -> WeightMap {
    let map: Vec<usize> = std::iter::once(0).chain((1..=n).map(|v| n + 1 - v)).collect();
    w.restrict(&map)
}

fn greedy(g: &OrderedGraph, w: &WeightMap) -> (i64, Vec<usize>) {
    let n = g.n();
    let mut residual: Vec<i64> = (0..=n).map(|v| if v == 0 { 0 } else { w.scaled(v) }).collect();
    let mut marked = Vec::new();
    let mut dual = 0i64;
    for v in 1..=n {
        let r = residual[v];
        if r > 0 {
            marked.push(v);
            dual += r;
            for &u in g.neighbors_after(v) {
                residual[u] -= r;
            }
        }
    }
    let mut selected: Vec<usize> = Vec::new();
    for &v in marked.iter().rev() {
        if selected.iter().all(|&u| !g.has_edge(u, v)) {
            selected.push(v);
        }
    }
    let weight: i64 = selected.iter().map(|&v| w.scaled(v)).sum();
    debug_assert_eq!(weight, dual, "greedy primal and clique-cover dual differ");
    (weight, selected)
}

fn finish(
    g: &OrderedGraph,
    w: &WeightMap,
    best: i64,
    witness: Vec<usize>,
    start: Instant,
) -> Result<Solution, PolyError> {
    debug_assert!(g.is_independent(&witness));
    Ok(Solution {
        weight: w.to_rational(best),
        witness,
        nodes: g.n() as u64,
        millis: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational};

    fn q(p: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(p))
    }

    #[test]
    fn clique_picks_heaviest() {
        let g = OrderedGraph::new(
            4,
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        let w = WeightMap::from_rationals(vec![q(1), q(2), q(3), q(4)]).unwrap();
        // A clique is chord-free in both directions.
        for dir in [Direction::Forward, Direction::Mirrored] {
            let s = solve_chordfree(&g, &w, dir, true).unwrap();
            assert_eq!(s.weight, q(4));
            assert_eq!(s.witness, vec![4]);
        }
    }

    #[test]
    fn two_disjoint_edges() {
        let g = OrderedGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let s = solve_chordfree(&g, &WeightMap::unit(4), Direction::Forward, true).unwrap();
        assert_eq!(s.weight, q(2));
        assert!(g.is_independent(&s.witness));
    }

    #[test]
    fn direction_validation() {
        // 1-2,1-3 is exactly the chord pattern, so forward must refuse it,
        // while its mirror (1-3,2-3) is chord-free and the mirrored solver
        // handles it. Symmetrically for chordrev.
        let chord = OrderedGraph::new(3, &[(1, 2), (1, 3)]).unwrap();
        assert!(matches!(
            solve_chordfree(&chord, &WeightMap::unit(3), Direction::Forward, true),
            Err(PolyError::NotFree { .. })
        ));
        let s = solve_chordfree(&chord, &WeightMap::unit(3), Direction::Mirrored, true).unwrap();
        assert_eq!(s.weight, q(2));
        assert_eq!(s.witness, vec![2, 3]);

        let chordrev = OrderedGraph::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert!(matches!(
            solve_chordfree(&chordrev, &WeightMap::unit(3), Direction::Mirrored, true),
            Err(PolyError::NotFree { .. })
        ));
        let s = solve_chordfree(&chordrev, &WeightMap::unit(3), Direction::Forward, true).unwrap();
        assert_eq!(s.weight, q(2));
        assert_eq!(s.witness, vec![1, 2]);
    }

    #[test]
    fn heavy_late_vertex_with_negative_residuals() {
        // 1-3, 2-3 with weights 3,3,4: both early vertices get marked and
        // drive vertex 3's residual negative; optimum is {1,2}.
        let g = OrderedGraph::new(3, &[(1, 3), (2, 3)]).unwrap();
        let w = WeightMap::from_rationals(vec![q(3), q(3), q(4)]).unwrap();
        let s = solve_chordfree(&g, &w, Direction::Forward, true).unwrap();
        assert_eq!(s.weight, q(6));
        assert_eq!(s.witness, vec![1, 2]);
    }
}

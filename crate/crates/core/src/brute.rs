use crate::graph::OrderedGraph;
use crate::solution::Solution;
use crate::weights::WeightMap;
use std::time::Instant;
use thiserror::Error;

pub const DEFAULT_ORACLE_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle cap exceeded: n = {n} > cap = {cap}")]
    CapExceeded { n: usize, cap: usize },
}

struct Brute<'a> {
    g: &'a OrderedGraph,
    w: &'a WeightMap,
    suffix: Vec<i64>,
    conflicts: Vec<u32>,
    current: Vec<usize>,
    current_weight: i64,
    best_weight: i64,
    best: Vec<usize>,
    found: bool,
    nodes: u64,
}

impl<'a> Brute<'a> {
    fn dfs(&mut self, p: usize) {
        self.nodes += 1;
        if p > self.g.n() {
            if !self.found || self.current_weight > self.best_weight {
                self.found = true;
                self.best_weight = self.current_weight;
                self.best = self.current.clone();
            }
            return;
        }
        if self.found && self.current_weight + self.suffix[p] <= self.best_weight {
            return;
        }
        // Include-first: complete assignments are visited in lexicographic
        // order of the witness, so the first optimum recorded is lex-least.
        if self.conflicts[p] == 0 {
            self.current.push(p);
            self.current_weight += self.w.scaled(p);
            for &u in self.g.neighbors_after(p) {
                self.conflicts[u] += 1;
            }
            self.dfs(p + 1);
            for &u in self.g.neighbors_after(p) {
                self.conflicts[u] -= 1;
            }
            self.current_weight -= self.w.scaled(p);
            self.current.pop();
        }
        self.dfs(p + 1);
    }
}

/// Exhaustive maximum-weight independent set with the default size cap.
pub fn alpha_brute(g: &OrderedGraph, w: &WeightMap) -> Result<Solution, OracleError> {
    alpha_brute_capped(g, w, DEFAULT_ORACLE_CAP)
}

/// Exhaustive maximum-weight independent set. Include-first DFS over the
/// position order with suffix-weight pruning; exact, deterministic, and
/// intentionally simple — this is the oracle everything else is tested
/// against.
pub fn alpha_brute_capped(
    g: &OrderedGraph,
    w: &WeightMap,
    cap: usize,
) -> Result<Solution, OracleError> {
    if g.n() > cap {
        return Err(OracleError::CapExceeded { n: g.n(), cap });
    }
    let start = Instant::now();
    let n = g.n();
    let mut suffix = vec![0i64; n + 2];
    for p in (1..=n).rev() {
        suffix[p] = suffix[p + 1] + w.scaled(p);
    }
    let mut b = Brute {
        g,
        w,
        suffix,
        conflicts: vec![0; n + 1],
        current: Vec::new(),
        current_weight: 0,
        best_weight: 0,
        best: Vec::new(),
        found: false,
        nodes: 0,
    };
    b.dfs(1);
    Ok(Solution {
        weight: w.to_rational(b.best_weight),
        witness: b.best,
        nodes: b.nodes,
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
    fn path_of_three_unit() {
        let g = OrderedGraph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let w = WeightMap::unit(3);
        let s = alpha_brute(&g, &w).unwrap();
        assert_eq!(s.weight, q(2));
        assert_eq!(s.witness, vec![1, 3]);
    }

    #[test]
    fn clique_picks_heaviest() {
        let g = OrderedGraph::new(
            4,
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        let w = WeightMap::from_rationals(vec![q(1), q(2), q(3), q(4)]).unwrap();
        let s = alpha_brute(&g, &w).unwrap();
        assert_eq!(s.weight, q(4));
        assert_eq!(s.witness, vec![4]);
    }

    #[test]
    fn empty_graph() {
        let g = OrderedGraph::edgeless(0);
        let w = WeightMap::unit(0);
        let s = alpha_brute(&g, &w).unwrap();
        assert_eq!(s.weight, q(0));
        assert!(s.witness.is_empty());
    }

    #[test]
    fn cap_enforced() {
        let g = OrderedGraph::edgeless(25);
        let w = WeightMap::unit(25);
        assert!(matches!(
            alpha_brute(&g, &w),
            Err(OracleError::CapExceeded { n: 25, cap: 24 })
        ));
        assert!(alpha_brute_capped(&g, &w, 25).is_ok());
    }

    #[test]
    fn lexicographically_least_optimum() {
        // Unit weights on a 4-cycle in order: optima {1,3} and {2,4}.
        let g = OrderedGraph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let w = WeightMap::unit(4);
        let s = alpha_brute(&g, &w).unwrap();
        assert_eq!(s.witness, vec![1, 3]);
    }
}

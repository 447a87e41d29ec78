//! Sorted-set helpers shared by the branching solvers: ambient position
//! lists stay sorted, so plain filters keep them that way.

use crate::graph::OrderedGraph;

/// `base` minus the closed neighborhood of `chosen`.
pub fn minus_closed_nbhd(base: &[usize], g: &OrderedGraph, chosen: &[usize]) -> Vec<usize> {
    base.iter()
        .copied()
        .filter(|&v| !chosen.contains(&v) && !chosen.iter().any(|&c| g.has_edge(c, v)))
        .collect()
}

pub fn minus(base: &[usize], gone: &[usize]) -> Vec<usize> {
    base.iter().copied().filter(|v| !gone.contains(v)).collect()
}

/// All independent subsets of `pool` with at most `cap` elements, in
/// lexicographic order by increasing size (the empty set first). Extensions
/// that touch a neighbor of the set are pruned as the set grows, so the
/// walk never visits a dependent subset.
pub fn independent_subsets(pool: &[usize], g: &OrderedGraph, cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..cap {
        let mut next = Vec::new();
        for set in &frontier {
            let lo = set.last().copied().unwrap_or(0);
            for &v in pool.iter().filter(|&&v| v > lo) {
                if set.iter().all(|&u| !g.has_edge(u, v)) {
                    let mut grown = set.clone();
                    grown.push(v);
                    next.push(grown);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    out
}

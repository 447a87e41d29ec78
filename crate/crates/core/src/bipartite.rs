use crate::flow::{Dinic, INF};
use crate::graph::OrderedGraph;
use crate::solution::Solution;
use crate::weights::WeightMap;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BipartiteError {
    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    OddCycle { cycle: Vec<usize> },
    #[error("supplied parts are not a partition of the vertices (vertex {v})")]
    NotAPartition { v: usize },
    #[error("supplied parts put edge {u}-{v} inside one side")]
    InvalidParts { u: usize, v: usize },
}

/// 2-colors the graph by BFS, or extracts an odd closed walk as evidence.
/// Returns colors indexed by position: false = left, true = right; isolated
/// vertices go left.
fn two_color(g: &OrderedGraph) -> Result<Vec<bool>, BipartiteError> {
    let n = g.n();
    let mut color = vec![None; n + 1];
    let mut parent = vec![0usize; n + 1];
    for s in 1..=n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.adj(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!color[v].unwrap());
                        parent[u] = v;
                        queue.push_back(u);
                    }
                    Some(cu) => {
                        if cu == color[v].unwrap() {
                            return Err(BipartiteError::OddCycle {
                                cycle: odd_cycle(&parent, v, u),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

/// Closes the BFS-tree paths from `u` and `v` at their lowest common
/// ancestor; together with the edge u-v this is an odd cycle.
fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let mut up_u = vec![u];
    let mut x = u;
    while parent[x] != 0 {
        x = parent[x];
        up_u.push(x);
    }
    let on_u_path: std::collections::HashSet<usize> = up_u.iter().copied().collect();
    let mut down_v = vec![v];
    let mut y = v;
    while !on_u_path.contains(&y) {
        y = parent[y];
        down_v.push(y);
    }
    let lca = y;
    let mut cycle: Vec<usize> =
        up_u.iter().take_while(|&&z| z != lca).copied().collect();
    cycle.push(lca);
    for &z in down_v.iter().rev().skip(1) {
        cycle.push(z);
    }
    debug_assert!(cycle.len() % 2 == 1 && cycle.len() >= 3);
    cycle
}

/// Exact MWIS on a bipartite graph via the weighted König–Egerváry duality:
/// total weight minus a minimum vertex cover found by max-flow. `parts`, if
/// supplied, is validated; otherwise the bipartition is computed by BFS
/// 2-coloring and an odd cycle is reported as the error evidence.
pub fn mwis_bipartite(
    g: &OrderedGraph,
    w: &WeightMap,
    parts: Option<(&[usize], &[usize])>,
) -> Result<Solution, BipartiteError> {
    let start = Instant::now();
    let n = g.n();
    let right: Vec<bool> = match parts {
        Some((left, rgt)) => {
            let mut side = vec![None; n + 1];
            for &v in left {
                side[v] = Some(false);
            }
            for &v in rgt {
                if side[v].is_some() {
                    return Err(BipartiteError::NotAPartition { v });
                }
                side[v] = Some(true);
            }
            for v in 1..=n {
                if side[v].is_none() {
                    return Err(BipartiteError::NotAPartition { v });
                }
            }
            for &(u, v) in g.edges() {
                if side[u] == side[v] {
                    return Err(BipartiteError::InvalidParts { u, v });
                }
            }
            side.into_iter().map(|s| s.unwrap_or(false)).collect()
        }
        None => two_color(g)?,
    };

    // Nodes: 0 = source, v in 1..=n, n+1 = sink.
    let s = 0;
    let t = n + 1;
    let mut net = Dinic::new(n + 2);
    let mut total = 0i64;
    for v in 1..=n {
        total += w.scaled(v);
        if !right[v] {
            net.add_edge(s, v, w.scaled(v), 0);
        } else {
            net.add_edge(v, t, w.scaled(v), 0);
        }
    }
    for &(u, v) in g.edges() {
        let (l, r) = if right[u] { (v, u) } else { (u, v) };
        net.add_edge(l, r, INF, 0);
    }
    let cover = net.max_flow(s, t);
    let reach = net.reachable_from(s);

    // Min cut: left vertices cut off from s plus right vertices still
    // reached; the complement is a maximum-weight independent set.
    let mut witness = Vec::new();
    for v in 1..=n {
        let in_cover = if !right[v] { !reach[v] } else { reach[v] };
        if !in_cover {
            witness.push(v);
        }
    }
    debug_assert!(g.is_independent(&witness));
    debug_assert_eq!(w.sum_scaled(witness.iter().copied()), total - cover);
    Ok(Solution {
        weight: w.to_rational(total - cover),
        witness,
        nodes: net.augmentations,
        millis: start.elapsed().as_millis(),
    })
}

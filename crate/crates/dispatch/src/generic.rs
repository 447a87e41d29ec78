use omwis_core::sets::{minus, minus_closed_nbhd};
use omwis_core::{OrderedGraph, Solution, Trace, WeightMap};
use std::time::Instant;

/// Exact MWIS with no structural assumptions: split into connected
/// components, close out degree-≤2 components (paths and cycles) by linear
/// DP, and otherwise branch on a maximum-degree vertex, pruning the include
/// side with the sum of the positive weights it could still collect.
pub fn solve_generic(g: &OrderedGraph, w: &WeightMap, mut trace: Option<&mut Trace>) -> Solution {
    let start = Instant::now();
    let mut nodes = 0u64;
    let (value, mut witness) = go(g, w, &mut nodes, trace.as_deref_mut(), None);
    witness.sort_unstable();
    debug_assert!(g.is_independent(&witness));
    debug_assert_eq!(w.sum_scaled(witness.iter().copied()), value);
    Solution {
        weight: w.to_rational(value),
        witness,
        nodes,
        millis: start.elapsed().as_millis(),
    }
}

fn log(trace: &mut Option<&mut Trace>, w: &WeightMap, parent: Option<u64>, action: &str, credit: i64) -> Option<u64> {
    trace.as_deref_mut().map(|t| t.node(parent, action, credit as f64 / w.scale_f64()))
}

fn go(
    g: &OrderedGraph,
    w: &WeightMap,
    nodes: &mut u64,
    mut trace: Option<&mut Trace>,
    parent: Option<u64>,
) -> (i64, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let comps = g.components();
    if comps.len() > 1 {
        let id = log(&mut trace, w, parent, &format!("{} components", comps.len()), 0);
        let mut value = 0;
        let mut witness = Vec::new();
        for comp in comps {
            let (v, wit) = recurse(g, w, &comp, nodes, trace.as_deref_mut(), id);
            value += v;
            witness.extend(wit);
        }
        return (value, witness);
    }
    if (1..=n).all(|v| g.degree(v) <= 2) {
        return chain_dp(g, w);
    }

    let mut v = 1;
    for u in 2..=n {
        if g.degree(u) > g.degree(v) {
            v = u;
        }
    }
    *nodes += 1;
    let all: Vec<usize> = (1..=n).collect();
    let skip_id = log(&mut trace, w, parent, &format!("skip {v}"), 0);
    let (skip_val, skip_wit) = recurse(g, w, &minus(&all, &[v]), nodes, trace.as_deref_mut(), skip_id);

    let keep = minus_closed_nbhd(&all, g, &[v]);
    let bound = w.scaled(v) + keep.iter().map(|&u| w.scaled(u).max(0)).sum::<i64>();
    if bound > skip_val {
        let take_id = log(&mut trace, w, parent, &format!("take {v}"), w.scaled(v));
        let (val, mut wit) = recurse(g, w, &keep, nodes, trace.as_deref_mut(), take_id);
        if val + w.scaled(v) > skip_val {
            wit.push(v);
            return (val + w.scaled(v), wit);
        }
    }
    (skip_val, skip_wit)
}

fn recurse(
    g: &OrderedGraph,
    w: &WeightMap,
    verts: &[usize],
    nodes: &mut u64,
    trace: Option<&mut Trace>,
    parent: Option<u64>,
) -> (i64, Vec<usize>) {
    if verts.is_empty() {
        return (0, Vec::new());
    }
    let (sub, map) = g.induce(verts);
    let sw = w.restrict(&map);
    let (value, wit) = go(&sub, &sw, nodes, trace, parent);
    (value, wit.into_iter().map(|p| map[p]).collect())
}

/// Exact answer for a connected component of maximum degree 2 — a single
/// vertex, a path, or a cycle — by the usual take/skip recurrence along the
/// walk. Counts no branch nodes.
fn chain_dp(g: &OrderedGraph, w: &WeightMap) -> (i64, Vec<usize>) {
    let n = g.n();
    if n == 1 {
        return if w.scaled(1) > 0 { (w.scaled(1), vec![1]) } else { (0, Vec::new()) };
    }
    match (1..=n).find(|&v| g.degree(v) == 1) {
        Some(end) => path_dp(g, w, &walk(g, end)),
        None => {
            // A cycle: settle vertex 1 both ways and reduce to paths.
            let order = walk(g, 1);
            let (skip_val, skip_wit) = path_dp(g, w, &order[1..]);
            let (val, mut wit) = path_dp(g, w, &order[2..n - 1]);
            if val + w.scaled(1) > skip_val {
                wit.push(1);
                (val + w.scaled(1), wit)
            } else {
                (skip_val, skip_wit)
            }
        }
    }
}

/// Vertices of a path or cycle in walk order, starting at `from`.
fn walk(g: &OrderedGraph, from: usize) -> Vec<usize> {
    let mut order = vec![from];
    let mut prev = 0;
    loop {
        let cur = *order.last().unwrap();
        match g.adj(cur).iter().copied().find(|&u| u != prev && u != from) {
            Some(next) => {
                prev = cur;
                order.push(next);
            }
            None => return order,
        }
    }
}

fn path_dp(g: &OrderedGraph, w: &WeightMap, order: &[usize]) -> (i64, Vec<usize>) {
    debug_assert!(order.windows(2).all(|p| g.has_edge(p[0], p[1])));
    let m = order.len();
    let mut dp = vec![0i64; m + 1];
    for i in 0..m {
        let take = w.scaled(order[i]) + if i >= 1 { dp[i - 1] } else { 0 };
        dp[i + 1] = dp[i].max(take);
    }
    let mut wit = Vec::new();
    let mut i = m;
    while i > 0 {
        if dp[i] == dp[i - 1] {
            i -= 1;
        } else {
            wit.push(order[i - 1]);
            i = i.saturating_sub(2);
        }
    }
    (dp[m], wit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn weights(vals: &[i64]) -> WeightMap {
        let rats: Vec<BigRational> =
            vals.iter().map(|&v| BigRational::from_integer(v.into())).collect();
        WeightMap::from_rationals(rats).unwrap()
    }

    #[test]
    fn edgeless_graph_takes_everything() {
        let g = OrderedGraph::new(4, &[]).unwrap();
        let sol = solve_generic(&g, &WeightMap::unit(4), None);
        assert_eq!(sol.witness, vec![1, 2, 3, 4]);
        assert_eq!(sol.weight, BigRational::from_integer(4.into()));
        assert_eq!(sol.nodes, 0);
    }

    #[test]
    fn clique_takes_the_heaviest_vertex() {
        let g =
            OrderedGraph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let sol = solve_generic(&g, &weights(&[1, 2, 3, 4]), None);
        assert_eq!(sol.weight, BigRational::from_integer(4.into()));
        assert_eq!(sol.witness, vec![4]);
    }

    #[test]
    fn paths_and_cycles_fold_without_branching() {
        let path: Vec<(usize, usize)> = (1..10).map(|i| (i, i + 1)).collect();
        let g = OrderedGraph::new(10, &path).unwrap();
        let sol = solve_generic(&g, &WeightMap::unit(10), None);
        assert_eq!(sol.weight, BigRational::from_integer(5.into()));
        assert_eq!(sol.nodes, 0);

        let mut cycle = path[..4].to_vec();
        cycle.push((1, 5));
        let g = OrderedGraph::new(5, &cycle).unwrap();
        let sol = solve_generic(&g, &WeightMap::unit(5), None);
        assert_eq!(sol.weight, BigRational::from_integer(2.into()));

        // The heavy vertex pairs up with its one non-neighbor across the cycle.
        let g = OrderedGraph::new(5, &cycle).unwrap();
        let sol = solve_generic(&g, &weights(&[1, 1, 5, 1, 1]), None);
        assert_eq!(sol.witness, vec![3, 5]);
        assert_eq!(sol.weight, BigRational::from_integer(6.into()));
    }

    #[test]
    fn components_are_solved_separately() {
        // A triangle, an edge, and an isolated vertex.
        let g = OrderedGraph::new(6, &[(1, 2), (1, 3), (2, 3), (4, 5)]).unwrap();
        let sol = solve_generic(&g, &weights(&[2, 1, 1, 3, 4, 7]), None);
        assert_eq!(sol.weight, BigRational::from_integer((2 + 4 + 7).into()));
        assert_eq!(sol.witness, vec![1, 5, 6]);
    }

    #[test]
    fn branching_handles_dense_overlap() {
        // Two triangles sharing a vertex plus a pendant: degree forces a
        // real branch and the bound must not cut the optimum.
        let g = OrderedGraph::new(6, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)])
            .unwrap();
        let sol = solve_generic(&g, &WeightMap::unit(6), None);
        assert_eq!(sol.weight, BigRational::from_integer(3.into()));
        assert!(sol.nodes >= 1);
    }
}

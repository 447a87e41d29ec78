use crate::{ensure_free, QpolyError, Trace};
use omwis_classify::family_pattern;
use omwis_core::{mwis_bipartite, OrderedGraph, Solution, WeightMap};
use std::collections::HashMap;
use std::time::Instant;

/// All triples x ≺ y ≺ z with xy ∈ E and yz ∈ E, lexicographically.
pub fn enumerate_seagulls(g: &OrderedGraph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for x in 1..=g.n() {
        for &y in g.neighbors_after(x) {
            for &z in g.neighbors_after(y) {
                out.push((x, y, z));
            }
        }
    }
    out
}

/// The bipartition that exists whenever G has no seagull: vertices with no
/// later neighbor (sinks, including isolated vertices) versus the rest. Two
/// adjacent sinks are impossible by definition; two adjacent non-sinks u ≺ v
/// would extend through v's later neighbor into a seagull.
pub fn seagull_free_parts(g: &OrderedGraph) -> (Vec<usize>, Vec<usize>) {
    let mut sinks = Vec::new();
    let mut rest = Vec::new();
    for v in 1..=g.n() {
        if g.neighbors_after(v).is_empty() {
            sinks.push(v);
        } else {
            rest.push(v);
        }
    }
    (sinks, rest)
}

fn coverage(g: &OrderedGraph, seagulls: &[(usize, usize, usize)], v: usize) -> usize {
    let hits = |u: usize| u == v || g.has_edge(u, v);
    seagulls.iter().filter(|&&(x, y, z)| hits(x) || hits(y) || hits(z)).count()
}

/// The branching vertex: among the three vertices of the lexicographically
/// first seagull, the one whose closed neighborhood meets the most seagulls
/// (ties to the smaller position). In an aabb-free graph any two seagulls
/// share a vertex or an edge, so every seagull meets one of the three
/// neighborhoods and the best covers at least a third.
pub fn branch_vertex_aabb(g: &OrderedGraph) -> Result<usize, QpolyError> {
    let seagulls = enumerate_seagulls(g);
    let &(x, y, z) = seagulls.first().ok_or(QpolyError::NoSeagull)?;
    let best = [x, y, z]
        .into_iter()
        .max_by(|&a, &b| {
            coverage(g, &seagulls, a)
                .cmp(&coverage(g, &seagulls, b))
                .then(b.cmp(&a))
        })
        .expect("three candidates");
    debug_assert!(
        coverage(g, &seagulls, best) * 3 >= seagulls.len(),
        "branch vertex covers fewer than a third of the seagulls"
    );
    Ok(best)
}

struct Ctx<'a> {
    g: &'a OrderedGraph,
    w: &'a WeightMap,
    nodes: u64,
    cache: Option<HashMap<Vec<usize>, (i64, Vec<usize>)>>,
    trace: Option<&'a mut Trace>,
}

impl<'a> Ctx<'a> {
    fn log(&mut self, parent: Option<u64>, action: &str, credit: i64) -> Option<u64> {
        let scale = crate::scale_f64(self.w);
        self.trace
            .as_deref_mut()
            .map(|t| t.node(parent, action, credit as f64 / scale))
    }

    /// MWIS over the ambient positions in `alive`, in scaled arithmetic.
    fn solve(&mut self, alive: &[usize], parent: Option<u64>) -> (i64, Vec<usize>) {
        self.nodes += 1;
        if let Some(cache) = &self.cache {
            if let Some(hit) = cache.get(alive) {
                return hit.clone();
            }
        }
        let (sub, map) = self.g.induce(alive);
        let result = match branch_vertex_aabb(&sub) {
            Err(QpolyError::NoSeagull) => {
                self.log(parent, "bipartite", 0);
                let (left, right) = seagull_free_parts(&sub);
                let sw = self.w.restrict(&map);
                // The partition is valid in every seagull-free graph, not
                // just aabb-free ones, so this cannot fail.
                let sol = mwis_bipartite(&sub, &sw, Some((&left, &right)))
                    .expect("seagull-free graphs are bipartite with these parts");
                let scaled = sw.sum_scaled(sol.witness.iter().copied());
                (scaled, sol.witness.iter().map(|&v| map[v]).collect())
            }
            Ok(local_v) => {
                let v = map[local_v];
                let id = self.log(parent, &format!("branch v={v}"), 0);
                let without: Vec<usize> = alive.iter().copied().filter(|&u| u != v).collect();
                let ex = self.log(id, "exclude", 0);
                let (skip_val, skip_wit) = self.solve(&without, ex);
                // Include v: drop its closed neighborhood, credit its weight.
                let kept: Vec<usize> = alive
                    .iter()
                    .copied()
                    .filter(|&u| u != v && !self.g.has_edge(u, v))
                    .collect();
                let inc = self.log(id, "include", self.w.scaled(v));
                let (take_val, mut take_wit) = self.solve(&kept, inc);
                let take_val = take_val + self.w.scaled(v);
                if take_val > skip_val {
                    take_wit.push(v);
                    take_wit.sort_unstable();
                    (take_val, take_wit)
                } else {
                    (skip_val, skip_wit)
                }
            }
            Err(other) => unreachable!("branch_vertex_aabb only fails without seagulls: {other}"),
        };
        if let Some(cache) = &mut self.cache {
            cache.insert(alive.to_vec(), result.clone());
        }
        result
    }
}

/// MWIS on an aabb-free ordered graph by seagull branching: bipartite leaves,
/// otherwise branch on a vertex covering a third of all seagulls.
pub fn solve_aabb(
    g: &OrderedGraph,
    w: &WeightMap,
    validate: bool,
    use_cache: bool,
    trace: Option<&mut Trace>,
) -> Result<Solution, QpolyError> {
    let start = Instant::now();
    if validate {
        ensure_free(g, &family_pattern("aabb", 0).expect("catalog"), "aabb")?;
    }
    let mut ctx = Ctx {
        g,
        w,
        nodes: 0,
        cache: use_cache.then(HashMap::new),
        trace,
    };
    let alive: Vec<usize> = (1..=g.n()).collect();
    let (value, witness) = ctx.solve(&alive, None);
    debug_assert!(g.is_independent(&witness));
    debug_assert_eq!(w.sum_scaled(witness.iter().copied()), value);
    Ok(Solution {
        weight: w.to_rational(value),
        witness,
        nodes: ctx.nodes,
        millis: start.elapsed().as_millis(),
    })
}

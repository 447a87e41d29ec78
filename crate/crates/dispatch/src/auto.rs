use crate::generic::solve_generic;
use crate::pacman::branches;
use crate::route::{plan_route, Engine, Route};
use crate::DispatchError;
use omwis_classify::Class;
use omwis_core::{find_pattern, MatchMode, OrderedGraph, Pattern, Solution, Trace, WeightMap};
use omwis_poly::{solve_chordfree, solve_oneedgek, solve_p3free};
use omwis_qpoly::{solve_aakbb, solve_ababk};
use omwis_subexp::solve_abbak;
use std::time::Instant;

/// Solve MWIS on a graph promised to avoid `h`: guess the extreme solution
/// vertices once per isolated end layer of `h`, then hand every residual
/// instance to the solver of the family the stripped core falls into.
/// `validate` checks the promise up front and fails rather than risk running
/// a specialized solver outside its contract.
pub fn solve_auto(
    g: &OrderedGraph,
    w: &WeightMap,
    h: &Pattern,
    validate: bool,
    mut trace: Option<&mut Trace>,
) -> Result<Solution, DispatchError> {
    let start = Instant::now();
    if validate {
        if let Some(emb) = find_pattern(g, h, MatchMode::Induced) {
            return Err(DispatchError::NotFree {
                pattern: h.literal(),
                witness: emb.positions().to_vec(),
            });
        }
    }
    let route = plan_route(h);
    if route.class.class == Class::NPHard {
        eprintln!(
            "warning: pattern {} admits no tractable structure; falling back to exhaustive search",
            h.literal()
        );
    }
    let root = log(
        &mut trace,
        w,
        None,
        &format!("route {} layers={}", route.engine.label(), route.layers),
        0,
    );
    let mut nodes = 0u64;
    let (value, mut witness) =
        descend(g, w, &route, route.layers, &mut nodes, trace.as_deref_mut(), root)?;
    witness.sort_unstable();
    debug_assert!(g.is_independent(&witness));
    debug_assert_eq!(w.sum_scaled(witness.iter().copied()), value);
    Ok(Solution {
        weight: w.to_rational(value),
        witness,
        nodes,
        millis: start.elapsed().as_millis(),
    })
}

fn log(
    trace: &mut Option<&mut Trace>,
    w: &WeightMap,
    parent: Option<u64>,
    action: &str,
    credit: i64,
) -> Option<u64> {
    trace.as_deref_mut().map(|t| t.node(parent, action, credit as f64 / w.scale_f64()))
}

fn descend(
    g: &OrderedGraph,
    w: &WeightMap,
    route: &Route,
    depth: usize,
    nodes: &mut u64,
    mut trace: Option<&mut Trace>,
    parent: Option<u64>,
) -> Result<(i64, Vec<usize>), DispatchError> {
    if depth == 0 {
        return run_engine(g, w, route.engine, nodes, trace);
    }
    let mut best: Option<(i64, Vec<usize>)> = None;
    for br in branches(g, w) {
        *nodes += 1;
        let id = log(&mut trace, w, parent, &format!("guess ends {:?}", br.chosen), br.credit);
        let (sub, map) = g.induce(&br.item);
        let sw = w.restrict(&map);
        let (val, wit) = descend(&sub, &sw, route, depth - 1, nodes, trace.as_deref_mut(), id)?;
        let total = val + br.credit;
        if best.as_ref().map_or(true, |(b, _)| total > *b) {
            let mut full = br.chosen.clone();
            full.extend(wit.into_iter().map(|p| map[p]));
            best = Some((total, full));
        }
    }
    Ok(best.expect("the empty guess is always branched"))
}

fn run_engine(
    g: &OrderedGraph,
    w: &WeightMap,
    engine: Engine,
    nodes: &mut u64,
    trace: Option<&mut Trace>,
) -> Result<(i64, Vec<usize>), DispatchError> {
    let sol = match engine {
        Engine::P3Free => solve_p3free(g, w, false)?,
        Engine::ChordFree(dir) => solve_chordfree(g, w, dir, false)?,
        Engine::OneEdgeK(k) => solve_oneedgek(g, w, k, false)?,
        Engine::Aakbb(k) => solve_aakbb(g, w, k, false, trace)?,
        Engine::Ababk(k) => solve_ababk(g, w, k, false, trace)?,
        Engine::Abbak(k) => solve_abbak(g, w, k, false, None, trace)?,
        Engine::Generic => solve_generic(g, w, trace),
    };
    *nodes += sol.nodes;
    Ok((w.sum_scaled(sol.witness.iter().copied()), sol.witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;
    use omwis_classify::parse_pattern_spec;
    use omwis_core::alpha_brute;

    fn pat(spec: &str) -> Pattern {
        parse_pattern_spec(spec).unwrap()
    }

    #[test]
    fn routing_trace_nests_two_guess_layers_around_the_core() {
        let g = OrderedGraph::new(5, &[(1, 3), (2, 3), (3, 5), (4, 5)]).unwrap();
        let w = WeightMap::unit(5);
        let mut trace = Trace::new();
        let sol = solve_auto(&g, &w, &pat("ext abba(2)"), true, Some(&mut trace)).unwrap();
        assert_eq!(sol.weight, alpha_brute(&g, &w).unwrap().weight);

        let actions: Vec<(Option<u64>, u64, String)> = trace
            .events
            .iter()
            .map(|e| {
                (
                    e["parent"].as_u64(),
                    e["node"].as_u64().unwrap(),
                    e["action"].as_str().unwrap().to_string(),
                )
            })
            .collect();
        assert_eq!(actions[0].2, "route abbak(0) layers=2");
        let guess = |s: &str| s.starts_with("guess ends");
        // Layer one hangs off the route node, layer two off layer one, and
        // nothing guesses below that.
        let first: Vec<u64> = actions
            .iter()
            .filter(|(p, _, a)| guess(a) && *p == Some(actions[0].1))
            .map(|(_, id, _)| *id)
            .collect();
        assert!(!first.is_empty());
        let second: Vec<u64> = actions
            .iter()
            .filter(|(p, _, a)| guess(a) && p.map_or(false, |p| first.contains(&p)))
            .map(|(_, id, _)| *id)
            .collect();
        assert!(!second.is_empty());
        for (p, _, a) in &actions {
            if guess(a) && p.is_some() {
                assert!(
                    *p == Some(actions[0].1) || first.contains(&p.unwrap()),
                    "a third guessing layer appeared"
                );
            }
        }
        assert!(second.iter().all(|id| first.iter().all(|f| f != id)));
    }

    #[test]
    fn validation_rejects_an_occurrence() {
        let g = OrderedGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let w = WeightMap::unit(4);
        let err = solve_auto(&g, &w, &pat("aabb"), true, None).unwrap_err();
        match err {
            DispatchError::NotFree { pattern, witness } => {
                assert_eq!(pattern, "4:1-2,3-4");
                assert_eq!(witness, vec![1, 2, 3, 4]);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn empty_graph_is_worth_nothing_under_every_route() {
        let g = OrderedGraph::new(0, &[]).unwrap();
        let w = WeightMap::unit(0);
        for spec in [
            "p3", "chord", "chordrev", "3:1-3", "aabb", "abab", "abba", "ext abba(1)",
            "6:1-2,3-4,5-6", "2:1-2", "1:",
        ] {
            let sol = solve_auto(&g, &w, &pat(spec), true, None).unwrap();
            assert_eq!(sol.weight, BigRational::from_integer(0.into()), "{spec}");
            assert!(sol.witness.is_empty());
        }
    }

    #[test]
    fn hard_patterns_fall_back_to_the_exact_search() {
        let g = OrderedGraph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let w = WeightMap::unit(5);
        let sol = solve_auto(&g, &w, &pat("6:1-2,3-4,5-6"), true, None).unwrap();
        assert_eq!(sol.weight, BigRational::from_integer(2.into()));
    }
}

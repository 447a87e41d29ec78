use num::BigRational;
use omwis_classify::family_pattern;
use omwis_core::gen::{random_graph, random_weights, repair_to_free};
use omwis_core::{alpha_brute, OrderedGraph, WeightMap};
use omwis_qpoly::{
    branch_vertex_aabb, enumerate_seagulls, halve_workspace, refine_chain,
    seagull_free_parts, Chain, Link, StructuredInstance, Tag,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instance(seed: u64, n: usize, p: f64, family: &str, k: usize) -> (OrderedGraph, WeightMap) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_graph(&mut rng, n, p);
    let pat = family_pattern(family, k).unwrap();
    let free = repair_to_free(&mut rng, &g, &pat);
    let w = random_weights(&mut rng, n, 20, 4);
    (free, w)
}

/// Strip seagulls by deleting the leading edge of the first one, repeatedly.
fn strip_seagulls(g: &OrderedGraph) -> OrderedGraph {
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    loop {
        let cur = OrderedGraph::new(g.n(), &edges).unwrap();
        match enumerate_seagulls(&cur).first() {
            Some(&(x, y, _)) => edges.retain(|&e| e != (x, y)),
            None => return cur,
        }
    }
}

fn brute_on(g: &OrderedGraph, w: &WeightMap, verts: &[usize]) -> BigRational {
    if verts.is_empty() {
        return BigRational::from_integer(0.into());
    }
    let (sub, map) = g.induce(verts);
    let sw = w.restrict(&map);
    alpha_brute(&sub, &sw).unwrap().weight
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    // Sinks can never be adjacent, and in a seagull-free graph the
    // non-sinks can't be either, so the two sides split every vertex.
    #[test]
    fn seagull_free_graphs_split_into_two_independent_sides(
        seed in any::<u64>(), n in 1usize..=14, p in 0.1f64..0.9,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = strip_seagulls(&random_graph(&mut rng, n, p));
        prop_assert!(enumerate_seagulls(&g).is_empty());
        let (sinks, rest) = seagull_free_parts(&g);
        let mut all: Vec<usize> = sinks.iter().chain(&rest).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=n).collect::<Vec<_>>());
        prop_assert!(g.is_independent(&sinks));
        prop_assert!(g.is_independent(&rest));
    }

    // In a pattern-free graph, one vertex of the first seagull always
    // dominates at least a third of all seagulls.
    #[test]
    fn first_seagull_vertex_covers_a_third(
        seed in any::<u64>(), n in 2usize..=12, p in 0.1f64..0.9,
    ) {
        let (g, _) = instance(seed, n, p, "aabb", 0);
        let seagulls = enumerate_seagulls(&g);
        prop_assume!(!seagulls.is_empty());
        let v = branch_vertex_aabb(&g).unwrap();
        let covered = seagulls
            .iter()
            .filter(|&&(x, y, z)| {
                [x, y, z].iter().any(|&u| u == v || g.has_edge(u, v))
            })
            .count();
        prop_assert!(3 * covered >= seagulls.len());
    }

    // One halving step preserves the optimum: the instance value equals the
    // best child value plus the committed credit, and children shrink.
    #[test]
    fn halving_preserves_the_optimum(
        seed in any::<u64>(), n in 2usize..=11, p in 0.1f64..0.9, k in 1usize..=2,
    ) {
        let (g, w) = instance(seed, n, p, "aakbb", k);
        let inst = StructuredInstance::root(n);
        let whole = alpha_brute(&g, &w).unwrap().weight;
        let best = halve_workspace(&g, &w, &inst, k)
            .into_iter()
            .map(|oc| {
                prop_assert!(oc.item.measure() <= n.div_ceil(2));
                Ok(w.to_rational(oc.credit) + brute_on(&g, &w, &oc.item.vertices()))
            })
            .collect::<Result<Vec<_>, TestCaseError>>()?
            .into_iter()
            .max()
            .unwrap();
        prop_assert_eq!(whole, best);
    }

    // One refinement step preserves the optimum of the chain, whichever
    // link it works on.
    #[test]
    fn refinement_preserves_the_optimum(
        seed in any::<u64>(), n in 3usize..=11, p in 0.1f64..0.9, k in 0usize..=1,
    ) {
        let (g, w) = instance(seed, n, p, "ababk", k);
        let a_end = n.div_ceil(3);
        let b_end = (2 * n).div_ceil(3);
        let chain = Chain {
            links: vec![
                Link { verts: (1..=a_end).collect(), tag: Tag::A },
                Link { verts: (a_end + 1..=b_end).collect(), tag: Tag::B },
                Link { verts: (b_end + 1..=n).collect(), tag: Tag::C },
            ],
        };
        let whole = alpha_brute(&g, &w).unwrap().weight;
        for j in 0..3 {
            let best = refine_chain(&g, &w, &chain, j, k)
                .into_iter()
                .map(|oc| w.to_rational(oc.credit) + brute_on(&g, &w, &oc.item.vertices()))
                .max()
                .unwrap();
            prop_assert_eq!(whole.clone(), best);
        }
    }
}

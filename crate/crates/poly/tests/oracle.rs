use omwis_classify::family_pattern;
use omwis_core::gen::{random_graph, random_weights, repair_to_free};
use omwis_core::{alpha_brute, OrderedGraph, WeightMap};
use omwis_poly::{solve_chordfree, solve_oneedgek, solve_p3free, Direction};
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn p3free_matches_brute(seed in any::<u64>(), n in 1usize..=14, p in 0.1f64..0.9) {
        let (g, w) = instance(seed, n, p, "p3", 0);
        let got = solve_p3free(&g, &w, true).unwrap();
        let want = alpha_brute(&g, &w).unwrap();
        prop_assert_eq!(got.weight, want.weight);
        prop_assert!(g.is_independent(&got.witness));
    }

    #[test]
    fn chordfree_matches_brute(seed in any::<u64>(), n in 1usize..=14, p in 0.1f64..0.9) {
        let (g, w) = instance(seed, n, p, "chord", 0);
        let got = solve_chordfree(&g, &w, Direction::Forward, true).unwrap();
        let want = alpha_brute(&g, &w).unwrap();
        prop_assert_eq!(got.weight, want.weight);
        prop_assert!(g.is_independent(&got.witness));
    }

    #[test]
    fn chordfree_mirrored_matches_brute(seed in any::<u64>(), n in 1usize..=14, p in 0.1f64..0.9) {
        let (g, w) = instance(seed, n, p, "chordrev", 0);
        let got = solve_chordfree(&g, &w, Direction::Mirrored, true).unwrap();
        let want = alpha_brute(&g, &w).unwrap();
        prop_assert_eq!(got.weight, want.weight);
        prop_assert!(g.is_independent(&got.witness));
    }

    #[test]
    fn oneedgek_matches_brute(seed in any::<u64>(), n in 1usize..=12, p in 0.1f64..0.9, k in 1usize..=2) {
        let (g, w) = instance(seed, n, p, "oneedge", k);
        let got = solve_oneedgek(&g, &w, k, true).unwrap();
        let want = alpha_brute(&g, &w).unwrap();
        prop_assert_eq!(got.weight, want.weight);
        prop_assert!(g.is_independent(&got.witness));
    }

    // Being a right neighbor really is a partial order once p3 is excluded.
    #[test]
    fn p3free_right_neighbor_relation_is_transitive(seed in any::<u64>(), n in 1usize..=12, p in 0.1f64..0.9) {
        let (g, _) = instance(seed, n, p, "p3", 0);
        for u in 1..=n {
            for v in (u + 1)..=n {
                for x in (v + 1)..=n {
                    if g.has_edge(u, v) && g.has_edge(v, x) {
                        prop_assert!(g.has_edge(u, x), "transitivity fails at {u},{v},{x}");
                    }
                }
            }
        }
    }

    // The mirrored entry point is literally the forward solve of the mirror.
    #[test]
    fn mirrored_equals_forward_on_mirror(seed in any::<u64>(), n in 1usize..=12, p in 0.1f64..0.9) {
        let (g, w) = instance(seed, n, p, "chordrev", 0);
        let map: Vec<usize> = std::iter::once(0).chain((1..=n).map(|v| n + 1 - v)).collect();
        let mirrored_w = w.restrict(&map);
        let a = solve_chordfree(&g, &w, Direction::Mirrored, true).unwrap();
        let b = solve_chordfree(&g.mirror(), &mirrored_w, Direction::Forward, true).unwrap();
        prop_assert_eq!(a.weight, b.weight);
    }
}

use num::BigRational;
use omwis_classify::parse_pattern_spec;
use omwis_core::gen::{random_graph, random_weights, repair_to_free};
use omwis_core::{alpha_brute, OrderedGraph, Pattern, WeightMap};
use omwis_dispatch::{pacman_reduce, solve_auto, solve_generic};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One pattern per routing destination, plus padded and hard specimens.
const MENAGERIE: &[&str] = &[
    "p3",
    "chord",
    "chordrev",
    "3:1-3",
    "2:1-2",
    "aabb",
    "5:1-2,4-5",
    "abab",
    "abba",
    "6:1-6,3-4",
    "ext p3(1)",
    "ext abba(1)",
    "5:2-4",
    "6:1-2,3-4,5-6",
];

fn instance(seed: u64, n: usize, p: f64, h: &Pattern) -> (OrderedGraph, WeightMap) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_graph(&mut rng, n, p);
    let free = repair_to_free(&mut rng, &g, h);
    let w = random_weights(&mut rng, n, 20, 4);
    (free, w)
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
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn auto_matches_brute_across_the_menagerie(
        seed in any::<u64>(),
        n in 1usize..=12,
        p in 0.1f64..0.9,
        which in 0usize..MENAGERIE.len(),
    ) {
        let h = parse_pattern_spec(MENAGERIE[which]).unwrap();
        let (g, w) = instance(seed, n, p, &h);
        let got = solve_auto(&g, &w, &h, true, None).unwrap();
        let want = alpha_brute(&g, &w).unwrap();
        prop_assert_eq!(&got.weight, &want.weight, "pattern {}", MENAGERIE[which]);
        prop_assert!(g.is_independent(&got.witness));
        prop_assert_eq!(w.sum(got.witness.iter().copied()), got.weight);
    }

    // The end-guessing layer is exact on every graph, free or not: the best
    // branch recovers the optimum.
    #[test]
    fn pacman_branches_cover_the_optimum(
        seed in any::<u64>(), n in 0usize..=10, p in 0.05f64..0.95,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        let w = random_weights(&mut rng, n, 20, 4);
        let h = parse_pattern_spec("ext p3(1)").unwrap();
        let (_, branches) = pacman_reduce(&g, &w, &h).unwrap();
        prop_assert!(branches.len() <= n * n + 1);
        let best = branches
            .iter()
            .map(|b| w.to_rational(b.credit) + brute_on(&g, &w, &b.item))
            .max()
            .unwrap();
        prop_assert_eq!(best, alpha_brute(&g, &w).unwrap().weight);
    }

    #[test]
    fn generic_matches_brute(
        seed in any::<u64>(), n in 1usize..=18, p in 0.05f64..0.95,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        let w = random_weights(&mut rng, n, 20, 4);
        let got = solve_generic(&g, &w, None);
        let want = alpha_brute(&g, &w).unwrap();
        prop_assert_eq!(&got.weight, &want.weight);
        prop_assert!(g.is_independent(&got.witness));
        prop_assert_eq!(w.sum(got.witness.iter().copied()), got.weight);
    }
}

use crate::{ensure_free, PolyError};
use omwis_classify::family_pattern;
use omwis_core::{OrderedGraph, Solution, WeightMap};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Debug)]
struct Entry {
    value: i64,
    /// Predecessor key in the previous layer and whether v_i was taken.
    from: Option<(Vec<usize>, bool)>,
}

/// MWIS on a graph avoiding oneedge(k), the single edge spanning k isolated
/// positions.
///
/// Prefix DP: Tab[i, I] is the best weight of an independent S ⊆ {1..i}
/// whose last min(|S|, k) elements are exactly I. Freeness makes the key a
/// sufficient interface: if v_i were adjacent to some forgotten s ∈ S ≺ I,
/// then s, the k tracked vertices, and v_i would induce the forbidden
/// pattern, so compatibility with the key alone is exact.
pub fn solve_oneedgek(
    g: &OrderedGraph,
    w: &WeightMap,
    k: usize,
    validate: bool,
) -> Result<Solution, PolyError> {
    let start = Instant::now();
    if validate {
        ensure_free(
            g,
            &family_pattern("oneedge", k).expect("catalog"),
            &format!("oneedge({k})"),
        )?;
    }
    let n = g.n();

    // k = 0 forbids every edge, so the instance is edgeless and the whole
    // vertex set is the optimum.
    if k == 0 {
        assert_eq!(g.num_edges(), 0, "oneedge(0)-free graphs have no edges");
        return Ok(Solution {
            weight: w.to_rational(w.total_scaled()),
            witness: (1..=n).collect(),
            nodes: n as u64,
            millis: start.elapsed().as_millis(),
        });
    }

    let mut layers: Vec<BTreeMap<Vec<usize>, Entry>> = Vec::with_capacity(n + 1);
    let mut first = BTreeMap::new();
    first.insert(Vec::new(), Entry { value: 0, from: None });
    layers.push(first);
    let mut work = 0u64;

    for i in 1..=n {
        let prev = &layers[i - 1];
        let mut cur: BTreeMap<Vec<usize>, Entry> = BTreeMap::new();
        // v_i not taken: every key carries over unchanged.
        for (key, e) in prev {
            cur.insert(
                key.clone(),
                Entry { value: e.value, from: Some((key.clone(), false)) },
            );
            work += 1;
        }
        // v_i taken: it becomes the largest tracked vertex. Keys shorter
        // than k grow; full keys shift their oldest vertex u out. The edge
        // u–v_i must be vetoed explicitly: only the k-1 vertices between
        // them are tracked, one short of the spread that freeness rules
        // out. Anything older than u is separated from v_i by all k tracked
        // vertices, so those edges cannot exist.
        for (key, e) in prev {
            let (new_key, ok) = if key.len() < k {
                let ok = key.iter().all(|&u| !g.has_edge(u, i));
                let mut nk = key.clone();
                nk.push(i);
                (nk, ok)
            } else {
                let u = key[0];
                let rest = &key[1..];
                let ok = !g.has_edge(u, i) && rest.iter().all(|&x| !g.has_edge(x, i));
                let mut nk = rest.to_vec();
                nk.push(i);
                (nk, ok)
            };
            work += 1;
            if !ok {
                continue;
            }
            let value = e.value + w.scaled(i);
            match cur.get(&new_key) {
                Some(existing) if existing.value >= value => {}
                _ => {
                    cur.insert(new_key, Entry { value, from: Some((key.clone(), true)) });
                }
            }
        }
        layers.push(cur);
    }

    let (mut best_key, mut best) = (Vec::new(), i64::MIN);
    for (key, e) in &layers[n] {
        if e.value > best {
            best = e.value;
            best_key = key.clone();
        }
    }
    let mut witness = Vec::new();
    let mut key = best_key;
    for i in (1..=n).rev() {
        let entry = &layers[i][&key];
        let (prev_key, taken) = entry.from.clone().expect("non-root entry has a parent");
        if taken {
            witness.push(i);
        }
        key = prev_key;
    }
    witness.reverse();
    debug_assert!(g.is_independent(&witness));
    debug_assert_eq!(w.sum_scaled(witness.iter().copied()), best);

    Ok(Solution {
        weight: w.to_rational(best),
        witness,
        nodes: work,
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
    fn k0_takes_everything() {
        let g = OrderedGraph::new(4, &[]).unwrap();
        let s = solve_oneedgek(&g, &WeightMap::unit(4), 0, true).unwrap();
        assert_eq!(s.weight, q(4));
        assert_eq!(s.witness, vec![1, 2, 3, 4]);
    }

    #[test]
    fn k0_rejects_edges() {
        let g = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        assert!(matches!(
            solve_oneedgek(&g, &WeightMap::unit(2), 0, true),
            Err(PolyError::NotFree { .. })
        ));
    }

    #[test]
    fn adjacent_edges_k1() {
        // 1-2,3-4 has no edge spanning an isolated vertex.
        let g = OrderedGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let s = solve_oneedgek(&g, &WeightMap::unit(4), 1, true).unwrap();
        assert_eq!(s.weight, q(2));
        assert_eq!(s.witness, vec![1, 3]);
    }

    #[test]
    fn validation_catches_spanning_edge() {
        let g = OrderedGraph::new(3, &[(1, 3)]).unwrap();
        assert!(matches!(
            solve_oneedgek(&g, &WeightMap::unit(3), 1, true),
            Err(PolyError::NotFree { .. })
        ));
        // The same instance is fine for k = 2.
        let s = solve_oneedgek(&g, &WeightMap::unit(3), 2, true).unwrap();
        assert_eq!(s.weight, q(2));
    }

    #[test]
    fn weighted_k1() {
        // Clique on {1,2,3} plus 3-4: heavy 2 beats {1 or 2} + 4 pairs.
        let g = OrderedGraph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let w = WeightMap::from_rationals(vec![q(1), q(7), q(1), q(2)]).unwrap();
        let s = solve_oneedgek(&g, &w, 1, true).unwrap();
        assert_eq!(s.weight, q(9));
        assert_eq!(s.witness, vec![2, 4]);
    }
}

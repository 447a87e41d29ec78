use crate::{ensure_free, partition_segments, Segment, SegmentDecomposition, SubexpError};
use omwis_classify::family_pattern;
use omwis_core::sets::{independent_subsets, minus, minus_closed_nbhd};
use omwis_core::{mwis_bipartite, OrderedGraph, Solution, Trace, WeightMap};
use std::time::Instant;

/// Smallest `t` with `t^3 >= n`.
fn cube_root_ceil(n: usize) -> usize {
    (1..).find(|t| t * t * t >= n).expect("cubes are unbounded")
}

struct Ctx<'a> {
    k: usize,
    tau: usize,
    nodes: u64,
    trace: Option<&'a mut Trace>,
}

impl Ctx<'_> {
    fn log(&mut self, w: &WeightMap, parent: Option<u64>, action: &str, credit: i64) -> Option<u64> {
        let scale = w.scale_f64();
        self.trace
            .as_deref_mut()
            .map(|t| t.node(parent, action, credit as f64 / scale))
    }

    /// Degree reduction plus component splitting; hands each connected
    /// low-degree piece to the segment analysis.
    fn solve_graph(&mut self, g: &OrderedGraph, w: &WeightMap, parent: Option<u64>) -> (i64, Vec<usize>) {
        self.nodes += 1;
        let n = g.n();
        if n == 0 {
            return (0, Vec::new());
        }
        // Branch on a vertex of maximum degree while one reaches tau; the
        // threshold stays frozen at the original input size, so recursive
        // calls never reintroduce branching on their shrunken inputs.
        let mut pick: Option<(usize, usize)> = None;
        for v in 1..=n {
            let d = g.degree(v);
            if d >= self.tau && pick.map_or(true, |(pd, _)| d > pd) {
                pick = Some((d, v));
            }
        }
        if let Some((_, v)) = pick {
            let id = self.log(w, parent, &format!("high degree {v}"), 0);
            let all: Vec<usize> = (1..=n).collect();
            self.log(w, id, "exclude", 0);
            let (sub, map) = g.induce(&minus(&all, &[v]));
            let (out_val, out_wit) = self.solve_graph(&sub, &w.restrict(&map), id);
            let out_wit: Vec<usize> = out_wit.into_iter().map(|p| map[p]).collect();
            self.log(w, id, "include", w.scaled(v));
            let (sub, map) = g.induce(&minus_closed_nbhd(&all, g, &[v]));
            let (in_val, in_wit) = self.solve_graph(&sub, &w.restrict(&map), id);
            let in_val = in_val + w.scaled(v);
            if in_val > out_val {
                let mut wit: Vec<usize> = in_wit.into_iter().map(|p| map[p]).collect();
                wit.push(v);
                wit.sort_unstable();
                return (in_val, wit);
            }
            return (out_val, out_wit);
        }
        let comps = g.components();
        if comps.len() > 1 {
            let id = self.log(w, parent, &format!("{} components", comps.len()), 0);
            let mut total = 0;
            let mut wit = Vec::new();
            for comp in comps {
                let (sub, map) = g.induce(&comp);
                let (val, cw) = self.solve_component(&sub, &w.restrict(&map), id);
                total += val;
                wit.extend(cw.into_iter().map(|p| map[p]));
            }
            wit.sort_unstable();
            return (total, wit);
        }
        self.solve_component(g, w, parent)
    }

    /// Segment analysis of one connected low-degree component.
    fn solve_component(&mut self, g: &OrderedGraph, w: &WeightMap, parent: Option<u64>) -> (i64, Vec<usize>) {
        let n = g.n();
        if n == 1 {
            return (w.scaled(1), vec![1]);
        }
        assert!(
            (1..=n).all(|v| g.degree(v) < self.tau),
            "degree reduction must finish before the segment analysis"
        );
        let mut dec = partition_segments(g).expect("components are connected and nontrivial");
        dec.fill_guards(g, self.k);
        #[cfg(debug_assertions)]
        for seg in &dec.segments {
            let mut hit = vec![seg.x, seg.y];
            hit.extend(&seg.first);
            hit.extend(&seg.last);
            let residue = minus_closed_nbhd(&seg.z, g, &hit);
            debug_assert!(
                g.is_independent(&residue),
                "spanning edge and guards must dominate their segment on free inputs"
            );
        }
        let third = n / 3;
        // A small segment meeting the middle third disconnects the component
        // once its interval is guessed and deleted.
        let small = |seg: &Segment| seg.z.len() * self.tau < n;
        let pivot = dec
            .segments
            .iter()
            .position(|s| small(s) && s.z.iter().any(|&v| v > third && v <= n - third));
        match pivot {
            Some(i) => self.split_on_segment(g, w, &dec.segments[i].z, parent),
            None => self.guard_window(g, w, &dec, parent),
        }
    }

    /// Enumerate the optimum's trace on a small interval `z`; each guess
    /// leaves two mutually non-adjacent flanks to recurse on.
    fn split_on_segment(&mut self, g: &OrderedGraph, w: &WeightMap, z: &[usize], parent: Option<u64>) -> (i64, Vec<usize>) {
        let n = g.n();
        let id = self.log(w, parent, &format!("interval window {:?}", z), 0);
        let all: Vec<usize> = (1..=n).collect();
        let lo = z[0];
        let hi = *z.last().unwrap();
        let mut best = i64::MIN;
        let mut best_wit = Vec::new();
        for guess in independent_subsets(z, g, z.len()) {
            let credit = w.sum_scaled(guess.iter().copied());
            let child = self.log(w, id, &format!("take {guess:?}"), credit);
            let alive = minus_closed_nbhd(&all, g, &guess);
            let left: Vec<usize> = alive.iter().copied().filter(|&v| v < lo).collect();
            let right: Vec<usize> = alive.iter().copied().filter(|&v| v > hi).collect();
            debug_assert!(left.len().max(right.len()) < n - n / 3);
            debug_assert!(left
                .iter()
                .all(|&u| right.iter().all(|&v| !g.has_edge(u, v))));
            let (lv, lw) = self.recurse(g, w, &left, child);
            let (rv, rw) = self.recurse(g, w, &right, child);
            let total = credit + lv + rv;
            if total > best {
                best = total;
                best_wit = guess.clone();
                best_wit.extend(lw);
                best_wit.extend(rw);
                best_wit.sort_unstable();
            }
        }
        (best, best_wit)
    }

    /// No small segment meets the middle: every middle segment is large, so
    /// there are few of them and their spanning edges plus guards dominate
    /// everything between the outermost small segments. Guessing that window
    /// leaves independent rows inside each middle segment — rows joined only
    /// across consecutive segments, hence a bipartite residue.
    fn guard_window(&mut self, g: &OrderedGraph, w: &WeightMap, dec: &SegmentDecomposition, parent: Option<u64>) -> (i64, Vec<usize>) {
        let n = g.n();
        let third = n / 3;
        let t = dec.segments.len();
        let small = |seg: &Segment| seg.z.len() * self.tau < n;
        let ell = dec
            .segments
            .iter()
            .rposition(|s| small(s) && *s.z.last().unwrap() <= third);
        // The first segment starts at position 1, which never lies in the
        // right third, so a hit here has index at least 1.
        let r = dec
            .segments
            .iter()
            .position(|s| small(s) && s.z[0] > n - third);
        let lo = ell.map_or(0, |e| e + 1);
        let hi = r.map_or(t - 1, |i| i - 1);
        debug_assert!((lo..=hi).all(|i| !small(&dec.segments[i])));
        let index = dec.segment_index();
        let mut window: Vec<usize> = Vec::new();
        if let Some(e) = ell {
            window.extend(&dec.segments[e].z);
        }
        if let Some(i) = r {
            window.extend(&dec.segments[i].z);
        }
        let mut guards: Vec<usize> = Vec::new();
        for i in lo..=hi {
            let s = &dec.segments[i];
            guards.extend([s.x, s.y]);
            guards.extend(&s.first);
            guards.extend(&s.last);
        }
        guards.sort_unstable();
        guards.dedup();
        for &u in &guards {
            window.push(u);
            window.extend(g.adj(u).iter().copied());
        }
        window.sort_unstable();
        window.dedup();
        let id = self.log(w, parent, &format!("guard window {:?}", window), 0);
        let all: Vec<usize> = (1..=n).collect();
        let mut best = i64::MIN;
        let mut best_wit = Vec::new();
        for guess in independent_subsets(&window, g, window.len()) {
            let credit = w.sum_scaled(guess.iter().copied());
            let child = self.log(w, id, &format!("take {guess:?}"), credit);
            let alive = minus_closed_nbhd(&all, g, &guess);
            let mut left = Vec::new();
            let mut middle = Vec::new();
            let mut right = Vec::new();
            for &v in &alive {
                if window.binary_search(&v).is_ok() {
                    continue;
                }
                if ell.is_some_and(|e| index[v] < e) {
                    left.push(v);
                } else if r.is_some_and(|i| index[v] > i) {
                    right.push(v);
                } else {
                    middle.push(v);
                }
            }
            debug_assert!(left.len() <= third && right.len() <= third);
            debug_assert!(middle.iter().all(|&v| (lo..=hi).contains(&index[v])));
            debug_assert!(left
                .iter()
                .all(|&u| middle.iter().chain(&right).all(|&v| !g.has_edge(u, v))));
            debug_assert!(middle.iter().all(|&u| right.iter().all(|&v| !g.has_edge(u, v))));
            let (lv, lw) = self.recurse(g, w, &left, child);
            let (rv, rw) = self.recurse(g, w, &right, child);
            let (mv, mw) = self.middle_bipartite(g, w, &middle, &index);
            let total = credit + lv + rv + mv;
            if total > best {
                best = total;
                best_wit = guess.clone();
                best_wit.extend(lw);
                best_wit.extend(rw);
                best_wit.extend(mw);
                best_wit.sort_unstable();
            }
        }
        (best, best_wit)
    }

    /// Solve the subgraph induced by `verts`, mapping the witness back.
    fn recurse(&mut self, g: &OrderedGraph, w: &WeightMap, verts: &[usize], parent: Option<u64>) -> (i64, Vec<usize>) {
        if verts.is_empty() {
            return (0, Vec::new());
        }
        let (sub, map) = g.induce(verts);
        let (val, wit) = self.solve_graph(&sub, &w.restrict(&map), parent);
        (val, wit.into_iter().map(|p| map[p]).collect())
    }

    /// The residue of the middle segments after window deletion is
    /// independent inside every segment, so consecutive-segment edges are
    /// all that remain and segment parity is a proper 2-coloring.
    fn middle_bipartite(&mut self, g: &OrderedGraph, w: &WeightMap, verts: &[usize], index: &[usize]) -> (i64, Vec<usize>) {
        if verts.is_empty() {
            return (0, Vec::new());
        }
        self.nodes += 1;
        let (sub, map) = g.induce(verts);
        let sw = w.restrict(&map);
        let mut evens = Vec::new();
        let mut odds = Vec::new();
        for p in 1..=sub.n() {
            if index[map[p]] % 2 == 0 {
                evens.push(p);
            } else {
                odds.push(p);
            }
        }
        let sol = mwis_bipartite(&sub, &sw, Some((&evens, &odds)))
            .expect("segment parity 2-colors the window residue of a free instance");
        let val = sw.sum_scaled(sol.witness.iter().copied());
        (val, sol.witness.iter().map(|&p| map[p]).collect())
    }
}

/// MWIS on an abbak(k)-free ordered graph: branch away high-degree vertices,
/// decompose each low-degree component into segments, and guess windows that
/// split the component or flatten its middle into a bipartite residue.
pub fn solve_abbak(
    g: &OrderedGraph,
    w: &WeightMap,
    k: usize,
    validate: bool,
    tau_override: Option<usize>,
    trace: Option<&mut Trace>,
) -> Result<Solution, SubexpError> {
    let start = Instant::now();
    if validate {
        ensure_free(
            g,
            &family_pattern("abbak", k).expect("catalog"),
            &format!("abbak({k})"),
        )?;
    }
    let tau = tau_override.unwrap_or_else(|| cube_root_ceil(g.n()));
    let mut ctx = Ctx { k, tau, nodes: 0, trace };
    let (value, witness) = ctx.solve_graph(g, w, None);
    debug_assert!(g.is_independent(&witness));
    debug_assert_eq!(w.sum_scaled(witness.iter().copied()), value);
    Ok(Solution {
        weight: w.to_rational(value),
        witness,
        nodes: ctx.nodes,
        millis: start.elapsed().as_millis(),
    })
}

use crate::sets::{independent_subsets, minus, minus_closed_nbhd};
use crate::{ensure_free, Outcome, QpolyError, Trace};
use omwis_classify::family_pattern;
use omwis_core::{alpha_brute, OrderedGraph, Solution, WeightMap};
use std::time::Instant;

/// Which third of the original vertex range a link descends from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    A,
    B,
    C,
}

/// A block of ambient positions, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub verts: Vec<usize>,
    pub tag: Tag,
}

/// A position-ordered partition of the live vertices. Invariant maintained
/// by every refinement: edges occur only inside a link, between consecutive
/// links, or between the first and last link. Links never disappear; empty
/// links act as recorded cut points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub links: Vec<Link>,
}

impl Chain {
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> =
            self.links.iter().flat_map(|l| l.verts.iter().copied()).collect();
        all.sort_unstable();
        all
    }
}

fn assemble(links: &[Vec<usize>], tags: &[Tag]) -> Chain {
    Chain {
        links: links
            .iter()
            .zip(tags)
            .map(|(v, &tag)| Link { verts: v.clone(), tag })
            .collect(),
    }
}

#[cfg(debug_assertions)]
fn check_chain_invariant(g: &OrderedGraph, chain: &Chain) {
    let r = chain.links.len();
    for (i, link) in chain.links.iter().enumerate() {
        debug_assert!(link.verts.windows(2).all(|w| w[0] < w[1]));
        if let (Some(&last), Some(next)) = (link.verts.last(), chain.links.get(i + 1)) {
            if let Some(&first) = next.verts.first() {
                debug_assert!(last < first, "links must stay position-ordered");
            }
        }
        for (l, other) in chain.links.iter().enumerate().skip(i + 2) {
            if i == 0 && l == r - 1 {
                continue;
            }
            debug_assert!(
                edges_between(g, &link.verts, &other.verts).is_empty(),
                "edges must stay local to consecutive links or the wrap pair"
            );
        }
    }
}

fn edges_between(g: &OrderedGraph, a: &[usize], b: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &x in a {
        for &y in b {
            if g.has_edge(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

fn first_adjacent(g: &OrderedGraph, a: &[usize], b: &[usize]) -> Option<usize> {
    a.iter().copied().find(|&x| b.iter().any(|&y| g.has_edge(x, y)))
}

fn last_adjacent(g: &OrderedGraph, a: &[usize], b: &[usize]) -> Option<usize> {
    a.iter().rev().copied().find(|&x| b.iter().any(|&y| g.has_edge(x, y)))
}

fn least_neighbor_in(g: &OrderedGraph, v: usize, list: &[usize]) -> usize {
    list.iter()
        .copied()
        .find(|&y| g.has_edge(v, y))
        .expect("anchor is adjacent to this link by definition")
}

/// Grow the auxiliary candidate set: up to `k` vertices of `pool`, each
/// outside the closed neighborhood of the anchor and of everything grown so
/// far, scanned from the front (`take_first`) or from the back.
fn grow_candidates(
    g: &OrderedGraph,
    pool: &[usize],
    anchor: usize,
    k: usize,
    take_first: bool,
) -> Vec<usize> {
    let mut grown: Vec<usize> = Vec::new();
    for _ in 0..k {
        let free = |x: &usize| {
            let x = *x;
            x != anchor
                && !g.has_edge(x, anchor)
                && !grown.iter().any(|&q| q == x || g.has_edge(q, x))
        };
        let next = if take_first {
            pool.iter().copied().find(free)
        } else {
            pool.iter().rev().copied().find(free)
        };
        match next {
            Some(x) => grown.push(x),
            None => break,
        }
    }
    grown
}

/// Argmax-coverage candidate, ties to the smaller position. Coverage of `x`
/// counts the edges with an endpoint in N[x].
fn pick_branch_vertex(
    g: &OrderedGraph,
    mut candidates: Vec<usize>,
    edges: &[(usize, usize)],
    k: usize,
) -> usize {
    candidates.sort_unstable();
    candidates.dedup();
    let cover = |x: usize| {
        edges
            .iter()
            .filter(|&&(a, b)| a == x || b == x || g.has_edge(x, a) || g.has_edge(x, b))
            .count()
    };
    let mut best = candidates[0];
    let mut best_cover = cover(best);
    for &c in &candidates[1..] {
        let cc = cover(c);
        if cc > best_cover {
            best = c;
            best_cover = cc;
        }
    }
    debug_assert!(
        best_cover * (2 * k + 4) >= edges.len(),
        "branch vertex covers less than a 1/(2k+4) fraction"
    );
    best
}

struct Stage2<'a> {
    g: &'a OrderedGraph,
    w: &'a WeightMap,
    tags: &'a [Tag],
    j: usize,
    k: usize,
}

impl<'a> Stage2<'a> {
    fn emit(
        &self,
        chain: Chain,
        credit: i64,
        mut chosen: Vec<usize>,
        out: &mut Vec<Outcome<Chain>>,
    ) {
        #[cfg(debug_assertions)]
        check_chain_invariant(self.g, &chain);
        chosen.sort_unstable();
        out.push(Outcome { item: chain, credit, chosen });
    }

    fn insert_empty(&self, links: &[Vec<usize>], at: usize) -> Chain {
        let mut chain = assemble(links, self.tags);
        chain.links.insert(at, Link { verts: Vec::new(), tag: self.tags[self.j] });
        chain
    }

    /// Split link `j` around `pivot`; the pivot joins the left half when
    /// `pivot_left` is set.
    fn split(&self, links: &[Vec<usize>], pivot: usize, pivot_left: bool) -> Chain {
        let mut chain = assemble(links, self.tags);
        let verts = std::mem::take(&mut chain.links[self.j].verts);
        let cut = |v: usize| if pivot_left { v <= pivot } else { v < pivot };
        let (left, right): (Vec<usize>, Vec<usize>) = verts.into_iter().partition(|&v| cut(v));
        let tag = self.tags[self.j];
        chain.links[self.j] = Link { verts: left, tag };
        chain.links.insert(self.j + 1, Link { verts: right, tag });
        chain
    }

    fn branch(
        &self,
        links: &[Vec<usize>],
        star: usize,
        credit: i64,
        chosen: Vec<usize>,
        out: &mut Vec<Outcome<Chain>>,
    ) {
        let excluded: Vec<Vec<usize>> =
            links.iter().map(|l| minus(l, &[star])).collect();
        self.run(&excluded, credit, chosen.clone(), out);
        let included: Vec<Vec<usize>> =
            links.iter().map(|l| minus_closed_nbhd(l, self.g, &[star])).collect();
        let mut chosen_in = chosen;
        chosen_in.push(star);
        self.run(&included, credit + self.w.scaled(star), chosen_in, out);
    }

    fn run(
        &self,
        links: &[Vec<usize>],
        credit: i64,
        chosen: Vec<usize>,
        out: &mut Vec<Outcome<Chain>>,
    ) {
        let r = links.len();
        let j = self.j;
        let yj = &links[j];
        if yj.is_empty() {
            self.emit(assemble(links, self.tags), credit, chosen, out);
            return;
        }
        let g = self.g;
        if j == 0 {
            let fwd = &links[1];
            let wrap = &links[r - 1];
            if edges_between(g, yj, wrap).is_empty() {
                self.emit(self.insert_empty(links, 0), credit, chosen, out);
                return;
            }
            if edges_between(g, yj, fwd).is_empty() {
                self.emit(self.insert_empty(links, 1), credit, chosen, out);
                return;
            }
            let u_star = first_adjacent(g, yj, fwd).expect("fwd edges exist");
            let v_star = last_adjacent(g, yj, wrap).expect("wrap edges exist");
            if v_star < u_star {
                // Everything left of u* keeps the wrap edges, everything
                // right of v* keeps the forward edges.
                self.emit(self.split(links, v_star, true), credit, chosen, out);
                return;
            }
            let s: Vec<usize> =
                yj.iter().copied().filter(|&y| u_star <= y && y <= v_star).collect();
            let e1 = edges_between(g, &s, fwd);
            let e2 = edges_between(g, &s, wrap);
            let mut all = e1.clone();
            all.extend(&e2);
            let touched: Vec<usize> = s
                .iter()
                .copied()
                .filter(|&y| all.iter().any(|&(a, _)| a == y))
                .collect();
            let candidates = if e1.len() >= e2.len() {
                let mut c = grow_candidates(g, &touched, v_star, self.k, false);
                c.push(v_star);
                c.push(least_neighbor_in(g, v_star, wrap));
                c
            } else {
                let mut c = grow_candidates(g, &touched, u_star, self.k, true);
                c.push(u_star);
                c.push(least_neighbor_in(g, u_star, fwd));
                c
            };
            let star = pick_branch_vertex(g, candidates, &all, self.k);
            self.branch(links, star, credit, chosen, out);
        } else if j == r - 1 {
            let back = &links[r - 2];
            let wrap = &links[0];
            if edges_between(g, yj, wrap).is_empty() {
                self.emit(self.insert_empty(links, r), credit, chosen, out);
                return;
            }
            if edges_between(g, yj, back).is_empty() {
                self.emit(self.insert_empty(links, r - 1), credit, chosen, out);
                return;
            }
            let u_star = last_adjacent(g, yj, back).expect("back edges exist");
            let v_star = first_adjacent(g, yj, wrap).expect("wrap edges exist");
            if u_star < v_star {
                self.emit(self.split(links, v_star, false), credit, chosen, out);
                return;
            }
            let s: Vec<usize> =
                yj.iter().copied().filter(|&y| v_star <= y && y <= u_star).collect();
            let e1 = edges_between(g, &s, back);
            let e2 = edges_between(g, &s, wrap);
            let mut all = e1.clone();
            all.extend(&e2);
            let touched: Vec<usize> = s
                .iter()
                .copied()
                .filter(|&y| all.iter().any(|&(a, _)| a == y))
                .collect();
            let candidates = if e1.len() >= e2.len() {
                let mut c = grow_candidates(g, &touched, v_star, self.k, true);
                c.push(v_star);
                c.push(least_neighbor_in(g, v_star, wrap));
                c
            } else {
                let mut c = grow_candidates(g, &touched, u_star, self.k, false);
                c.push(u_star);
                c.push(least_neighbor_in(g, u_star, back));
                c
            };
            let star = pick_branch_vertex(g, candidates, &all, self.k);
            self.branch(links, star, credit, chosen, out);
        } else {
            let back = &links[j - 1];
            let fwd = &links[j + 1];
            if edges_between(g, yj, back).is_empty() {
                self.emit(self.insert_empty(links, j), credit, chosen, out);
                return;
            }
            if edges_between(g, yj, fwd).is_empty() {
                self.emit(self.insert_empty(links, j + 1), credit, chosen, out);
                return;
            }
            let u_star = first_adjacent(g, yj, fwd).expect("fwd edges exist");
            let v_star = last_adjacent(g, yj, back).expect("back edges exist");
            if v_star < u_star {
                self.emit(self.split(links, v_star, true), credit, chosen, out);
                return;
            }
            let s: Vec<usize> =
                yj.iter().copied().filter(|&y| u_star <= y && y <= v_star).collect();
            let e1 = edges_between(g, &s, back);
            let e2 = edges_between(g, &s, fwd);
            let mut all = e1.clone();
            all.extend(&e2);
            let touched: Vec<usize> = s
                .iter()
                .copied()
                .filter(|&y| all.iter().any(|&(a, _)| a == y))
                .collect();
            let candidates = if e1.len() >= e2.len() {
                let mut c = grow_candidates(g, &touched, u_star, self.k, true);
                c.push(u_star);
                c.push(least_neighbor_in(g, u_star, fwd));
                c
            } else {
                let mut c = grow_candidates(g, &touched, v_star, self.k, false);
                c.push(v_star);
                c.push(least_neighbor_in(g, v_star, back));
                c
            };
            let star = pick_branch_vertex(g, candidates, &all, self.k);
            self.branch(links, star, credit, chosen, out);
        }
    }
}

/// Refine link `j`: guess how the optimum meets it (boundary links are
/// guessed jointly with their wrap partner), commit the guess, then branch
/// until the link can be split or an empty cut link can be recorded. The
/// optimum of the chain equals max over outcomes of child optimum + credit.
pub fn refine_chain(
    g: &OrderedGraph,
    w: &WeightMap,
    chain: &Chain,
    j: usize,
    k: usize,
) -> Vec<Outcome<Chain>> {
    let r = chain.links.len();
    assert!(r >= 3, "chains keep at least one link per tag");
    assert!(j < r);
    assert!(!chain.links[j].verts.is_empty(), "refining an empty link");

    let tags: Vec<Tag> = chain.links.iter().map(|l| l.tag).collect();
    let base: Vec<Vec<usize>> = chain.links.iter().map(|l| l.verts.clone()).collect();
    let stage2 = Stage2 { g, w, tags: &tags, j, k };
    let mut out = Vec::new();

    if j == 0 || j == r - 1 {
        // The first and last links see each other, so the guess fixes the
        // optimum's tail in the first link and head in the last link.
        for head in independent_subsets(&base[0], g, k) {
            for tail in independent_subsets(&base[r - 1], g, k) {
                let crossing = head
                    .iter()
                    .any(|&x| tail.iter().any(|&y| g.has_edge(x, y)));
                if crossing {
                    continue;
                }
                let mut guess = head.clone();
                guess.extend(&tail);
                let mut links: Vec<Vec<usize>> =
                    base.iter().map(|l| minus_closed_nbhd(l, g, &guess)).collect();
                // `head` stands for the last optimum vertices of the first
                // link: survivors live before it. Symmetrically for `tail`.
                if head.len() == k {
                    if let Some(&v1) = head.first() {
                        links[0].retain(|&x| x < v1);
                    }
                } else {
                    links[0].clear();
                }
                if tail.len() == k {
                    if let Some(&vr) = tail.last() {
                        links[r - 1].retain(|&x| x > vr);
                    }
                } else {
                    links[r - 1].clear();
                }
                let credit = w.sum_scaled(guess.iter().copied());
                stage2.run(&links, credit, guess, &mut out);
            }
        }
    } else {
        for guess in independent_subsets(&base[j], g, 2 * k) {
            let mut links: Vec<Vec<usize>> =
                base.iter().map(|l| minus_closed_nbhd(l, g, &guess)).collect();
            if guess.len() == 2 * k {
                // First k and last k optimum vertices of the link; the rest
                // of the optimum sits strictly between them.
                if k > 0 {
                    let v1 = guess[k - 1];
                    let v2 = guess[k];
                    links[j].retain(|&x| v1 < x && x < v2);
                }
            } else {
                links[j].clear();
            }
            let credit = w.sum_scaled(guess.iter().copied());
            stage2.run(&links, credit, guess, &mut out);
        }
    }
    out
}

fn log(
    trace: &mut Option<&mut Trace>,
    scale: f64,
    parent: Option<u64>,
    action: &str,
    credit: i64,
) -> Option<u64> {
    trace
        .as_deref_mut()
        .map(|t| t.node(parent, action, credit as f64 / scale))
}

fn graph_value(
    g: &OrderedGraph,
    w: &WeightMap,
    k: usize,
    nodes: &mut u64,
    mut trace: Option<&mut Trace>,
    parent: Option<u64>,
) -> (i64, Vec<usize>) {
    *nodes += 1;
    let n = g.n();
    if n <= 2 {
        let sol = alpha_brute(g, w).expect("tiny instance");
        return (w.sum_scaled(sol.witness.iter().copied()), sol.witness);
    }
    let a_end = n.div_ceil(3);
    let b_end = (2 * n).div_ceil(3);
    let chain = Chain {
        links: vec![
            Link { verts: (1..=a_end).collect(), tag: Tag::A },
            Link { verts: (a_end + 1..=b_end).collect(), tag: Tag::B },
            Link { verts: (b_end + 1..=n).collect(), tag: Tag::C },
        ],
    };
    chain_value(g, w, k, &chain, nodes, trace.as_deref_mut(), parent)
}

fn chain_value(
    g: &OrderedGraph,
    w: &WeightMap,
    k: usize,
    chain: &Chain,
    nodes: &mut u64,
    mut trace: Option<&mut Trace>,
    parent: Option<u64>,
) -> (i64, Vec<usize>) {
    *nodes += 1;
    let scale = crate::scale_f64(w);
    let mut cuts = Vec::new();
    for tag in [Tag::A, Tag::B, Tag::C] {
        let (idx, link) = chain
            .links
            .iter()
            .enumerate()
            .filter(|(_, l)| l.tag == tag)
            .min_by_key(|(i, l)| (l.verts.len(), *i))
            .expect("links are never deleted");
        if link.verts.is_empty() {
            cuts.push(idx);
            continue;
        }
        let id = log(&mut trace, scale, parent, &format!("refine link {idx}"), 0);
        let mut best = i64::MIN;
        let mut best_wit = Vec::new();
        for oc in refine_chain(g, w, chain, idx, k) {
            let cid = log(
                &mut trace,
                scale,
                id,
                &format!("commit {:?}", oc.chosen),
                oc.credit,
            );
            let (val, wit) = chain_value(g, w, k, &oc.item, nodes, trace.as_deref_mut(), cid);
            if val + oc.credit > best {
                best = val + oc.credit;
                best_wit = wit;
                best_wit.extend(&oc.chosen);
                best_wit.sort_unstable();
            }
        }
        return (best, best_wit);
    }

    // Every tag owns an empty link: cut the cycle there and solve the three
    // stretches independently, each strictly smaller than the whole.
    let (ia, ib, ic) = (cuts[0], cuts[1], cuts[2]);
    assert!(ia < ib && ib < ic, "tag blocks stay contiguous");
    let gather = |range: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut v: Vec<usize> =
            range.flat_map(|i| chain.links[i].verts.iter().copied()).collect();
        v.sort_unstable();
        v
    };
    let outer = gather(&mut (0..ia).chain(ic + 1..chain.links.len()));
    let mid_left = gather(&mut (ia + 1..ib));
    let mid_right = gather(&mut (ib + 1..ic));
    debug_assert!(edges_between(g, &outer, &mid_left).is_empty());
    debug_assert!(edges_between(g, &outer, &mid_right).is_empty());
    debug_assert!(edges_between(g, &mid_left, &mid_right).is_empty());
    let id = log(&mut trace, scale, parent, "cut", 0);
    let mut total = 0i64;
    let mut witness = Vec::new();
    for part in [outer, mid_left, mid_right] {
        if part.is_empty() {
            continue;
        }
        let (sub, map) = g.induce(&part);
        let sw = w.restrict(&map);
        let (val, wit) = graph_value(&sub, &sw, k, nodes, trace.as_deref_mut(), id);
        total += val;
        witness.extend(wit.into_iter().map(|v| map[v]));
    }
    witness.sort_unstable();
    (total, witness)
}

/// MWIS on an ababk(k)-free ordered graph via chain refinement.
pub fn solve_ababk(
    g: &OrderedGraph,
    w: &WeightMap,
    k: usize,
    validate: bool,
    mut trace: Option<&mut Trace>,
) -> Result<Solution, QpolyError> {
    let start = Instant::now();
    if validate {
        ensure_free(
            g,
            &family_pattern("ababk", k).expect("catalog"),
            &format!("ababk({k})"),
        )?;
    }
    let mut nodes = 0u64;
    let (value, witness) = graph_value(g, w, k, &mut nodes, trace.as_deref_mut(), None);
    debug_assert!(g.is_independent(&witness));
    debug_assert_eq!(w.sum_scaled(witness.iter().copied()), value);
    Ok(Solution {
        weight: w.to_rational(value),
        witness,
        nodes,
        millis: start.elapsed().as_millis(),
    })
}

use crate::DispatchError;
use omwis_core::{OrderedGraph, Pattern, WeightMap};
use omwis_qpoly::Outcome;

/// One peeling layer: drop the first position if it is isolated and the
/// last one likewise (both at once when both qualify). `None` when neither
/// end is isolated.
pub(crate) fn strip_layer(h: &Pattern) -> Option<Pattern> {
    let g = h.graph();
    let n = g.n();
    if n == 0 || !(h.first_isolated() || h.last_isolated()) {
        return None;
    }
    let lo = if h.first_isolated() { 2 } else { 1 };
    let hi = if h.last_isolated() { n - 1 } else { n };
    let keep: Vec<usize> = (lo..=hi).collect();
    Some(Pattern::from_graph(g.induce(&keep).0))
}

/// The guess-the-ends branches shared by every peeling layer. One branch per
/// non-adjacent pair x ⪯ y — the extreme vertices of a candidate optimum —
/// plus the empty-solution branch: delete everything before x, after y, and
/// adjacent to either, crediting their weight. Exact on any graph; at most
/// n² + 1 branches.
pub(crate) fn branches(g: &OrderedGraph, w: &WeightMap) -> Vec<Outcome<Vec<usize>>> {
    let n = g.n();
    let mut out = vec![Outcome { item: Vec::new(), credit: 0, chosen: Vec::new() }];
    for x in 1..=n {
        out.push(Outcome { item: Vec::new(), credit: w.scaled(x), chosen: vec![x] });
        for y in x + 1..=n {
            if g.has_edge(x, y) {
                continue;
            }
            let item: Vec<usize> =
                (x + 1..y).filter(|&p| !g.has_edge(p, x) && !g.has_edge(p, y)).collect();
            out.push(Outcome {
                item,
                credit: w.scaled(x) + w.scaled(y),
                chosen: vec![x, y],
            });
        }
    }
    out
}

/// Peel one isolated end (or both) off `h` and branch on the extreme
/// vertices of the solution. Any vertex x surviving a branch sits after x,
/// before y, and away from both, so an inner-pattern occurrence among the
/// survivors would extend by the guessed ends to an occurrence of `h`
/// itself: every branch of an `h`-free instance is inner-free.
pub fn pacman_reduce(
    g: &OrderedGraph,
    w: &WeightMap,
    h: &Pattern,
) -> Result<(Pattern, Vec<Outcome<Vec<usize>>>), DispatchError> {
    let inner = strip_layer(h).ok_or_else(|| DispatchError::NoIsolatedEnds(h.literal()))?;
    Ok((inner, branches(g, w)))
}

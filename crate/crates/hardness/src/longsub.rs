use crate::output::{LayerVariant, Provenance, ReductionOutput};
use omwis_core::graph::OrderedGraph;

/// Subdivide each edge of `g` an even, edge-dependent number of times and
/// order the new vertices in layers.
///
/// Step 1 doubly subdivides the t-th edge (lexicographic, 1-based) t times:
/// edge uv becomes the path u–u₁–…–u_t–v_t–…–v₁–v, with uᵢ, vᵢ placed in
/// layer i. Layers follow the core block in increasing order; inside a layer
/// the vertices sort by (endpoint, edge), reversed on odd layers for the
/// `Flip` variant. Step 2 then rebuilds each edge's innermost link u_t–v_t as
/// a path that threads fresh vertices through the positions separating the
/// two ends, one per gap plus a parity spare, so the total number of inserted
/// vertices on every rebuilt link is even. Each double subdivision raises α
/// by one; the threshold shifts by their exact count.
pub fn gen_long_subdivision(g: &OrderedGraph, k: usize, variant: LayerVariant) -> ReductionOutput {
    let n = g.n();
    let m = g.num_edges();

    // Vertex ids: 1..=n are core; the rest are allocated as needed and only
    // mapped to positions once the full order is assembled.
    let mut next_id = n + 1;
    let mut alloc = |count: usize| -> Vec<usize> {
        let ids: Vec<usize> = (next_id..next_id + count).collect();
        next_id += count;
        ids
    };

    // u_ids[t][i-1] / v_ids[t][i-1] is the layer-i vertex of edge t on the
    // side of its smaller / larger endpoint.
    let mut u_ids = Vec::with_capacity(m);
    let mut v_ids = Vec::with_capacity(m);
    for t in 0..m {
        let rank = t + 1;
        u_ids.push(alloc(rank));
        v_ids.push(alloc(rank));
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut doubles = 0usize;
    for (t, &(u, v)) in g.edges().iter().enumerate() {
        let rank = t + 1;
        doubles += rank;
        edges.push((u, u_ids[t][0]));
        edges.push((v, v_ids[t][0]));
        for i in 1..rank {
            edges.push((u_ids[t][i - 1], u_ids[t][i]));
            edges.push((v_ids[t][i - 1], v_ids[t][i]));
        }
        // The innermost link u_t–v_t is added by step 2 as a path.
    }

    // Layer i holds both side vertices of every edge with rank ≥ i, sorted by
    // (endpoint, rank) — descending on odd layers under Flip.
    let mut layers: Vec<Vec<usize>> = Vec::with_capacity(m);
    for i in 1..=m {
        let mut entries: Vec<(usize, usize, usize)> = Vec::new();
        for (t, &(u, v)) in g.edges().iter().enumerate() {
            let rank = t + 1;
            if rank >= i {
                entries.push((u, rank, u_ids[t][i - 1]));
                entries.push((v, rank, v_ids[t][i - 1]));
            }
        }
        entries.sort_unstable();
        if variant == LayerVariant::Flip && i % 2 == 1 {
            entries.reverse();
        }
        layers.push(entries.into_iter().map(|(_, _, id)| id).collect());
    }

    // Step 2: inside layer `rank`, rebuild the innermost link of edge t as a
    // path through fresh vertices, one inserted after each segment position
    // except the last, plus a spare to make the insertion count even.
    for (t, _) in g.edges().iter().enumerate() {
        let rank = t + 1;
        let layer = &mut layers[rank - 1];
        let a = layer.iter().position(|&id| id == u_ids[t][rank - 1]).unwrap();
        let b = layer.iter().position(|&id| id == v_ids[t][rank - 1]).unwrap();
        let (lo, hi) = (a.min(b), a.max(b));
        let (left_end, right_end) = (layer[lo], layer[hi]);
        let gaps = hi - lo;
        let count = if gaps % 2 == 0 { gaps } else { gaps + 1 };
        let omegas = alloc(count);
        doubles += count / 2;

        let mut rebuilt = Vec::with_capacity(layer.len() + count);
        for (idx, &id) in layer.iter().enumerate() {
            rebuilt.push(id);
            if idx >= lo && idx < hi {
                rebuilt.push(omegas[idx - lo]);
                if idx == hi - 1 && count > gaps {
                    rebuilt.push(omegas[gaps]);
                }
            }
        }
        *layer = rebuilt;

        edges.push((left_end, omegas[0]));
        for w in omegas.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((omegas[count - 1], right_end));
    }

    // Assemble the order and relabel ids to positions.
    let mut order: Vec<usize> = (1..=n).collect();
    for layer in layers {
        order.extend(layer);
    }
    let total = order.len();
    let mut pos = vec![0usize; next_id];
    for (idx, id) in order.into_iter().enumerate() {
        pos[id] = idx + 1;
    }
    let mapped: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (pos[a], pos[b])).collect();

    let graph = OrderedGraph::new(total, &mapped).expect("construction yields valid edges");
    ReductionOutput {
        graph,
        threshold: k + doubles,
        provenance: Provenance::LongSubdivision { variant, offset: doubles },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_is_a_long_path() {
        // K2: one double subdivision in step 1, one more from the two spare
        // vertices of step 2 — a six-vertex path with a shift of 2.
        let g = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        for variant in LayerVariant::ALL {
            let out = gen_long_subdivision(&g, 1, variant);
            assert_eq!(out.graph.n(), 6, "{variant}");
            assert_eq!(out.threshold, 3, "{variant}");
            assert_eq!(out.provenance.offset(), Some(2));
            let degrees: Vec<usize> = (1..=6).map(|v| out.graph.degree(v)).collect();
            assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2, "{variant}");
            assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 4, "{variant}");
            assert_eq!(out.graph.components().len(), 1, "{variant}");
        }
    }

    #[test]
    fn straight_single_edge_layout() {
        let g = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        let out = gen_long_subdivision(&g, 0, LayerVariant::Straight);
        // Order: cores 1,2; layer 1 = u₁, ω₀, ω₁, v₁.
        assert_eq!(out.graph.edges(), &[(1, 3), (2, 6), (3, 4), (4, 5), (5, 6)]);
    }

    #[test]
    fn flip_reverses_odd_layers() {
        let g = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        let out = gen_long_subdivision(&g, 0, LayerVariant::Flip);
        // Layer 1 is odd, so v₁ now precedes u₁: the path runs 1,6,5,4,3,2.
        assert_eq!(out.graph.edges(), &[(1, 6), (2, 3), (3, 4), (4, 5), (5, 6)]);
    }

    #[test]
    fn offsets_track_both_steps() {
        // P3: ranks 1 and 2 give 3 step-1 doubles; step-2 insertions depend
        // on the segment widths but are recorded exactly.
        let g = OrderedGraph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let out = gen_long_subdivision(&g, 2, LayerVariant::Straight);
        let offset = out.provenance.offset().unwrap();
        assert_eq!(out.threshold, 2 + offset);
        assert!(offset >= 3);
        // Every non-core vertex lies on a rebuilt edge path: degree ≤ 2.
        for v in g.n() + 1..=out.graph.n() {
            assert!(out.graph.degree(v) <= 2);
        }
    }
}

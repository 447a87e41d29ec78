use crate::SubexpError;
use omwis_core::sets::minus_closed_nbhd;
use omwis_core::OrderedGraph;

/// One segment of the decomposition: the spanning edge `x`-`y` and the
/// interval `z` of positions it closes, plus up to `k` guard vertices picked
/// near each end of the interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub x: usize,
    pub y: usize,
    pub z: Vec<usize>,
    pub first: Vec<usize>,
    pub last: Vec<usize>,
}

impl Segment {
    fn close(x: usize, y: usize, start: usize) -> Segment {
        Segment { x, y, z: (start..=y).collect(), first: Vec::new(), last: Vec::new() }
    }
}

/// Interval decomposition of a connected graph. Each segment is closed by a
/// cut edge `x`-`y` reaching furthest right out of the prefix covered so
/// far, which forces the two facts the solver leans on: the intervals tile
/// the positions in order, and edges never skip over a whole segment.
#[derive(Clone, Debug)]
pub struct SegmentDecomposition {
    pub segments: Vec<Segment>,
    /// All spanning-edge endpoints, sorted and deduplicated.
    pub roof: Vec<usize>,
}

/// Greedy segment decomposition: the first segment is spanned by vertex 1
/// and its last neighbor, and each following one by the cut edge whose right
/// endpoint reaches furthest (ties to the least left endpoint).
pub fn partition_segments(g: &OrderedGraph) -> Result<SegmentDecomposition, SubexpError> {
    let n = g.n();
    if n < 2 {
        return Err(SubexpError::Trivial { n });
    }
    if g.components().len() > 1 {
        return Err(SubexpError::Disconnected);
    }
    let y1 = *g.adj(1).last().expect("vertex 1 has a neighbor in a connected graph");
    let mut segments = vec![Segment::close(1, y1, 1)];
    let mut end = y1;
    while end < n {
        let mut pick: Option<(usize, usize)> = None;
        for &(u, v) in g.edges() {
            if u <= end && v > end {
                let better = pick.map_or(true, |(pu, pv)| v > pv || (v == pv && u < pu));
                if better {
                    pick = Some((u, v));
                }
            }
        }
        let (x, y) = pick.expect("a connected graph has an edge across every prefix cut");
        segments.push(Segment::close(x, y, end + 1));
        end = y;
    }
    let mut roof: Vec<usize> = segments.iter().flat_map(|s| [s.x, s.y]).collect();
    roof.sort_unstable();
    roof.dedup();
    let dec = SegmentDecomposition { segments, roof };
    #[cfg(debug_assertions)]
    dec.check(g);
    Ok(dec)
}

impl SegmentDecomposition {
    /// Segment index of every position (index 0 unused).
    pub fn segment_index(&self) -> Vec<usize> {
        let n = self.segments.last().map_or(0, |s| s.y);
        let mut idx = vec![0usize; n + 1];
        for (i, seg) in self.segments.iter().enumerate() {
            for &v in &seg.z {
                idx[v] = i;
            }
        }
        idx
    }

    /// Pick up to `k` guard vertices from each end of every segment: a
    /// left-to-right greedy sweep for `first`, then a right-to-left sweep
    /// for `last`, both avoiding the closed neighborhood of the segment's
    /// spanning pair and of each other. Eligibility is deliberately measured
    /// against the segment's own pair rather than the whole roof: any vertex
    /// that survives removal of the pair's and the guards' neighborhoods was
    /// then itself a candidate for the sweeps, which is exactly what makes
    /// leftover edges inside a segment force a forbidden pattern.
    pub fn fill_guards(&mut self, g: &OrderedGraph, k: usize) {
        for seg in &mut self.segments {
            let open = minus_closed_nbhd(&seg.z, g, &[seg.x, seg.y]);
            let mut first: Vec<usize> = Vec::new();
            for &v in &open {
                if first.len() == k {
                    break;
                }
                if first.iter().all(|&u| !g.has_edge(u, v)) {
                    first.push(v);
                }
            }
            let mut last: Vec<usize> = Vec::new();
            for &v in open.iter().rev() {
                if last.len() == k {
                    break;
                }
                if first.contains(&v) || first.iter().any(|&u| g.has_edge(u, v)) {
                    continue;
                }
                if last.iter().all(|&u| !g.has_edge(u, v)) {
                    last.push(v);
                }
            }
            last.reverse();
            debug_assert!({
                let both: Vec<usize> = first.iter().chain(&last).copied().collect();
                g.is_independent(&both)
            });
            seg.first = first;
            seg.last = last;
        }
    }

    #[cfg(debug_assertions)]
    fn check(&self, g: &OrderedGraph) {
        let mut next = 1;
        for (i, seg) in self.segments.iter().enumerate() {
            assert!(!seg.z.is_empty());
            assert_eq!(seg.z[0], next, "intervals tile the positions in order");
            assert!(seg.z.windows(2).all(|p| p[1] == p[0] + 1));
            assert_eq!(*seg.z.last().unwrap(), seg.y, "intervals close at the spanning edge");
            assert!(g.has_edge(seg.x, seg.y));
            assert!(seg.x <= seg.z[0], "spanning edges start in the covered prefix");
            assert!(i == 0 || seg.x < seg.z[0]);
            next = seg.y + 1;
        }
        assert_eq!(next, g.n() + 1, "intervals cover every position");
        let index = self.segment_index();
        for &(u, v) in g.edges() {
            assert!(index[v] - index[u] <= 1, "edge {u}-{v} skips over a whole segment");
        }
    }
}

use thiserror::Error;

/// A graph whose vertices are the positions `1..=n` of a fixed linear order.
/// Adjacency lists are kept sorted; the edge list is kept in lexicographic
/// order with `u < v` in every pair. Index 0 is unused throughout so that
/// positions can be used to index directly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("{u}-{v} is not an edge")]
    MissingEdge { u: usize, v: usize },
}

impl OrderedGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(OrderedGraph { n, adj, edges: norm })
    }

    pub fn edgeless(n: usize) -> Self {
        OrderedGraph { n, adj: vec![Vec::new(); n + 1], edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighbors of `v` at positions before `v`.
    pub fn neighbors_before(&self, v: usize) -> &[usize] {
        let cut = self.adj[v].partition_point(|&u| u < v);
        &self.adj[v][..cut]
    }

    /// Neighbors of `v` at positions after `v`.
    pub fn neighbors_after(&self, v: usize) -> &[usize] {
        let cut = self.adj[v].partition_point(|&u| u < v);
        &self.adj[v][cut..]
    }

    /// The mirror image: position `v` becomes `n + 1 - v`.
    pub fn mirror(&self) -> OrderedGraph {
        let n = self.n;
        let mapped: Vec<(usize, usize)> =
            self.edges.iter().map(|&(u, v)| (n + 1 - v, n + 1 - u)).collect();
        OrderedGraph::new(n, &mapped).expect("mirroring preserves validity")
    }

    /// Induced subgraph on `keep` (strictly ascending positions). Returns the
    /// subgraph together with `map` where `map[i]` is the original position
    /// of new position `i` (`map[0]` is unused).
    pub fn induce(&self, keep: &[usize]) -> (OrderedGraph, Vec<usize>) {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(keep.iter().all(|&v| v >= 1 && v <= self.n));
        let mut inv = vec![0usize; self.n + 1];
        let mut map = Vec::with_capacity(keep.len() + 1);
        map.push(0);
        for (i, &v) in keep.iter().enumerate() {
            inv[v] = i + 1;
            map.push(v);
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if inv[u] != 0 && inv[v] != 0 {
                edges.push((inv[u], inv[v]));
            }
        }
        let sub = OrderedGraph::new(keep.len(), &edges).expect("induced edges are valid");
        (sub, map)
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Connected components as ascending position lists, ordered by their
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for s in 1..=self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl std::fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrderedGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_normalizes_and_validates() {
        let g = OrderedGraph::new(4, &[(3, 1), (2, 4)]).unwrap();
        assert_eq!(g.edges(), &[(1, 3), (2, 4)]);
        assert!(g.has_edge(1, 3) && g.has_edge(3, 1));
        assert!(!g.has_edge(1, 2));
        assert!(matches!(
            OrderedGraph::new(2, &[(1, 1)]),
            Err(GraphError::SelfLoop { v: 1 })
        ));
        assert!(matches!(
            OrderedGraph::new(2, &[(0, 1)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            OrderedGraph::new(3, &[(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge { u: 1, v: 2 })
        ));
    }

    #[test]
    fn mirror_reverses_positions() {
        let g = OrderedGraph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let m = g.mirror();
        assert_eq!(m.edges(), &[(1, 2), (2, 3)]);
        let chord = OrderedGraph::new(3, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(chord.mirror().edges(), &[(1, 3), (2, 3)]);
    }

    #[test]
    fn neighbor_splits() {
        let g = OrderedGraph::new(5, &[(1, 3), (3, 5), (2, 3)]).unwrap();
        assert_eq!(g.neighbors_before(3), &[1, 2]);
        assert_eq!(g.neighbors_after(3), &[5]);
    }

    #[test]
    fn induce_keeps_relative_order() {
        let g = OrderedGraph::new(5, &[(1, 2), (2, 4), (4, 5)]).unwrap();
        let (sub, map) = g.induce(&[2, 4, 5]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(map, vec![0, 2, 4, 5]);
    }

    #[test]
    fn components_split() {
        let g = OrderedGraph::new(5, &[(1, 4), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![1, 4], vec![2, 3], vec![5]]);
    }
}

use crate::graph::{GraphError, OrderedGraph};

/// Replaces edge `e = {x, y}` by the path x–a–b–y where a, b are two fresh
/// vertices appended after position n. Every double subdivision raises the
/// maximum independent set size of the underlying unordered graph by exactly
/// one, which is what the reduction thresholds rely on; the placement of the
/// fresh vertices in the order is irrelevant for that count.
pub fn poljak_double_subdivide(
    g: &OrderedGraph,
    e: (usize, usize),
) -> Result<OrderedGraph, GraphError> {
    let (x, y) = (e.0.min(e.1), e.0.max(e.1));
    if !g.has_edge(x, y) {
        return Err(GraphError::MissingEdge { u: x, v: y });
    }
    let a = g.n() + 1;
    let b = g.n() + 2;
    let mut edges: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&(u, v)| (u, v) != (x, y)).collect();
    edges.push((x, a));
    edges.push((a, b));
    edges.push((y, b));
    OrderedGraph::new(g.n() + 2, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::alpha_brute;
    use crate::weights::WeightMap;
    use num::{BigInt, BigRational};

    fn alpha(g: &OrderedGraph) -> BigRational {
        alpha_brute(g, &WeightMap::unit(g.n())).unwrap().weight
    }

    #[test]
    fn one_subdivision_raises_alpha_by_one() {
        let g = OrderedGraph::new(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let before = alpha(&g);
        let after = alpha(&poljak_double_subdivide(&g, (1, 2)).unwrap());
        assert_eq!(after, before + BigRational::from_integer(BigInt::from(1)));
    }

    #[test]
    fn repeated_subdivision_keeps_raising() {
        let mut g = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        let mut expect = alpha(&g);
        for _ in 0..3 {
            let e = g.edges()[0];
            g = poljak_double_subdivide(&g, e).unwrap();
            expect += BigRational::from_integer(BigInt::from(1));
            assert_eq!(alpha(&g), expect);
        }
    }

    #[test]
    fn missing_edge_is_an_error() {
        let g = OrderedGraph::new(3, &[(1, 2)]).unwrap();
        assert!(matches!(
            poljak_double_subdivide(&g, (1, 3)),
            Err(GraphError::MissingEdge { u: 1, v: 3 })
        ));
    }
}

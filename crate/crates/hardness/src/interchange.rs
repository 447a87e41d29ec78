use crate::HardnessError;
use omwis_core::brute::alpha_brute_capped;
use omwis_core::graph::OrderedGraph;
use omwis_core::weights::WeightMap;

/// Two graphs with marked boundary vertices that can replace one another
/// inside any host attached only at the boundary, without changing the
/// host's independence number. The first is a pair of plain paths; the
/// second braids the paths through extra vertices.
///
/// Returned as (graph, boundary) pairs; boundary lists correspond
/// positionally.
pub fn braiding_pair() -> ((OrderedGraph, Vec<usize>), (OrderedGraph, Vec<usize>)) {
    let g1 = OrderedGraph::new(7, &[(1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
        .expect("static edge list is valid");
    let g2 = OrderedGraph::new(
        8,
        &[(1, 2), (1, 3), (2, 3), (2, 4), (2, 6), (3, 4), (3, 7), (5, 6), (6, 7), (7, 8)],
    )
    .expect("static edge list is valid");
    ((g1, vec![1, 3, 4, 7]), (g2, vec![1, 4, 5, 8]))
}

/// The linear forest a permutation gadget stands in for: wire i runs from
/// x_i (position i) to y_{sigma(i)} (position ℓ + sigma(i)) through
/// kvec[i] − 2 interior vertices, appended after the wire block. Boundary =
/// all x's then all y's.
pub fn forest_replacement(
    sigma: &[usize],
    kvec: &[usize],
) -> Result<(OrderedGraph, Vec<usize>), HardnessError> {
    let ell = sigma.len();
    if kvec.len() != ell {
        return Err(HardnessError::InvalidGadget(format!(
            "sigma/kvec lengths {ell}/{} differ",
            kvec.len()
        )));
    }
    let mut seen = vec![false; ell + 1];
    for &img in sigma {
        if img < 1 || img > ell || seen[img] {
            return Err(HardnessError::InvalidGadget(format!(
                "sigma is not a permutation of 1..={ell}"
            )));
        }
        seen[img] = true;
    }
    if kvec.iter().any(|&k| k < 2) {
        return Err(HardnessError::InvalidGadget(
            "paths between distinct wire ends need at least two vertices".into(),
        ));
    }

    let mut edges = Vec::new();
    let mut next = 2 * ell + 1;
    for i in 1..=ell {
        let mut prev = i;
        for _ in 0..kvec[i - 1] - 2 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, ell + sigma[i - 1]));
    }
    let graph = OrderedGraph::new(next - 1, &edges)?;
    Ok((graph, (1..=2 * ell).collect()))
}

/// Independence number of the host built from `core` by appending `extras`
/// fresh vertices and adding the `attach` edges. Attachment endpoints 1..=b
/// name boundary vertices (via `boundary`), b+1..=b+extras name the fresh
/// vertices; every edge must touch at least one fresh vertex, since
/// boundary-to-boundary edges would break the interchangeability contract.
///
/// Using the same `attach` list against two (graph, boundary) pairs of equal
/// boundary arity builds the same host around either graph.
pub fn alpha_embedded(
    core: &OrderedGraph,
    boundary: &[usize],
    extras: usize,
    attach: &[(usize, usize)],
    cap: usize,
) -> Result<usize, HardnessError> {
    let b = boundary.len();
    if let Some(&bad) = boundary.iter().find(|&&v| v < 1 || v > core.n()) {
        return Err(HardnessError::BadEmbedding(format!(
            "boundary vertex {bad} outside the core"
        )));
    }
    let resolve = |end: usize| -> Result<(usize, bool), HardnessError> {
        if (1..=b).contains(&end) {
            Ok((boundary[end - 1], false))
        } else if end <= b + extras {
            Ok((core.n() + end - b, true))
        } else {
            Err(HardnessError::BadEmbedding(format!("attachment endpoint {end} out of range")))
        }
    };

    let mut edges = core.edges().to_vec();
    for &(s, t) in attach {
        let (u, u_fresh) = resolve(s)?;
        let (v, v_fresh) = resolve(t)?;
        if !u_fresh && !v_fresh {
            return Err(HardnessError::BadEmbedding(
                "attachment joins two boundary vertices".into(),
            ));
        }
        edges.push((u, v));
    }
    let graph = OrderedGraph::new(core.n() + extras, &edges)?;
    let sol = alpha_brute_capped(&graph, &WeightMap::unit(graph.n()), cap)?;
    Ok(sol.witness.len())
}

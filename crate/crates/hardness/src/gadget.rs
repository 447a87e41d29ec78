use crate::output::TrainTarget;
use crate::train::{couple_trains, Train};
use crate::HardnessError;
use omwis_core::graph::OrderedGraph;

/// A train with equally many inputs and outputs that is interchangeable with
/// a linear forest: replacing it by `ell` disjoint paths, the i-th running
/// from input i to output sigma(i) through kvec[i] vertices in total, never
/// changes the independence number of a host graph attached only at the
/// wires.
#[derive(Debug, Clone)]
pub struct PermutationGadget {
    train: Train,
    sigma: Vec<usize>,
    kvec: Vec<usize>,
}

impl PermutationGadget {
    /// `sigma` maps 1-based wire i to `sigma[i - 1]`; `kvec` entries must be
    /// positive and all of the same parity, which is what keeps composed
    /// path lengths well-defined.
    pub fn new(train: Train, sigma: Vec<usize>, kvec: Vec<usize>) -> Result<Self, HardnessError> {
        let ell = train.inputs().len();
        if train.outputs().len() != ell {
            return Err(HardnessError::InvalidGadget(format!(
                "{} inputs but {} outputs",
                ell,
                train.outputs().len()
            )));
        }
        if sigma.len() != ell || kvec.len() != ell {
            return Err(HardnessError::InvalidGadget(format!(
                "sigma/kvec lengths {}/{} do not match {ell} wires",
                sigma.len(),
                kvec.len()
            )));
        }
        let mut seen = vec![false; ell + 1];
        for &img in &sigma {
            if img < 1 || img > ell || seen[img] {
                return Err(HardnessError::InvalidGadget(format!(
                    "sigma is not a permutation of 1..={ell}"
                )));
            }
            seen[img] = true;
        }
        if kvec.iter().any(|&k| k == 0) {
            return Err(HardnessError::InvalidGadget("kvec entries must be positive".into()));
        }
        if kvec.windows(2).any(|w| w[0] % 2 != w[1] % 2) {
            return Err(HardnessError::InvalidGadget("kvec parities differ".into()));
        }
        Ok(PermutationGadget { train, sigma, kvec })
    }

    pub fn train(&self) -> &Train {
        &self.train
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn kvec(&self) -> &[usize] {
        &self.kvec
    }

    pub fn ell(&self) -> usize {
        self.sigma.len()
    }
}

/// The gadget exchanging wires j and j+1 while leaving the rest parallel.
/// Both variants lay out four vertex groups: the inputs, one or two special
/// connector groups, a permuted middle copy, and the outputs with the pair
/// swapped; the variants differ in which forbidden pattern the construction
/// avoids.
pub fn swap_gadget(target: TrainTarget, ell: usize, j: usize) -> Result<PermutationGadget, HardnessError> {
    let max = ell.saturating_sub(1);
    if j < 1 || j > max {
        return Err(HardnessError::SwapOutOfRange { j, max });
    }

    let mut sigma: Vec<usize> = (1..=ell).collect();
    sigma.swap(j - 1, j);

    let (graph, kvec) = match target {
        TrainTarget::Abxba => abxba_swap(ell, j),
        TrainTarget::Abccab => abccab_swap(ell, j),
    };
    let train = Train::new(graph, ell, ell)?;
    PermutationGadget::new(train, sigma, kvec)
}

/// Output positions with the pair (j, j+1) exchanged; shared by both swap
/// variants.
fn swapped_tail(base: usize, ell: usize, j: usize) -> Vec<usize> {
    let mut pos = vec![0usize; ell + 1];
    for i in 1..=ell {
        pos[i] = match i {
            _ if i == j => base + j + 1,
            _ if i == j + 1 => base + j,
            _ => base + i,
        };
    }
    pos
}

fn abxba_swap(ell: usize, j: usize) -> (OrderedGraph, Vec<usize>) {
    // Middle copy: x¹_1 … x¹_{j-1}, u, v, x¹_j, x¹_{j+1}, x¹_{j+2} … x¹_ℓ.
    let mut x1 = vec![0usize; ell + 1];
    for i in 1..=ell {
        x1[i] = match i {
            _ if i < j => ell + i,
            _ if i == j => ell + j + 2,
            _ if i == j + 1 => ell + j + 3,
            _ => ell + i + 2,
        };
    }
    let u = ell + j;
    let v = ell + j + 1;

    // Second copy: x²_1 … x²_{j-1}, w, x²_{j+1}, x²_j, x²_{j+2} … x²_ℓ.
    let base2 = 2 * ell + 2;
    let mut x2 = vec![0usize; ell + 1];
    for i in 1..=ell {
        x2[i] = match i {
            _ if i < j => base2 + i,
            _ if i == j => base2 + j + 2,
            _ if i == j + 1 => base2 + j + 1,
            _ => base2 + i + 1,
        };
    }
    let w = base2 + j;
    let x3 = swapped_tail(3 * ell + 3, ell, j);

    let mut edges = Vec::new();
    for i in 1..=ell {
        if i == j + 1 {
            continue;
        }
        edges.push((i, x1[i]));
        edges.push((x1[i], x2[i]));
        edges.push((x2[i], x3[i]));
    }
    // Wire j+1 detours through u and w.
    edges.push((j + 1, x1[j + 1]));
    edges.push((x1[j + 1], u));
    edges.push((u, w));
    edges.push((w, x2[j + 1]));
    edges.push((x2[j + 1], x3[j + 1]));
    // v guards the crossing.
    edges.push((j, v));
    edges.push((u, v));
    edges.push((v, x1[j]));
    edges.push((v, x2[j]));
    edges.push((x1[j], x1[j + 1]));

    let graph = OrderedGraph::new(4 * ell + 3, &edges).expect("gadget edges are valid");
    let mut kvec = vec![4usize; ell];
    kvec[j] = 6;
    (graph, kvec)
}

fn abccab_swap(ell: usize, j: usize) -> (OrderedGraph, Vec<usize>) {
    let u1 = ell + 1;
    let u2 = ell + 2;
    let u3 = ell + 3;
    let u4 = ell + 4;

    // Second copy in reversed order, with the pair (j, j+1) pre-swapped so
    // the output tail can swap it back: x²_ℓ … x²_{j+2}, x²_j, x²_{j+1},
    // x²_{j-1} … x²_1.
    let base2 = ell + 4;
    let mut x2 = vec![0usize; ell + 1];
    for i in 1..=ell {
        x2[i] = match i {
            _ if i == j => base2 + (ell - j),
            _ if i == j + 1 => base2 + (ell - j + 1),
            _ => base2 + (ell + 1 - i),
        };
    }
    let x3 = swapped_tail(2 * ell + 4, ell, j);

    let mut edges = Vec::new();
    for i in 1..=ell {
        if i == j || i == j + 1 {
            continue;
        }
        edges.push((i, x2[i]));
        edges.push((x2[i], x3[i]));
    }
    edges.push((j, u1));
    edges.push((u1, u3));
    edges.push((u3, x2[j]));
    edges.push((x2[j], x3[j]));
    edges.push((j + 1, u2));
    edges.push((u2, u4));
    edges.push((u4, x2[j + 1]));
    edges.push((x2[j + 1], x3[j + 1]));

    let graph = OrderedGraph::new(3 * ell + 4, &edges).expect("gadget edges are valid");
    let mut kvec = vec![3usize; ell];
    kvec[j - 1] = 5;
    kvec[j] = 5;
    (graph, kvec)
}

/// The trivial gadget: `ell` disjoint edges x_i y_i, realizing the identity
/// with every path of length two.
pub fn identity_gadget(ell: usize) -> PermutationGadget {
    let edges: Vec<(usize, usize)> = (1..=ell).map(|i| (i, ell + i)).collect();
    let graph = OrderedGraph::new(2 * ell, &edges).expect("disjoint edges are valid");
    let train = Train::new(graph, ell, ell).expect("wire sides are independent");
    PermutationGadget::new(train, (1..=ell).collect(), vec![2; ell])
        .expect("identity gadget is well-formed")
}

/// Couple two gadgets into one realizing g2.sigma ∘ g1.sigma. The composed
/// path through wire i glues g1's path to g2's path at the shared wire
/// vertex, hence the -1 in the length rule.
pub fn compose_gadgets(
    g1: &PermutationGadget,
    g2: &PermutationGadget,
) -> Result<PermutationGadget, HardnessError> {
    if g1.ell() != g2.ell() {
        return Err(HardnessError::ArityMismatch { left: g1.ell(), right: g2.ell() });
    }
    let train = couple_trains(&g1.train, &g2.train)?;
    let sigma: Vec<usize> = g1.sigma.iter().map(|&mid| g2.sigma[mid - 1]).collect();
    let kvec: Vec<usize> =
        (0..g1.ell()).map(|i| g1.kvec[i] + g2.kvec[g1.sigma[i] - 1] - 1).collect();
    PermutationGadget::new(train, sigma, kvec)
}

/// Decompose `tau` into adjacent transpositions: the returned list of
/// 1-based positions j, applied left to right as swaps of wires (j, j+1),
/// composes to `tau`. Plain selection bubbling, O(ℓ²) swaps.
///
/// `tau` must be a permutation of 1..=ℓ in one-line notation.
pub fn bubble_swaps(tau: &[usize]) -> Vec<usize> {
    let ell = tau.len();
    // Work on slot contents: p[k] = input currently routed to output slot
    // k+1. Appending a swap at j exchanges slots j and j+1. The target
    // assignment routes input tau^{-1}(k) to slot k.
    let mut want = vec![0usize; ell];
    for (i, &img) in tau.iter().enumerate() {
        debug_assert!(img >= 1 && img <= ell, "tau must be a permutation");
        want[img - 1] = i + 1;
    }
    let mut p: Vec<usize> = (1..=ell).collect();
    let mut swaps = Vec::new();
    for k in 0..ell {
        let mut pos = k + p[k..].iter().position(|&x| x == want[k]).expect("tau is a permutation");
        while pos > k {
            p.swap(pos - 1, pos);
            swaps.push(pos);
            pos -= 1;
        }
    }
    swaps
}

/// Build a gadget realizing `tau` by composing elementary swap gadgets of
/// the chosen target; the identity comes out as the disjoint-edge gadget.
pub fn realize_permutation(
    target: TrainTarget,
    tau: &[usize],
) -> Result<PermutationGadget, HardnessError> {
    let ell = tau.len();
    let mut seen = vec![false; ell + 1];
    for &img in tau {
        if img < 1 || img > ell || seen[img] {
            return Err(HardnessError::InvalidGadget(format!(
                "target is not a permutation of 1..={ell}"
            )));
        }
        seen[img] = true;
    }

    let swaps = bubble_swaps(tau);
    let mut gadget = match swaps.first() {
        None => identity_gadget(ell),
        Some(&j) => swap_gadget(target, ell, j)?,
    };
    for &j in swaps.iter().skip(1) {
        gadget = compose_gadgets(&gadget, &swap_gadget(target, ell, j)?)?;
    }
    debug_assert_eq!(gadget.sigma(), tau, "composed swaps realize the target");
    Ok(gadget)
}

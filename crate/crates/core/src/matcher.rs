use crate::graph::OrderedGraph;
use crate::pattern::Pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchMode {
    /// Order-preserving embedding that matches edges and non-edges exactly.
    Induced,
    /// Order-preserving embedding where pattern edges must map to edges;
    /// non-edges are unconstrained.
    Subgraph,
}

/// An order-preserving embedding of a pattern into a host graph.
/// `map[i]` is the host position of pattern position `i + 1`; the map is
/// strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn positions(&self) -> &[usize] {
        &self.map
    }

    /// Host image of pattern position `p` (1-based).
    pub fn image(&self, p: usize) -> usize {
        self.map[p - 1]
    }
}

/// Whether a failed viability check rules out all later candidates too.
/// The check window `[c + (r - p), n - (h - r)]` only shrinks as `c` grows,
/// so a miss against a fixed, already-placed vertex is permanent; a miss
/// against the candidate's own adjacency is not.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Viability {
    Ok,
    FailLocal,
    FailMonotone,
}

struct Search<'a> {
    host: &'a OrderedGraph,
    pat: &'a OrderedGraph,
    mode: MatchMode,
    back_adj: Vec<Vec<usize>>,
    fwd_adj: Vec<Vec<usize>>,
    phi: Vec<usize>,
}

impl<'a> Search<'a> {
    /// The smallest host position still admissible for pattern position `r`
    /// is `base + (r - p)` when `base` hosts position `p`; the largest leaves
    /// room for the remaining `h - r` positions.
    fn forward_viable(&self, p: usize, c: usize) -> Viability {
        let h = self.pat.n();
        let n = self.host.n();
        for q in 1..=p {
            let fwd = &self.fwd_adj[q];
            let idx = fwd.partition_point(|&r| r <= p);
            if idx == fwd.len() {
                continue;
            }
            let r = fwd[idx];
            let lo = c + (r - p);
            let hi = n - (h - r);
            if lo > hi {
                return Viability::FailMonotone;
            }
            let hq = if q == p { c } else { self.phi[q] };
            let list = self.host.adj(hq);
            let at = list.partition_point(|&x| x < lo);
            if at == list.len() || list[at] > hi {
                return if q == p {
                    Viability::FailLocal
                } else {
                    Viability::FailMonotone
                };
            }
        }
        Viability::Ok
    }

    fn admissible(&self, p: usize, c: usize) -> bool {
        for q in 1..p {
            let adj_in_pat = self.pat.has_edge(q, p);
            let adj_in_host = self.host.has_edge(self.phi[q], c);
            match self.mode {
                MatchMode::Induced => {
                    if adj_in_pat != adj_in_host {
                        return false;
                    }
                }
                MatchMode::Subgraph => {
                    if adj_in_pat && !adj_in_host {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self, p: usize) -> bool {
        let h = self.pat.n();
        let n = self.host.n();
        if p > h {
            return true;
        }
        let lo = if p == 1 { 1 } else { self.phi[p - 1] + 1 };
        let hi = n.saturating_sub(h - p);
        if lo > hi {
            return false;
        }
        if let Some(&q) = self
            .back_adj[p]
            .iter()
            .min_by_key(|&&q| self.host.degree(self.phi[q]))
        {
            // Candidates must be host neighbors of every already-placed
            // pattern neighbor; scan the shortest such adjacency list.
            let list = self.host.adj(self.phi[q]);
            let start = list.partition_point(|&x| x < lo);
            for &c in &list[start..] {
                if c > hi {
                    break;
                }
                if !self.admissible(p, c) {
                    continue;
                }
                match self.forward_viable(p, c) {
                    Viability::FailMonotone => break,
                    Viability::FailLocal => continue,
                    Viability::Ok => {}
                }
                self.phi[p] = c;
                if self.dfs(p + 1) {
                    return true;
                }
            }
        } else {
            for c in lo..=hi {
                if !self.admissible(p, c) {
                    continue;
                }
                match self.forward_viable(p, c) {
                    Viability::FailMonotone => break,
                    Viability::FailLocal => continue,
                    Viability::Ok => {}
                }
                self.phi[p] = c;
                if self.dfs(p + 1) {
                    return true;
                }
            }
        }
        self.phi[p] = 0;
        false
    }
}

/// Lexicographically least order-preserving embedding of `pattern` into
/// `host`, or None. The backtracking assigns pattern positions left to right
/// with ascending host candidates, so the first complete assignment is the
/// lexicographic minimum.
pub fn find_pattern(host: &OrderedGraph, pattern: &Pattern, mode: MatchMode) -> Option<Embedding> {
    let pat = pattern.graph();
    let h = pat.n();
    if h == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    if h > host.n() {
        return None;
    }
    let mut back_adj = vec![Vec::new(); h + 1];
    let mut fwd_adj = vec![Vec::new(); h + 1];
    for &(u, v) in pat.edges() {
        back_adj[v].push(u);
        fwd_adj[u].push(v);
    }
    let mut search = Search {
        host,
        pat,
        mode,
        back_adj,
        fwd_adj,
        phi: vec![0; h + 1],
    };
    if search.dfs(1) {
        Some(Embedding { map: search.phi[1..].to_vec() })
    } else {
        None
    }
}

/// Convenience: does `host` contain `pattern` at all?
pub fn contains_pattern(host: &OrderedGraph, pattern: &Pattern, mode: MatchMode) -> bool {
    find_pattern(host, pattern, mode).is_some()
}

use crate::graph::{GraphError, OrderedGraph};
use thiserror::Error;

/// A forbidden ordered pattern: an ordered graph written as the literal
/// `"<n>:u-v[,u-v]*"` (the edge list may be empty, e.g. `"3:"`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    graph: OrderedGraph,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("empty pattern literal")]
    Empty,
    #[error("bad vertex count in pattern literal: {0:?}")]
    BadCount(String),
    #[error("bad edge token in pattern literal: {0:?}")]
    BadEdge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl Pattern {
    pub fn parse(literal: &str) -> Result<Pattern, PatternError> {
        let literal = literal.trim();
        if literal.is_empty() {
            return Err(PatternError::Empty);
        }
        let (count_part, edges_part) = match literal.split_once(':') {
            Some((c, e)) => (c, e),
            None => (literal, ""),
        };
        let n: usize = count_part
            .trim()
            .parse()
            .map_err(|_| PatternError::BadCount(count_part.to_string()))?;
        let mut edges = Vec::new();
        for tok in edges_part.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| PatternError::BadEdge(tok.to_string()))?;
            let u: usize = a.trim().parse().map_err(|_| PatternError::BadEdge(tok.to_string()))?;
            let v: usize = b.trim().parse().map_err(|_| PatternError::BadEdge(tok.to_string()))?;
            edges.push((u, v));
        }
        Ok(Pattern { graph: OrderedGraph::new(n, &edges)? })
    }

    pub fn from_graph(graph: OrderedGraph) -> Pattern {
        Pattern { graph }
    }

    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.graph.n()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.n() == 0
    }

    /// Canonical literal form, edges in lexicographic order.
    pub fn literal(&self) -> String {
        let edges: Vec<String> =
            self.graph.edges().iter().map(|&(u, v)| format!("{u}-{v}")).collect();
        format!("{}:{}", self.graph.n(), edges.join(","))
    }

    pub fn mirror(&self) -> Pattern {
        Pattern { graph: self.graph.mirror() }
    }

    /// Is the first position isolated (degree 0)?
    pub fn first_isolated(&self) -> bool {
        self.graph.n() >= 1 && self.graph.degree(1) == 0
    }

    /// Is the last position isolated (degree 0)?
    pub fn last_isolated(&self) -> bool {
        self.graph.n() >= 1 && self.graph.degree(self.graph.n()) == 0
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.literal())
    }
}

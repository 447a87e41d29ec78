use crate::graph::{GraphError, OrderedGraph};
use crate::weights::{WeightError, WeightMap};
use num::{BigInt, BigRational, One};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("bad header line {0:?}")]
    BadHeader(String),
    #[error("bad weight token {0:?}")]
    BadWeight(String),
    #[error("expected {expected} weights on the weight line, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("bad edge line {0:?}")]
    BadEdgeLine(String),
    #[error("expected {expected} edge lines, got {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

pub fn parse_rational(tok: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::BadWeight(tok.to_string());
    match tok.split_once('/') {
        Some((p, q)) => {
            let num = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num = BigInt::from_str(tok.trim()).map_err(|_| bad())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Graph file format: header `n m`, an optional second line of n rational
/// weights (`p` or `p/q`), then m edge lines `u-v`. Lines starting with `#`
/// and blank lines are ignored anywhere; missing weights default to 1.
pub fn parse_graph(text: &str) -> Result<(OrderedGraph, WeightMap), ParseError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::BadHeader(header.to_string()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::BadHeader(header.to_string()))?;
    if it.next().is_some() {
        return Err(ParseError::BadHeader(header.to_string()));
    }

    let mut rest: Vec<&str> = lines.collect();
    let mut weights: Option<Vec<BigRational>> = None;
    if let Some(first) = rest.first() {
        // Edge lines contain '-'; a weight line is whitespace-separated
        // rationals (weights are positive, so no minus signs).
        if !first.contains('-') {
            let toks: Vec<&str> = first.split_whitespace().collect();
            if toks.len() != n {
                return Err(ParseError::WeightCount { expected: n, got: toks.len() });
            }
            let mut ws = Vec::with_capacity(n);
            for t in toks {
                ws.push(parse_rational(t)?);
            }
            weights = Some(ws);
            rest.remove(0);
        }
    }

    if rest.len() != m {
        return Err(ParseError::EdgeCount { expected: m, got: rest.len() });
    }
    let mut edges = Vec::with_capacity(m);
    for line in rest {
        let (a, b) = line
            .split_once('-')
            .ok_or_else(|| ParseError::BadEdgeLine(line.to_string()))?;
        let u: usize =
            a.trim().parse().map_err(|_| ParseError::BadEdgeLine(line.to_string()))?;
        let v: usize =
            b.trim().parse().map_err(|_| ParseError::BadEdgeLine(line.to_string()))?;
        edges.push((u, v));
    }
    let graph = OrderedGraph::new(n, &edges)?;
    let weights = match weights {
        Some(ws) => WeightMap::from_rationals(ws)?,
        None => WeightMap::unit(n),
    };
    Ok((graph, weights))
}

/// Inverse of `parse_graph`; the weight line is omitted when all weights are
/// 1. Optional `comments` are emitted first as `# ...` lines.
pub fn format_graph(g: &OrderedGraph, w: &WeightMap, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("{} {}\n", g.n(), g.num_edges()));
    let unit = (1..=g.n()).all(|v| w.get(v).is_one());
    if !unit && g.n() > 0 {
        let toks: Vec<String> = (1..=g.n()).map(|v| w.get(v).to_string()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u}-{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn roundtrip_with_weights() {
        let text = "# an instance\n3 2\n1/2 2 7/3\n1-2\n2-3\n";
        let (g, w) = parse_graph(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(w.get(1), &parse_rational("1/2").unwrap());
        let printed = format_graph(&g, &w, &[]);
        let (g2, w2) = parse_graph(&printed).unwrap();
        assert_eq!(g.edges(), g2.edges());
        assert_eq!(w, w2);
    }

    #[test]
    fn unit_weights_omitted() {
        let g = OrderedGraph::new(2, &[(1, 2)]).unwrap();
        let w = WeightMap::unit(2);
        let printed = format_graph(&g, &w, &["made for a test".into()]);
        assert_eq!(printed, "# made for a test\n2 1\n1-2\n");
        let (g2, w2) = parse_graph(&printed).unwrap();
        assert_eq!(g2.edges(), g.edges());
        assert_eq!(w2, w);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_graph(""), Err(ParseError::MissingHeader)));
        assert!(matches!(parse_graph("2"), Err(ParseError::BadHeader(_))));
        assert!(matches!(
            parse_graph("2 1\n"),
            Err(ParseError::EdgeCount { expected: 1, got: 0 })
        ));
        assert!(matches!(
            parse_graph("2 1\n1 1 1\n1-2\n"),
            Err(ParseError::WeightCount { expected: 2, got: 3 })
        ));
        assert!(parse_graph("2 1\n0 1\n1-2\n").is_err()); // weights must be positive
        assert!(parse_graph("2 1\n1-3\n").is_err());
        assert!(!parse_rational("1/0").is_ok());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn zero_vertex_graph() {
        let (g, w) = parse_graph("0 0\n").unwrap();
        assert_eq!(g.n(), 0);
        assert!(w.sum([]).is_zero());
    }
}

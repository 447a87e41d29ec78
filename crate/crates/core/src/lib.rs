//! Shared foundation for the ordered-graph MWIS solver suite: graph and
//! pattern types, the ordered pattern matcher, rational weight handling,
//! the brute-force oracle, flow utilities, and instance I/O.

pub mod bipartite;
pub mod brute;
pub mod flow;
pub mod gen;
pub mod graph;
pub mod io;
pub mod matcher;
pub mod pattern;
pub mod poljak;
pub mod sets;
pub mod solution;
pub mod trace;
pub mod weights;

pub use bipartite::{mwis_bipartite, BipartiteError};
pub use brute::{alpha_brute, alpha_brute_capped, OracleError, DEFAULT_ORACLE_CAP};
pub use graph::{GraphError, OrderedGraph};
pub use io::{format_graph, parse_graph, parse_rational, ParseError};
pub use matcher::{contains_pattern, find_pattern, Embedding, MatchMode};
pub use pattern::{Pattern, PatternError};
pub use poljak::poljak_double_subdivide;
pub use solution::Solution;
pub use trace::Trace;
pub use weights::{WeightError, WeightMap};

//! Generalized Turán numbers `ex(n, H, F)` for complete bipartite and
//! multipartite patterns: exact counting, closed-form bounds, extremal
//! constructions, exhaustive and heuristic search, Berge hypergraph tools and
//! a claim-verification harness.

pub mod bits;
pub mod bounds;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod hypergraph;
pub mod pattern;
pub mod search;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::MultipartitePattern;

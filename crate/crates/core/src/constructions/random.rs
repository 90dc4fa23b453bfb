//! Random sampling followed by deletion of forbidden copies.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::MultipartitePattern;
use crate::subgraph::{copy_edges, find_copy};

/// Constant factor in the edge probability.
pub const DELETION_C: f64 = 0.5;

/// Edge probability `c * n^(-(|V(F)| - 2) / (|E(F)| - |E(H)|))`.
pub fn deletion_probability(n: usize, h: &MultipartitePattern, f: &MultipartitePattern) -> Result<f64> {
    let (eh, ef) = (h.edge_count(), f.edge_count());
    if ef <= eh {
        return Err(Error::pre(format!("need |E(F)| > |E(H)|, got |E({f})| = {ef}, |E({h})| = {eh}")));
    }
    let exponent = (f.order() as f64 - 2.0) / (ef - eh) as f64;
    Ok((DELETION_C * (n as f64).powf(-exponent)).min(1.0))
}

/// Samples `G(n, p)` and deletes the lowest edge of the first found copy of
/// `f` until none remains. The result depends only on the arguments.
pub fn build_random_deletion(n: usize, h: &MultipartitePattern, f: &MultipartitePattern, seed: u64) -> Result<Graph> {
    let p = deletion_probability(n, h, f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::new(n, &edges)?;
    while let Some(parts) = find_copy(&g, f, None) {
        let (u, v) = copy_edges(&parts)[0];
        g = g.without_edge(u, v)?;
    }
    Ok(g)
}

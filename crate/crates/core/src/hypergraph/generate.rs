use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Hypergraph;
use crate::bits::{bit, bits};
use crate::constructions::ball3;
use crate::error::{Error, Result};
use crate::graph::MAX_VERTICES;

/// Retry budget: generation stops after this many rejected samples in a row.
pub const MAX_CONSECUTIVE_FAILURES: usize = 100_000;

/// Random greedy linear `r`-uniform hypergraph of Berge girth at least 5.
///
/// Uniform random `r`-sets are accepted when no two of their vertices are
/// within shadow distance 3, which is exactly the condition that the new
/// edge closes no Berge cycle of length 2, 3 or 4.
pub fn generate_girth5_linear(n: usize, r: usize, seed: u64, target: Option<usize>) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(Error::pre(format!("need n >= r >= 2, got n={n}, r={r}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shadow = vec![0u64; n];
    let mut edges = Vec::new();
    let mut failures = 0;
    while failures < MAX_CONSECUTIVE_FAILURES && target.is_none_or(|m| edges.len() < m) {
        let e = sample(&mut rng, n, r).iter().fold(0u64, |m, v| m | bit(v));
        if bits(e).all(|u| ball3(&shadow, u) & e == bit(u)) {
            for v in bits(e) {
                shadow[v] |= e & !bit(v);
            }
            edges.push(e);
            failures = 0;
        } else {
            failures += 1;
        }
    }
    Hypergraph::from_masks(n, r, edges)
}

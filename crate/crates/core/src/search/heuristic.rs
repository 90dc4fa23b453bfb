//! Seeded hill climbing over edge additions with random perturbation.
//!
//! Each restart starts from the empty graph and repeatedly adds the edge of
//! largest count among those keeping the graph `F`-free (ties broken at
//! random). At a saturated graph it deletes one to three random edges and
//! climbs again. One move is one unit of budget.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{certificate, check_sizes, Engine, SearchOptions, SearchResult};
use crate::canon::canonical_graph;
use crate::counting::count_pattern;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::MultipartitePattern;
use crate::subgraph::{contains_pattern, contains_pattern_through};

/// Independent restarts per run, fixed so results do not depend on workers.
pub const RESTARTS: u64 = 4;

pub fn heuristic_max(
    n: usize,
    h: &MultipartitePattern,
    f: &MultipartitePattern,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    let start = Instant::now();
    check_sizes(n, h)?;
    if opts.budget == 0 {
        return Err(Error::pre("heuristic budget must be at least 1"));
    }
    let per_restart = (opts.budget / RESTARTS).max(1);
    let pool = opts.pool()?;
    let runs: Vec<(u128, Graph)> = pool.install(|| {
        (0..RESTARTS)
            .into_par_iter()
            .map(|i| climb(n, h, f, per_restart, opts.seed, i))
            .collect::<Result<_>>()
    })?;
    let (value, best) = runs
        .into_iter()
        .reduce(|a, b| if b.0 > a.0 { b } else { a })
        .expect("at least one restart");
    let canon = canonical_graph(&best);
    if contains_pattern(&canon, f) || count_pattern(&canon, h) != value {
        return Err(Error::pre("heuristic produced an invalid certificate"));
    }
    Ok(SearchResult {
        n,
        h: h.clone(),
        f: f.clone(),
        value,
        exhaustive: false,
        certificates: if opts.collect_certificates { vec![certificate(&canon)] } else { Vec::new() },
        engine: Engine::Heuristic,
        runtime_ms: start.elapsed().as_millis() as u64,
        seed: Some(opts.seed),
    })
}

fn climb(
    n: usize,
    h: &MultipartitePattern,
    f: &MultipartitePattern,
    budget: u64,
    seed: u64,
    stream: u64,
) -> Result<(u128, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut g = Graph::empty(n)?;
    let mut best = (0u128, g.clone());
    for _ in 0..budget {
        let mut top = Vec::new();
        let mut top_value = 0u128;
        for v in 1..n {
            for u in 0..v {
                if g.has_edge(u, v) {
                    continue;
                }
                let next = g.with_edge(u, v)?;
                if contains_pattern_through(&next, f, u) {
                    continue;
                }
                let value = count_pattern(&next, h);
                if top.is_empty() || value > top_value {
                    top.clear();
                    top_value = value;
                }
                if value == top_value {
                    top.push(next);
                }
            }
        }
        if let Some(next) = top.choose(&mut rng) {
            g = next.clone();
            if top_value > best.0 {
                best = (top_value, g.clone());
            }
            continue;
        }
        let edges: Vec<(usize, usize)> = g.edges().collect();
        if edges.is_empty() {
            break;
        }
        let drop = rng.gen_range(1..=3.min(edges.len()));
        for &(u, v) in edges.choose_multiple(&mut rng, drop) {
            g = g.without_edge(u, v)?;
        }
    }
    Ok(best)
}

//! Isomorph-free generation of `F`-free graphs by vertex augmentation.
//!
//! Level `k + 1` is obtained by attaching a new vertex to every level-`k`
//! graph with every neighborhood mask, keeping the `F`-free children and
//! deduplicating by canonical form. Containment of `F` is monotone in the
//! mask, so masks are enumerated as a subset tree and a containing mask cuts
//! off all its extensions. Only copies through the new vertex are searched:
//! the parent is already `F`-free.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::{certificate, check_sizes, heuristic_max, Engine, SearchOptions, SearchResult, HARD_CAP};
use crate::bits::{binomial, bit};
use crate::canon::{canonical_graph, form_of, CanonicalForm};
use crate::counting::count_pattern;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::MultipartitePattern;
use crate::subgraph::contains_pattern_through;

fn check_cap(n: usize) -> Result<()> {
    if n > HARD_CAP {
        return Err(Error::SearchCap { n, cap: HARD_CAP });
    }
    Ok(())
}

/// Visits every `F`-free one-vertex extension of `g`.
fn children(g: &Graph, f: &MultipartitePattern, visit: &mut impl FnMut(Graph)) {
    fn rec(g: &Graph, f: &MultipartitePattern, mask: u64, next: usize, visit: &mut impl FnMut(Graph)) {
        let child = g.with_vertex_unchecked(mask);
        if contains_pattern_through(&child, f, g.order()) {
            return;
        }
        visit(child);
        for b in next..g.order() {
            rec(g, f, mask | bit(b), b + 1, visit);
        }
    }
    rec(g, f, 0, 0, visit);
}

fn next_level(frontier: &[Graph], f: &MultipartitePattern, pool: &rayon::ThreadPool) -> Vec<Graph> {
    let shards: Vec<Vec<(CanonicalForm, Graph)>> = pool.install(|| {
        frontier
            .par_iter()
            .map(|g| {
                let mut out = Vec::new();
                children(g, f, &mut |c| {
                    let canon = canonical_graph(&c);
                    out.push((form_of(&canon), canon));
                });
                out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
                out.dedup_by(|a, b| a.0 == b.0);
                out
            })
            .collect()
    });
    let mut merged = BTreeMap::new();
    for (form, g) in shards.into_iter().flatten() {
        merged.entry(form).or_insert(g);
    }
    merged.into_values().collect()
}

/// All `F`-free graphs on `n` vertices up to isomorphism, canonically
/// labeled and sorted by canonical form.
pub fn free_graphs(n: usize, f: &MultipartitePattern, opts: &SearchOptions) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    check_cap(n)?;
    let pool = opts.pool()?;
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = next_level(&level, f, &pool);
    }
    Ok(level)
}

/// Upper bound on the number of `H`-copies through one vertex of any
/// `F`-free graph on at most `n` vertices.
///
/// In general this is the count through a vertex of `K_n`. When `F = K_{1,t}`
/// and `H = K_{a,b}`, every vertex has fewer than `t` neighbors, giving
/// `C(t-1,b) C(t-1,a-1) + C(t-1,a) C(t-1,b-1)` (one term when `a = b`).
pub fn vertex_increment(n: usize, h: &MultipartitePattern, f: &MultipartitePattern) -> u128 {
    let k = h.order();
    let generic = binomial(n as u64 - 1, k as u64 - 1) * h.labelings_on_vertex_set();
    match (f.as_bipartite(), h.as_bipartite()) {
        (Some((1, t)), Some((a, b))) => {
            let c = |x: usize, y: usize| binomial(x as u64, y as u64);
            let star = if a == b {
                c(t - 1, a) * c(t - 1, a - 1)
            } else {
                c(t - 1, b) * c(t - 1, a - 1) + c(t - 1, a) * c(t - 1, b - 1)
            };
            star.min(generic)
        }
        _ => generic,
    }
}

/// Exact `ex(n, H, F)` with all extremal graphs when certificates are requested.
pub fn exhaustive_max(
    n: usize,
    h: &MultipartitePattern,
    f: &MultipartitePattern,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    let start = Instant::now();
    check_sizes(n, h)?;
    check_cap(n)?;
    let pool = opts.pool()?;
    let prune = if opts.prune_bounds {
        let incumbent = heuristic_max(n, h, f, &SearchOptions { engine: Engine::Heuristic, ..opts.clone() })?.value;
        Some((incumbent, vertex_increment(n, h, f)))
    } else {
        None
    };
    let mut level = vec![Graph::empty(1)?];
    for k in 2..n {
        level = next_level(&level, f, &pool);
        if let Some((incumbent, inc)) = prune {
            let slack = (n - k) as u128 * inc;
            level.retain(|g| count_pattern(g, h) + slack >= incumbent);
        }
    }
    let collect = opts.collect_certificates;
    let shards: Vec<(u128, Vec<Graph>)> = pool.install(|| {
        level
            .par_iter()
            .map(|g| {
                let mut best = 0u128;
                let mut attainers = Vec::new();
                children(g, f, &mut |c| {
                    let value = count_pattern(&c, h);
                    if value > best {
                        best = value;
                        attainers.clear();
                    }
                    if value == best && collect {
                        attainers.push(c);
                    }
                });
                (best, attainers)
            })
            .collect()
    });
    let value = shards.iter().map(|s| s.0).max().unwrap_or(0);
    let mut certs = BTreeMap::new();
    if collect {
        for (_, graphs) in shards.into_iter().filter(|s| s.0 == value) {
            for g in graphs {
                let canon = canonical_graph(&g);
                certs.entry(form_of(&canon)).or_insert(canon);
            }
        }
    }
    Ok(SearchResult {
        n,
        h: h.clone(),
        f: f.clone(),
        value,
        exhaustive: true,
        certificates: certs.values().map(certificate).collect(),
        engine: Engine::Exhaustive,
        runtime_ms: start.elapsed().as_millis() as u64,
        seed: None,
    })
}

/// All extremal graphs up to isomorphism, as graph6.
pub fn enumerate_extremal(
    n: usize,
    h: &MultipartitePattern,
    f: &MultipartitePattern,
    opts: &SearchOptions,
) -> Result<Vec<String>> {
    let opts = SearchOptions { collect_certificates: true, ..opts.clone() };
    Ok(exhaustive_max(n, h, f, &opts)?.certificates)
}

//! Almost-regular graphs of girth at least 5.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{bit, bits};
use crate::error::{Error, Result};
use crate::graph::{named, Graph};

/// Step cap for the randomized search.
pub const MAX_STEPS: usize = 1_000_000;

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for v in bits(g.neighbors(u)) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Smallest order the builder accepts for degree `d`: the Moore bound `d^2 + 1`.
pub fn girth5_min(d: usize) -> usize {
    d * d + 1
}

/// Vertices within distance 3 of `u`, including `u`.
pub(crate) fn ball3(g: &[u64], u: usize) -> u64 {
    let mut seen = bit(u);
    let mut frontier = bit(u);
    for _ in 0..3 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= g[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

/// A girth-at-least-5 graph on `n` vertices where every vertex has degree
/// `d`, except exactly one of degree `d - 1` when `n * d` is odd.
///
/// Small exact cases (matchings, cycles, Petersen) are returned directly;
/// otherwise a seeded greedy construction with edge swaps runs for at most
/// [`MAX_STEPS`] steps.
pub fn build_girth5_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d == 0 {
        return Err(Error::pre("degree d must be at least 1"));
    }
    if n < girth5_min(d) {
        return Err(Error::Infeasible(format!(
            "an almost {d}-regular graph of girth >= 5 needs at least {} vertices, got {n}",
            girth5_min(d)
        )));
    }
    let g = match (n, d) {
        (_, 1) => Graph::new(n, &(0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>())?,
        (_, 2) => named::cycle(n),
        (10, 3) => named::petersen(),
        _ => random_search(n, d, seed)?,
    };
    debug_assert!(is_almost_regular(&g, d) && girth(&g).is_none_or(|c| c >= 5));
    Ok(g)
}

fn is_almost_regular(g: &Graph, d: usize) -> bool {
    let short = g.degrees().iter().filter(|&&x| x + 1 == d).count();
    g.degrees().iter().all(|&x| x == d || x + 1 == d) && short == (g.order() * d) % 2
}

fn random_search(n: usize, d: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![0u64; n];
    let goal_deficit = (n * d) % 2;
    for _ in 0..MAX_STEPS {
        let deficient: Vec<usize> = (0..n).filter(|&v| (rows[v].count_ones() as usize) < d).collect();
        let deficit: usize = deficient.iter().map(|&v| d - rows[v].count_ones() as usize).sum();
        if deficit == goal_deficit {
            return Graph::from_rows(rows);
        }
        let u = *deficient.choose(&mut rng).expect("deficit is positive");
        let far = !ball3(&rows, u) & crate::bits::low_mask(n);
        let open: Vec<usize> = deficient.iter().copied().filter(|&v| far & bit(v) != 0).collect();
        if let Some(&v) = open.choose(&mut rng) {
            rows[u] |= bit(v);
            rows[v] |= bit(u);
            continue;
        }
        // Swap: steal an edge from a saturated far vertex, or drop a random edge.
        let far: Vec<usize> = bits(far).collect();
        if let Some(&x) = far.choose(&mut rng) {
            let nbrs: Vec<usize> = bits(rows[x]).collect();
            if let Some(&y) = nbrs.choose(&mut rng) {
                rows[x] &= !bit(y);
                rows[y] &= !bit(x);
            }
            rows[u] |= bit(x);
            rows[x] |= bit(u);
            continue;
        }
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| bits(rows[a]).filter(move |&b| b > a).map(move |b| (a, b))).collect();
        if !edges.is_empty() {
            let (a, b) = edges[rng.gen_range(0..edges.len())];
            rows[a] &= !bit(b);
            rows[b] &= !bit(a);
        }
    }
    Err(Error::Infeasible(format!(
        "no almost {d}-regular girth-5 graph on {n} vertices found within {MAX_STEPS} steps (seed {seed})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&named::cycle(5)), Some(5));
        assert_eq!(girth(&named::petersen()), Some(5));
        assert_eq!(girth(&Graph::complete(4).unwrap()), Some(3));
        assert_eq!(girth(&named::complete_bipartite(2, 3)), Some(4));
        assert_eq!(girth(&named::path(6)), None);
        assert_eq!(girth(&named::cycle(9)), Some(9));
    }

    #[test]
    fn library_cases() {
        assert_eq!(build_girth5_regular(5, 2, 0).unwrap(), named::cycle(5));
        assert_eq!(build_girth5_regular(7, 2, 0).unwrap(), named::cycle(7));
        assert_eq!(build_girth5_regular(10, 3, 0).unwrap(), named::petersen());
        let m = build_girth5_regular(5, 1, 0).unwrap();
        assert_eq!(m.edge_count(), 2);
    }

    #[test]
    fn random_cases_are_valid_and_deterministic() {
        for (n, d) in [(11, 3), (16, 3), (20, 4), (25, 4), (40, 5), (30, 3)] {
            let g = build_girth5_regular(n, d, 7).unwrap();
            assert!(is_almost_regular(&g, d), "n={n} d={d}");
            assert!(girth(&g).is_none_or(|c| c >= 5), "n={n} d={d}");
            assert_eq!(g, build_girth5_regular(n, d, 7).unwrap());
        }
    }

    #[test]
    fn infeasible_orders_are_errors() {
        assert!(matches!(build_girth5_regular(9, 3, 0), Err(Error::Infeasible(_))));
        assert!(build_girth5_regular(4, 2, 0).is_err());
        assert!(build_girth5_regular(6, 0, 0).is_err());
    }
}

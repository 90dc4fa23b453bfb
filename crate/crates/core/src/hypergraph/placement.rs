//! Placing one `K_{a,b}` inside every hyperedge.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::berge::{contains_berge_graph, BergeMode};
use super::Hypergraph;
use crate::bits::{bits, checked_binomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::MultipartitePattern;
use crate::subgraph::contains_complete_bipartite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlacementRule {
    /// The `a` smallest vertices of each hyperedge form the small side.
    LowestLex,
    /// Each hyperedge's vertices are shuffled by a generator seeded once.
    SeededRandom(u64),
}

pub fn place_bipartite(h: &Hypergraph, a: usize, b: usize, rule: PlacementRule) -> Result<Graph> {
    if a == 0 || a > b || a + b != h.uniformity() {
        return Err(Error::pre(format!(
            "need 1 <= a <= b with a + b = r, got a={a}, b={b}, r={}",
            h.uniformity()
        )));
    }
    let mut rng = match rule {
        PlacementRule::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        PlacementRule::LowestLex => None,
    };
    let mut edges = Vec::with_capacity(h.edge_count() * a * b);
    for &e in h.edges() {
        let mut vs: Vec<usize> = bits(e).collect();
        if let Some(rng) = rng.as_mut() {
            vs.shuffle(rng);
        }
        let (small, large) = vs.split_at(a);
        for &u in small {
            for &v in large {
                edges.push((u, v));
            }
        }
    }
    Graph::new(h.order(), &edges)
}

/// `(a+b-2) C(s,2) + (a+b-1)^s p`.
pub fn berge_threshold(s: usize, p: usize, a: usize, b: usize) -> Result<u128> {
    let r = (a + b) as u128;
    let pair = checked_binomial(s as u64, 2).ok_or(Error::Overflow("threshold"))?;
    (r - 1)
        .checked_pow(s as u32)
        .and_then(|x| x.checked_mul(p as u128))
        .and_then(|x| x.checked_add((r - 2) * pair))
        .ok_or(Error::Overflow("threshold"))
}

/// `(p-1) s (s-1) (a+b-2)^2 + (a+b-2) C(s,2) + 1`.
pub fn expansion_threshold(s: usize, p: usize, a: usize, b: usize) -> Result<u128> {
    let r2 = (a + b - 2) as u128;
    let (s, p) = (s as u128, p as u128);
    Ok((p - 1) * s * (s - 1) * r2 * r2 + r2 * (s * (s - 1) / 2) + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementReport {
    pub mode: BergeMode,
    pub linear: bool,
    /// The forbidden Berge-`K_{s,p}` (or its expansion) is absent.
    pub pattern_absent: bool,
    pub premises_hold: bool,
    pub t0: u128,
    /// The lowest-lex placement contains no `K_{s,t0}`.
    pub placed_free: bool,
}

pub fn check_placement_premises(
    h: &Hypergraph,
    s: usize,
    p: usize,
    a: usize,
    b: usize,
    mode: BergeMode,
) -> Result<PlacementReport> {
    if !(2 <= s && s < a && a <= b && p >= s) {
        return Err(Error::pre(format!("need 2 <= s < a <= b and p >= s, got s={s}, p={p}, a={a}, b={b}")));
    }
    let linear = h.is_linear();
    let forbidden = MultipartitePattern::bipartite(s, p)?.to_graph();
    let pattern_absent = !contains_berge_graph(h, &forbidden, mode);
    let t0 = match mode {
        BergeMode::Berge => berge_threshold(s, p, a, b)?,
        BergeMode::Expansion => expansion_threshold(s, p, a, b)?,
    };
    let g = place_bipartite(h, a, b, PlacementRule::LowestLex)?;
    let placed_free = match usize::try_from(t0) {
        Ok(t) if s + t <= g.order() => !contains_complete_bipartite(&g, s, t)?,
        _ => true,
    };
    Ok(PlacementReport { mode, linear, pattern_absent, premises_hold: linear && pattern_absent, t0, placed_free })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges[0].len(), &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn single_edge_placement() {
        let g = place_bipartite(&h(5, &[&[0, 1, 2, 3, 4]]), 2, 3, PlacementRule::LowestLex).unwrap();
        assert_eq!(g, named::complete_bipartite(2, 3));
        assert!(place_bipartite(&h(5, &[&[0, 1, 2, 3, 4]]), 2, 2, PlacementRule::LowestLex).is_err());
    }

    #[test]
    fn seeded_rule_is_deterministic() {
        let hg = h(10, &[&[0, 1, 2, 3], &[3, 4, 5, 6], &[6, 7, 8, 9]]);
        let g = place_bipartite(&hg, 2, 2, PlacementRule::SeededRandom(3)).unwrap();
        assert_eq!(g, place_bipartite(&hg, 2, 2, PlacementRule::SeededRandom(3)).unwrap());
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(berge_threshold(2, 2, 3, 3).unwrap(), 54);
        assert_eq!(expansion_threshold(2, 2, 3, 3).unwrap(), 2 * 16 + 4 + 1);
    }

    #[test]
    fn premise_reports() {
        let disjoint = h(12, &[&[0, 1, 2, 3, 4, 5], &[6, 7, 8, 9, 10, 11]]);
        let r = check_placement_premises(&disjoint, 2, 2, 3, 3, BergeMode::Berge).unwrap();
        assert!(r.premises_hold && r.placed_free);
        assert_eq!(r.t0, 54);
        // Four 6-sets pairwise meeting along a 4-cycle pattern: Berge-C4.
        let c4 = h(
            20,
            &[&[0, 1, 4, 5, 6, 7], &[1, 2, 8, 9, 10, 11], &[2, 3, 12, 13, 14, 15], &[3, 0, 16, 17, 18, 19]],
        );
        let r = check_placement_premises(&c4, 2, 2, 3, 3, BergeMode::Berge).unwrap();
        assert!(r.linear && !r.pattern_absent && !r.premises_hold);
        assert!(check_placement_premises(&c4, 3, 2, 3, 3, BergeMode::Berge).is_err());
    }
}

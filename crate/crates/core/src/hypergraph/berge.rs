//! Berge copies and expansions of a graph inside a hypergraph.
//!
//! Pattern vertices are mapped one at a time (most constrained first); each
//! partial map must admit an injective assignment of the fully mapped pattern
//! edges to distinct hyperedges containing them, checked by bipartite matching.

use serde::{Deserialize, Serialize};

use super::Hypergraph;
use crate::bits::{bit, bits};
use crate::graph::Graph;
use crate::pattern::MultipartitePattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BergeMode {
    /// Each pattern edge lies in a distinct hyperedge.
    Berge,
    /// Additionally, images of two edges meet exactly in the images of their
    /// common vertices, and no image meets the core outside its own edge.
    Expansion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeQuery {
    pub pattern: MultipartitePattern,
    pub mode: BergeMode,
}

pub fn contains_berge(h: &Hypergraph, query: &BergeQuery) -> bool {
    contains_berge_graph(h, &query.pattern.to_graph(), query.mode)
}

/// Containment for an arbitrary pattern graph; isolated pattern vertices
/// only need distinct spare vertices.
pub fn contains_berge_graph(h: &Hypergraph, pattern: &Graph, mode: BergeMode) -> bool {
    let k = pattern.order();
    let edges: Vec<(usize, usize)> = pattern.edges().collect();
    if k > h.order() || edges.len() > h.edge_count() {
        return false;
    }
    let order = vertex_order(pattern);
    let mut search = Search {
        h,
        pattern,
        mode,
        shadow: h.shadow_rows(),
        edges,
        order,
        phi: vec![usize::MAX; k],
        used: 0,
    };
    search.extend(0)
}

/// Pattern vertices by decreasing number of already ordered neighbors, then
/// degree, then index.
fn vertex_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let v = (0..k)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((pattern.neighbors(v) & placed).count_ones(), pattern.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed |= bit(v);
        order.push(v);
    }
    order
}

struct Search<'a> {
    h: &'a Hypergraph,
    pattern: &'a Graph,
    mode: BergeMode,
    shadow: Vec<u64>,
    edges: Vec<(usize, usize)>,
    order: Vec<usize>,
    phi: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return match self.mode {
                BergeMode::Berge => true,
                BergeMode::Expansion => self.assign_expansion(),
            };
        }
        let v = self.order[depth];
        let need = self.pattern.degree(v);
        let mut cand = crate::bits::low_mask(self.h.order()) & !self.used;
        for w in bits(self.pattern.neighbors(v)) {
            if self.phi[w] != usize::MAX {
                cand &= self.shadow[self.phi[w]];
            }
        }
        for x in bits(cand) {
            if self.h.degree(x) < need {
                continue;
            }
            self.phi[v] = x;
            self.used |= bit(x);
            if self.matchable() && self.extend(depth + 1) {
                return true;
            }
            self.used &= !bit(x);
            self.phi[v] = usize::MAX;
        }
        false
    }

    /// Candidate hyperedges for pattern edge `(u, v)` under the current map.
    fn candidates(&self, u: usize, v: usize) -> Vec<usize> {
        let pair = bit(self.phi[u]) | bit(self.phi[v]);
        let core = self.used;
        self.h
            .edges()
            .iter()
            .enumerate()
            .filter(|&(_, &e)| {
                e & pair == pair && (self.mode == BergeMode::Berge || e & core == pair)
            })
            .map(|(i, _)| i)
            .collect()
    }

    fn mapped_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| self.phi[u] != usize::MAX && self.phi[v] != usize::MAX)
            .collect()
    }

    /// Whether the mapped pattern edges can take distinct hyperedges.
    fn matchable(&self) -> bool {
        let cands: Vec<Vec<usize>> = self.mapped_edges().iter().map(|&(u, v)| self.candidates(u, v)).collect();
        let mut owner = vec![usize::MAX; self.h.edge_count()];
        (0..cands.len()).all(|i| {
            let mut seen = vec![false; self.h.edge_count()];
            augment(i, &cands, &mut owner, &mut seen)
        })
    }

    fn assign_expansion(&self) -> bool {
        let edges = self.mapped_edges();
        let cands: Vec<Vec<usize>> = edges.iter().map(|&(u, v)| self.candidates(u, v)).collect();
        let mut chosen = Vec::with_capacity(edges.len());
        self.assign_from(0, &edges, &cands, &mut chosen)
    }

    fn assign_from(&self, i: usize, edges: &[(usize, usize)], cands: &[Vec<usize>], chosen: &mut Vec<usize>) -> bool {
        if i == edges.len() {
            return true;
        }
        let (u, v) = edges[i];
        for &c in &cands[i] {
            let e = self.h.edges()[c];
            let ok = chosen.iter().zip(edges).all(|(&d, &(x, y))| {
                let shared = [u, v]
                    .iter()
                    .filter(|&&w| w == x || w == y)
                    .fold(0u64, |m, &w| m | bit(self.phi[w]));
                d != c && e & self.h.edges()[d] == shared
            });
            if ok {
                chosen.push(c);
                if self.assign_from(i + 1, edges, cands, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

fn augment(i: usize, cands: &[Vec<usize>], owner: &mut [usize], seen: &mut [bool]) -> bool {
    for &c in &cands[i] {
        if seen[c] {
            continue;
        }
        seen[c] = true;
        if owner[c] == usize::MAX || augment(owner[c], cands, owner, seen) {
            owner[c] = i;
            return true;
        }
    }
    false
}

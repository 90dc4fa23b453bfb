//! Containment of complete multipartite patterns.
//!
//! A copy is found part by part: the candidates for each part are the common
//! neighbors of every vertex already placed, so intra-part adjacency is never
//! required or forbidden (copies are not necessarily induced).

use crate::bits::{bit, bits, low_mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::MultipartitePattern;

/// True iff some `s`-set has at least `t` common neighbors, i.e. `G` contains
/// `K_{s,t}` as a subgraph.
pub fn contains_complete_bipartite(g: &Graph, s: usize, t: usize) -> Result<bool> {
    if s == 0 || s > t {
        return Err(Error::pre(format!("need 1 <= s <= t, got s={s}, t={t}")));
    }
    if s + t > g.order() {
        return Ok(false);
    }
    let pattern = MultipartitePattern::bipartite(s, t)?;
    Ok(find_copy(g, &pattern, None).is_some())
}

pub fn contains_pattern(g: &Graph, pattern: &MultipartitePattern) -> bool {
    find_copy(g, pattern, None).is_some()
}

/// True iff some copy of `pattern` uses vertex `v`.
pub fn contains_pattern_through(g: &Graph, pattern: &MultipartitePattern, v: usize) -> bool {
    find_copy(g, pattern, Some(v)).is_some()
}

/// Finds a copy of `pattern`, optionally one that contains `anchor`.
///
/// Returns one vertex mask per part, in the pattern's (sorted) part order.
/// The search order is fixed, so the result is deterministic.
pub fn find_copy(g: &Graph, pattern: &MultipartitePattern, anchor: Option<usize>) -> Option<Vec<u64>> {
    if pattern.order() > g.order() {
        return None;
    }
    let parts = pattern.parts();
    match anchor {
        None => {
            let mut chosen = Vec::with_capacity(parts.len());
            let order: Vec<usize> = (0..parts.len()).collect();
            let mut search = CopySearch { g, parts, order: &order, chosen: &mut chosen };
            search.place(0, g.vertex_mask(), None).then(|| chosen_in_order(&order, &chosen))
        }
        Some(v) => {
            if v >= g.order() {
                return None;
            }
            // Try the anchor in each distinct part size.
            let mut tried = Vec::new();
            for (i, &size) in parts.iter().enumerate() {
                if tried.contains(&size) {
                    continue;
                }
                tried.push(size);
                let mut order = vec![i];
                order.extend((0..parts.len()).filter(|&j| j != i));
                let mut chosen = Vec::with_capacity(parts.len());
                let mut search = CopySearch { g, parts, order: &order, chosen: &mut chosen };
                if search.place(0, g.vertex_mask(), Some(v)) {
                    return Some(chosen_in_order(&order, &chosen));
                }
            }
            None
        }
    }
}

fn chosen_in_order(order: &[usize], chosen: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; order.len()];
    for (&idx, &mask) in order.iter().zip(chosen) {
        out[idx] = mask;
    }
    out
}

struct CopySearch<'a> {
    g: &'a Graph,
    parts: &'a [usize],
    order: &'a [usize],
    chosen: &'a mut Vec<u64>,
}

impl CopySearch<'_> {
    /// Places part `level` (in `order`) inside `cand`.
    fn place(&mut self, level: usize, cand: u64, anchor: Option<usize>) -> bool {
        let size = self.parts[self.order[level]];
        let after: usize = self.order[level + 1..].iter().map(|&i| self.parts[i]).sum();
        if level + 1 == self.order.len() {
            if cand.count_ones() as usize >= size {
                let mut rest = cand;
                let mut mask = 0u64;
                for _ in 0..size {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    mask |= bit(v);
                }
                self.chosen.push(mask);
                return true;
            }
            return false;
        }
        match anchor {
            Some(v) => {
                if cand & bit(v) == 0 {
                    return false;
                }
                let next = cand & self.g.neighbors(v);
                self.grow(level, bit(v), size - 1, cand & !bit(v), next, after)
            }
            None => self.grow(level, 0, size, cand, cand, after),
        }
    }

    /// Adds `need` more members to the current part from `pool`, keeping
    /// `common` = candidates adjacent to every member so far.
    fn grow(&mut self, level: usize, part: u64, need: usize, pool: u64, common: u64, after: usize) -> bool {
        if (common.count_ones() as usize) < after {
            return false;
        }
        if need == 0 {
            self.chosen.push(part);
            if self.place(level + 1, common, None) {
                return true;
            }
            self.chosen.pop();
            return false;
        }
        let mut rest = pool;
        while rest.count_ones() as usize >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = common & self.g.neighbors(v);
            if (next.count_ones() as usize) < after {
                continue;
            }
            if self.grow(level, part | bit(v), need - 1, rest, next, after) {
                return true;
            }
        }
        false
    }
}

/// True iff there are `s - 1` vertices each adjacent to all other
/// `n - s + 1` vertices (a spanning `K_{s-1,n-s+1}`); with `closed`, those
/// vertices must also be pairwise adjacent.
pub fn contains_spanning_split(g: &Graph, s: usize, closed: bool) -> Result<bool> {
    let n = g.order();
    if s < 2 || s > n {
        return Err(Error::pre(format!("need 2 <= s <= n, got s={s}, n={n}")));
    }
    Ok(find_spanning_split(g, s, closed).is_some())
}

/// The lexicographically first `(s-1)`-set witnessing [`contains_spanning_split`].
pub fn find_spanning_split(g: &Graph, s: usize, closed: bool) -> Option<u64> {
    let n = g.order();
    if s < 2 || s > n {
        return None;
    }
    let need = n - s + 1;
    let min_degree = if closed { n - 1 } else { need };
    let pool = (0..n).filter(|&v| g.degree(v) >= min_degree).fold(0u64, |m, v| m | bit(v));
    fn rec(g: &Graph, pool: u64, k: usize, set: u64, common: u64, need: usize, closed: bool) -> Option<u64> {
        if (common.count_ones() as usize) < need {
            return None;
        }
        if k == 0 {
            return Some(set);
        }
        let mut rest = pool;
        while rest.count_ones() as usize >= k {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if closed && g.neighbors(v) & set != set {
                continue;
            }
            if let Some(found) = rec(g, rest, k - 1, set | bit(v), common & g.neighbors(v), need, closed) {
                return Some(found);
            }
        }
        None
    }
    rec(g, pool, s - 1, 0, low_mask(n), need, closed)
}

/// Edges `(u, v)`, `u < v`, of the copy given by its part masks, sorted.
pub fn copy_edges(parts: &[u64]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        for &q in &parts[i + 1..] {
            for u in bits(p) {
                for v in bits(q) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
    }
    edges.sort_unstable();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn pat(s: &str) -> MultipartitePattern {
        s.parse().unwrap()
    }

    #[test]
    fn bipartite_containment_examples() {
        assert!(contains_complete_bipartite(&cycle(4), 2, 2).unwrap());
        assert!(!contains_complete_bipartite(&complete_bipartite(2, 2), 2, 3).unwrap());
        assert!(contains_complete_bipartite(&petersen(), 1, 3).unwrap());
        assert!(!contains_complete_bipartite(&petersen(), 1, 4).unwrap());
        assert!(!contains_complete_bipartite(&petersen(), 2, 2).unwrap());
        assert!(contains_complete_bipartite(&cycle(4), 0, 2).is_err());
        assert!(contains_complete_bipartite(&cycle(4), 3, 2).is_err());
    }

    #[test]
    fn found_copy_is_a_real_copy() {
        let g = Graph::complete(6).unwrap();
        let parts = find_copy(&g, &pat("1,2,3"), None).unwrap();
        assert_eq!(parts.iter().map(|p| p.count_ones()).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(parts.iter().fold(0, |a, p| a | p).count_ones(), 6);
        for (u, v) in copy_edges(&parts) {
            assert!(g.has_edge(u, v));
        }
    }

    #[test]
    fn anchored_search_respects_anchor() {
        // C4 on 0..4 plus an isolated vertex 4.
        let g = cycle(4).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let k22 = pat("2,2");
        assert!(contains_pattern_through(&g, &k22, 0));
        assert!(!contains_pattern_through(&g, &k22, 4));
        // Anchor in the larger part of K_{1,2}: path 0-1-2 through end vertex 2.
        let p = path(3);
        let parts = find_copy(&p, &pat("1,2"), Some(2)).unwrap();
        assert_eq!(parts, vec![0b010, 0b101]);
    }

    #[test]
    fn spanning_split_examples() {
        assert!(contains_spanning_split(&star(5), 2, false).unwrap());
        assert!(!contains_spanning_split(&cycle(5), 2, false).unwrap());
        // K_2 joined to an independent 3-set.
        let mut edges = vec![(0, 1)];
        for u in 0..2 {
            for v in 2..5 {
                edges.push((u, v));
            }
        }
        let split = Graph::new(5, &edges).unwrap();
        assert!(contains_spanning_split(&split, 3, true).unwrap());
        let open = split.without_edge(0, 1).unwrap();
        assert!(contains_spanning_split(&open, 3, false).unwrap());
        assert!(!contains_spanning_split(&open, 3, true).unwrap());
        assert!(contains_spanning_split(&open, 1, false).is_err());
    }
}

//! Uniform hypergraphs on at most 64 vertices, Berge cycles and containment,
//! girth-5 generation and biclique placement.

mod berge;
mod generate;
mod placement;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, bits, low_mask};
use crate::error::{Error, Result};
use crate::graph::{parse_numbers, MAX_VERTICES};

pub use berge::{contains_berge, contains_berge_graph, BergeMode, BergeQuery};
pub use generate::{generate_girth5_linear, MAX_CONSECUTIVE_FAILURES};
pub use placement::{
    berge_threshold, check_placement_premises, expansion_threshold, place_bipartite, PlacementReport, PlacementRule,
};

/// `r`-uniform hypergraph; edges are vertex masks kept in insertion order.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphJson { n: self.n, r: self.r, edges: self.edge_lists() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = HypergraphJson::deserialize(d)?;
        Hypergraph::new(j.n, j.r, &j.edges).map_err(serde::de::Error::custom)
    }
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, edges: &[Vec<usize>]) -> Result<Hypergraph> {
        let masks = edges
            .iter()
            .map(|e| {
                e.iter().try_fold(0u64, |m, &v| {
                    if v >= n {
                        Err(Error::VertexOutOfRange { vertex: v, n })
                    } else {
                        Ok(m | bit(v))
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::from_masks(n, r, masks)
    }

    pub fn from_masks(n: usize, r: usize, edges: Vec<u64>) -> Result<Hypergraph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        if r == 0 || r > n {
            return Err(Error::pre(format!("need 1 <= r <= n, got r={r}, n={n}")));
        }
        let mut seen = HashSet::new();
        for &e in &edges {
            if e & !low_mask(n) != 0 {
                return Err(Error::VertexOutOfRange { vertex: (e & !low_mask(n)).trailing_zeros() as usize, n });
            }
            if e.count_ones() as usize != r {
                return Err(Error::pre(format!("edge {:?} does not have {r} vertices", bits(e).collect::<Vec<_>>())));
            }
            if !seen.insert(e) {
                return Err(Error::pre(format!("duplicate edge {:?}", bits(e).collect::<Vec<_>>())));
            }
        }
        Ok(Hypergraph { n, r, edges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| bits(e).collect()).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&e| e & bit(v) != 0).count()
    }

    /// Shadow graph rows: `u ~ v` iff some edge contains both.
    pub fn shadow_rows(&self) -> Vec<u64> {
        let mut rows = vec![0u64; self.n];
        for &e in &self.edges {
            for v in bits(e) {
                rows[v] |= e & !bit(v);
            }
        }
        rows
    }

    /// Parses `r n m` followed by `m` lines of `r` vertex indices.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing `r n m` header".into() })?;
        let [r, n, m] = parse_numbers(hline, header)?[..] else {
            return Err(Error::Parse { line: hline, msg: "header must be `r n m`".into() });
        };
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let e = parse_numbers(line, l)?;
            if e.len() != r {
                return Err(Error::Parse { line, msg: format!("expected {r} vertices, found {}", e.len()) });
            }
            edges.push(e);
        }
        if edges.len() != m {
            return Err(Error::Parse { line: hline, msg: format!("header declares {m} edges, found {}", edges.len()) });
        }
        Hypergraph::new(n, r, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.r, self.n, self.edges.len());
        for e in self.edge_lists() {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn is_linear(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, &e)| self.edges[i + 1..].iter().all(|&f| (e & f).count_ones() <= 1))
    }

    /// Length of a shortest Berge cycle; `Some(2)` for non-linear input and
    /// `None` when there is no Berge cycle at all.
    pub fn berge_girth(&self) -> Option<usize> {
        if !self.is_linear() {
            return Some(2);
        }
        // Incidence graph: vertices 0..n, edges n..n+m. A Berge k-cycle is a
        // 2k-cycle there.
        let total = self.n + self.edges.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
        for (i, &e) in self.edges.iter().enumerate() {
            for v in bits(e) {
                adj[v].push(self.n + i);
                adj[self.n + i].push(v);
            }
        }
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for &v in &adj[u] {
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
        best.map(|len| len / 2)
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, r={}, edges={:?})", self.n, self.r, self.edge_lists())
    }
}

/// The Fano plane on points `0..7`.
pub fn fano() -> Hypergraph {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    let edges: Vec<Vec<usize>> = lines.iter().map(|l| l.to_vec()).collect();
    Hypergraph::new(7, 3, &edges).expect("fano plane")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        let r = edges.first().map_or(2, |e| e.len());
        Hypergraph::new(n, r, &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn linearity_examples() {
        assert!(h(5, &[&[0, 1, 2], &[2, 3, 4]]).is_linear());
        assert!(!h(4, &[&[0, 1, 2], &[0, 1, 3]]).is_linear());
        assert!(fano().is_linear());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(h(6, &[&[0, 1, 2], &[3, 4, 5]]).berge_girth(), None);
        assert_eq!(h(6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]).berge_girth(), Some(3));
        assert_eq!(fano().berge_girth(), Some(3));
        assert_eq!(h(4, &[&[0, 1, 2], &[0, 1, 3]]).berge_girth(), Some(2));
        // Berge 4-cycle 0-1-2-3 through four triples with private vertices.
        let c4 = h(8, &[&[0, 1, 4], &[1, 2, 5], &[2, 3, 6], &[3, 0, 7]]);
        assert_eq!(c4.berge_girth(), Some(4));
        // A graph is a 2-uniform hypergraph: Berge girth is the girth.
        let c5 = h(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]]);
        assert_eq!(c5.berge_girth(), Some(5));
    }

    #[test]
    fn validation_and_text_format() {
        assert!(Hypergraph::new(4, 3, &[vec![0, 1]]).is_err());
        assert!(Hypergraph::new(4, 2, &[vec![0, 4]]).is_err());
        assert!(Hypergraph::new(4, 2, &[vec![0, 1], vec![1, 0]]).is_err());
        let f = fano();
        let text = f.to_text();
        assert!(text.starts_with("3 7 7\n"));
        assert_eq!(Hypergraph::parse(&text).unwrap(), f);
        assert!(matches!(Hypergraph::parse("3 7 1\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(Hypergraph::parse("3 7 2\n0 1 2\n").is_err());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<Hypergraph>(&json).unwrap(), f);
    }
}

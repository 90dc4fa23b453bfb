//! Simple undirected graphs on at most 64 vertices, one `u64` adjacency row
//! per vertex.

use std::fmt;

use crate::bits::{bit, bits, low_mask};
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Immutable simple graph. Row `i` holds the neighbor set of vertex `i`.
///
/// Invariants: rows are symmetric, no self-loops, no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list, applying the symmetric closure.
    /// Repeated pairs are accepted and collapse to a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        Ok(Graph { n, rows })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let all = low_mask(n);
        let rows = (0..n).map(|v| all & !bit(v)).collect();
        Ok(Graph { n, rows })
    }

    /// Validates raw adjacency rows.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let all = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                let w = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::pre(format!("adjacency is not symmetric at ({v},{u})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Common neighborhood of a nonempty vertex set. Never intersects `set`.
    pub fn common_neighbors(&self, set: u64) -> Result<u64> {
        if set == 0 {
            return Err(Error::EmptySet);
        }
        if set & !self.vertex_mask() != 0 {
            let w = (set & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
        }
        Ok(self.common_neighbors_unchecked(set))
    }

    #[inline]
    pub(crate) fn common_neighbors_unchecked(&self, set: u64) -> u64 {
        bits(set).fold(self.vertex_mask(), |acc, v| acc & self.rows[v])
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut rows = self.rows.clone();
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        Ok(Graph { n: self.n, rows })
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut rows = self.rows.clone();
        rows[u] &= !bit(v);
        rows[v] &= !bit(u);
        Ok(Graph { n: self.n, rows })
    }

    /// Appends vertex `n` adjacent to exactly `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph> {
        check_order(self.n + 1)?;
        if neighbors & !self.vertex_mask() != 0 {
            let w = (neighbors & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
        }
        Ok(self.with_vertex_unchecked(neighbors))
    }

    pub(crate) fn with_vertex_unchecked(&self, neighbors: u64) -> Graph {
        let v = self.n;
        let mut rows = Vec::with_capacity(self.n + 1);
        rows.extend(self.rows.iter().enumerate().map(|(u, &r)| {
            if neighbors & bit(u) != 0 {
                r | bit(v)
            } else {
                r
            }
        }));
        rows.push(neighbors);
        Graph { n: v + 1, rows }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        if perm.len() != self.n {
            return Err(Error::pre("permutation length differs from graph order"));
        }
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::pre("not a permutation"));
            }
            seen |= bit(p);
        }
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= bit(perm[v]);
            rows[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph { n: self.n, rows })
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        check_order(self.n + other.n)?;
        let shift = self.n;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << shift));
        Ok(Graph { n: self.n + other.n, rows })
    }

    /// Subgraph induced on `mask`, relabeled to `0..popcount(mask)` in order.
    pub fn induced(&self, mask: u64) -> Result<Graph> {
        let kept: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        check_order(kept.len())?;
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let rows = kept
            .iter()
            .map(|&v| bits(self.rows[v] & mask).fold(0u64, |acc, u| acc | bit(index[u])))
            .collect();
        Ok(Graph { n: kept.len(), rows })
    }

    /// Parses the plain-text format: a header line `n m`, then `m` lines `u v`
    /// (0-indexed). Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing `n m` header".into() })?;
        let head = parse_numbers(hline, header)?;
        let [n, m] = head[..] else {
            return Err(Error::Parse { line: hline, msg: "header must be `n m`".into() });
        };
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let nums = parse_numbers(line, l)?;
            let [u, v] = nums[..] else {
                return Err(Error::Parse { line, msg: "expected `u v`".into() });
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::VertexCount(n))
    }
}

pub(crate) fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse { line, msg: format!("`{tok}` is not a nonnegative integer") })
        })
        .collect()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A few named graphs used across tests and examples.
pub mod named {
    use super::Graph;

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path")
    }

    /// `K_{m,k}` with the `m`-side on vertices `0..m`.
    pub fn complete_bipartite(m: usize, k: usize) -> Graph {
        let mut edges = Vec::with_capacity(m * k);
        for u in 0..m {
            for v in m..m + k {
                edges.push((u, v));
            }
        }
        Graph::new(m + k, &edges).expect("complete bipartite")
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::new(10, &edges).expect("petersen")
    }

    /// Hub `0` joined to a rim cycle on `1..=rim`.
    pub fn wheel(rim: usize) -> Graph {
        let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
        edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
        Graph::new(rim + 1, &edges).expect("wheel")
    }
}

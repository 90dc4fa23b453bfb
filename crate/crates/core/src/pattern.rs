use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{binomial, factorial};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Complete multipartite pattern `K_{a_1,...,a_r}` with `a_1 <= ... <= a_r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct MultipartitePattern {
    parts: Vec<usize>,
}

impl MultipartitePattern {
    /// Sorts the parts; requires at least two parts, all positive, total <= 64.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::Pattern(format!("need at least two parts, got {parts:?}")));
        }
        if parts.contains(&0) {
            return Err(Error::Pattern(format!("parts must be positive, got {parts:?}")));
        }
        if parts.iter().sum::<usize>() > MAX_VERTICES {
            return Err(Error::Pattern(format!("pattern {parts:?} has more than 64 vertices")));
        }
        parts.sort_unstable();
        Ok(MultipartitePattern { parts })
    }

    /// `K_{a,b}` (arguments in either order).
    pub fn bipartite(a: usize, b: usize) -> Result<Self> {
        Self::new(vec![a, b])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_bipartite(&self) -> bool {
        self.parts.len() == 2
    }

    /// `(a, b)` with `a <= b` for a bipartite pattern.
    pub fn as_bipartite(&self) -> Option<(usize, usize)> {
        match self.parts[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn edge_count(&self) -> usize {
        let total = self.order();
        let squares: usize = self.parts.iter().map(|p| p * p).sum();
        (total * total - squares) / 2
    }

    /// `prod_k m_k!` where `m_k` is the number of parts of size `k`.
    pub fn part_symmetry(&self) -> u128 {
        let mut acc = 1u128;
        let mut i = 0;
        while i < self.parts.len() {
            let j = self.parts[i..].iter().take_while(|&&p| p == self.parts[i]).count();
            acc *= factorial(j as u64);
            i += j;
        }
        acc
    }

    /// Number of copies of the pattern on a fixed labeled vertex set of its order.
    pub fn labelings_on_vertex_set(&self) -> u128 {
        let mut remaining = self.order() as u64;
        let mut acc = 1u128;
        for &p in &self.parts {
            acc *= binomial(remaining, p as u64);
            remaining -= p as u64;
        }
        acc / self.part_symmetry()
    }

    /// The pattern as a graph, parts laid out consecutively.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.edge_count());
        let mut starts = Vec::with_capacity(self.parts.len());
        let mut at = 0;
        for &p in &self.parts {
            starts.push(at);
            at += p;
        }
        for (i, (&si, &pi)) in starts.iter().zip(&self.parts).enumerate() {
            for (&sj, &pj) in starts.iter().zip(&self.parts).skip(i + 1) {
                for u in si..si + pi {
                    for v in sj..sj + pj {
                        edges.push((u, v));
                    }
                }
            }
        }
        Graph::new(self.order(), &edges).expect("pattern graph")
    }
}

impl TryFrom<Vec<usize>> for MultipartitePattern {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        MultipartitePattern::new(parts)
    }
}

impl From<MultipartitePattern> for Vec<usize> {
    fn from(p: MultipartitePattern) -> Vec<usize> {
        p.parts
    }
}

/// Parses comma-separated part sizes, e.g. `"2,3"` for `K_{2,3}`.
impl FromStr for MultipartitePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Pattern(format!("`{tok}` is not a part size in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultipartitePattern::new(parts)
    }
}

impl fmt::Display for MultipartitePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "K_{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for MultipartitePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

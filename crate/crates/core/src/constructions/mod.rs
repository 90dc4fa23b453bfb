//! Builders for the extremal and lower-bound constructions.
//!
//! Vertex numbering: the special side (small side, clique side, join side)
//! always takes the lowest indices.

mod field;
mod girth5;
mod random;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::pattern::MultipartitePattern;

pub use field::{prime_power, Field};
pub(crate) use girth5::ball3;
pub use girth5::{build_girth5_regular, girth, girth5_min, MAX_STEPS};
pub use random::{build_random_deletion, deletion_probability, DELETION_C};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `[m, k]`: `K_{m,k}`, the `m`-side on `0..m`.
    CompleteBipartite,
    /// `[s, n]`: `K_{s-1,n-s+1}` plus a clique on the `s - 1` side.
    OverlineSplit,
    /// `[s, t, n]`: overline split with an almost `(t-1)`-regular girth-5
    /// graph on the large side.
    SplitPlusGirth5,
    /// `[t, n]`: `floor(n/(2t-2))` copies of `K_{t-1,t-1}` plus a balanced
    /// biclique on the remaining vertices.
    DisjointBicliques,
    /// `[s, p, q, n]`: overline split with disjoint `K_{p,q}` in the large side.
    OverlinePlusDisjointBicliques,
    /// `[a, b, n]`: `K_{a,n-a}` with disjoint `K_{a,b-a}` in the large side.
    KaJoinBlocks,
    /// `[a, b, t, n]`: `K_{a,n-a}` with `K_{a-q,q}` inside the small side and
    /// disjoint `K_{q,b-q}` in the large side, `q = floor((t-1)/2)`.
    KaJoinBlocksShifted,
    /// `[q, t]`: see [`build_furedi`].
    Furedi,
    /// `[n, d]`: see [`build_girth5_regular`].
    AlmostRegularGirth5,
    /// `[n, r_h, h_1..h_{r_h}, f_1..f_r]`: see [`build_random_deletion`].
    RandomDeletion,
    /// Part sizes, parts laid out consecutively in sorted order.
    CompleteMultipartite,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub params: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ConstructionSpec {
    pub fn new(family: Family, params: &[usize]) -> Self {
        ConstructionSpec { family, params: params.to_vec(), seed: None }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    fn expect_params(&self, names: &[&str]) -> Result<()> {
        if self.params.len() != names.len() {
            return Err(Error::pre(format!(
                "{:?} takes params [{}], got {:?}",
                self.family,
                names.join(", "),
                self.params
            )));
        }
        Ok(())
    }

    /// A pattern the built graph is guaranteed to avoid, when the parameters
    /// determine one.
    pub fn freeness_claim(&self) -> Option<MultipartitePattern> {
        let p = &self.params;
        let k = |s: usize, t: usize| MultipartitePattern::bipartite(s, t).ok();
        match self.family {
            Family::CompleteBipartite => k(p[0].min(p[1]) + 1, p[0].min(p[1]) + 1),
            Family::OverlineSplit => k(p[0], p[0]),
            Family::SplitPlusGirth5 => k(p[0], p[1]),
            Family::DisjointBicliques => k(1, p[0]),
            Family::OverlinePlusDisjointBicliques => k(p[0], p[0].max(p[1] + p[2])),
            Family::Furedi => k(2, p[1]),
            Family::AlmostRegularGirth5 => k(2, 2),
            Family::RandomDeletion => split_random_params(p).ok().map(|(_, _, f)| f),
            Family::KaJoinBlocks | Family::KaJoinBlocksShifted | Family::CompleteMultipartite => None,
        }
    }
}

fn split_random_params(p: &[usize]) -> Result<(usize, MultipartitePattern, MultipartitePattern)> {
    let bad = || Error::pre(format!("random_deletion takes [n, r_h, h parts.., f parts..], got {p:?}"));
    let (&n, rest) = p.split_first().ok_or_else(bad)?;
    let (&rh, rest) = rest.split_first().ok_or_else(bad)?;
    if rest.len() < rh {
        return Err(bad());
    }
    let h = MultipartitePattern::new(rest[..rh].to_vec())?;
    let f = MultipartitePattern::new(rest[rh..].to_vec())?;
    Ok((n, h, f))
}

/// Builds the graph described by `spec`.
pub fn build(spec: &ConstructionSpec) -> Result<Graph> {
    let p = &spec.params;
    let seed = spec.seed.unwrap_or(0);
    match spec.family {
        Family::CompleteBipartite => {
            spec.expect_params(&["m", "k"])?;
            complete_bipartite(p[0], p[1])
        }
        Family::OverlineSplit => {
            spec.expect_params(&["s", "n"])?;
            overline_split(p[0], p[1])
        }
        Family::SplitPlusGirth5 => {
            spec.expect_params(&["s", "t", "n"])?;
            split_plus_girth5(p[0], p[1], p[2], seed)
        }
        Family::DisjointBicliques => {
            spec.expect_params(&["t", "n"])?;
            disjoint_bicliques(p[0], p[1])
        }
        Family::OverlinePlusDisjointBicliques => {
            spec.expect_params(&["s", "p", "q", "n"])?;
            overline_plus_disjoint_bicliques(p[0], p[1], p[2], p[3])
        }
        Family::KaJoinBlocks => {
            spec.expect_params(&["a", "b", "n"])?;
            ka_join_blocks(p[0], p[1], p[2])
        }
        Family::KaJoinBlocksShifted => {
            spec.expect_params(&["a", "b", "t", "n"])?;
            ka_join_blocks_shifted(p[0], p[1], p[2], p[3])
        }
        Family::Furedi => {
            spec.expect_params(&["q", "t"])?;
            build_furedi(FurediParams { q: p[0], t: p[1] })
        }
        Family::AlmostRegularGirth5 => {
            spec.expect_params(&["n", "d"])?;
            build_girth5_regular(p[0], p[1], seed)
        }
        Family::RandomDeletion => {
            let (n, h, f) = split_random_params(p)?;
            build_random_deletion(n, &h, &f, seed)
        }
        Family::CompleteMultipartite => Ok(MultipartitePattern::new(p.clone())?.to_graph()),
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    Ok(())
}

/// Adds the complete bipartite graph between `left` and `right` to `edges`.
fn join(edges: &mut Vec<(usize, usize)>, left: std::ops::Range<usize>, right: std::ops::Range<usize>) {
    for u in left {
        for v in right.clone() {
            edges.push((u, v));
        }
    }
}

fn clique(edges: &mut Vec<(usize, usize)>, vs: std::ops::Range<usize>) {
    for u in vs.clone() {
        for v in u + 1..vs.end {
            edges.push((u, v));
        }
    }
}

/// Places `count` disjoint `K_{p,q}` blocks starting at vertex `start`,
/// each block's `p`-side first.
fn blocks(edges: &mut Vec<(usize, usize)>, start: usize, count: usize, p: usize, q: usize) {
    for i in 0..count {
        let base = start + i * (p + q);
        join(edges, base..base + p, base + p..base + p + q);
    }
}

pub fn complete_bipartite(m: usize, k: usize) -> Result<Graph> {
    check_order(m + k)?;
    let mut edges = Vec::new();
    join(&mut edges, 0..m, m..m + k);
    Graph::new(m + k, &edges)
}

fn overline_edges(s: usize, n: usize) -> Result<Vec<(usize, usize)>> {
    if s < 2 || s > n {
        return Err(Error::pre(format!("need 2 <= s <= n, got s={s}, n={n}")));
    }
    check_order(n)?;
    let mut edges = Vec::new();
    clique(&mut edges, 0..s - 1);
    join(&mut edges, 0..s - 1, s - 1..n);
    Ok(edges)
}

/// `K_{s-1,n-s+1}` with a clique on the small side `0..s-1`.
pub fn overline_split(s: usize, n: usize) -> Result<Graph> {
    Graph::new(n, &overline_edges(s, n)?)
}

/// [`overline_split`] plus an almost `(t-1)`-regular girth-5 graph on the
/// large side `s-1..n`.
pub fn split_plus_girth5(s: usize, t: usize, n: usize, seed: u64) -> Result<Graph> {
    if t < 2 {
        return Err(Error::pre(format!("need t >= 2, got t={t}")));
    }
    let mut edges = overline_edges(s, n)?;
    let big = n - s + 1;
    let g0 = build_girth5_regular(big, t - 1, seed)?;
    edges.extend(g0.edges().map(|(u, v)| (u + s - 1, v + s - 1)));
    Graph::new(n, &edges)
}

/// `floor(n/(2t-2))` disjoint `K_{t-1,t-1}` followed by `K_{floor(p/2),ceil(p/2)}`
/// on the `p` leftover vertices.
pub fn disjoint_bicliques(t: usize, n: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::pre(format!("need t >= 2, got t={t}")));
    }
    check_order(n)?;
    let size = 2 * t - 2;
    let count = n / size;
    let p = n - count * size;
    let mut edges = Vec::new();
    blocks(&mut edges, 0, count, t - 1, t - 1);
    blocks(&mut edges, count * size, 1, p / 2, p - p / 2);
    Graph::new(n, &edges)
}

/// [`overline_split`] with `floor((n-s+1)/(p+q))` disjoint `K_{p,q}` in the large side.
pub fn overline_plus_disjoint_bicliques(s: usize, p: usize, q: usize, n: usize) -> Result<Graph> {
    if p == 0 || p > q {
        return Err(Error::pre(format!("need 1 <= p <= q, got p={p}, q={q}")));
    }
    let mut edges = overline_edges(s, n)?;
    blocks(&mut edges, s - 1, (n - s + 1) / (p + q), p, q);
    Graph::new(n, &edges)
}

/// `K_{a,n-a}` (small side `0..a`) with `floor((n-a)/b)` disjoint
/// `K_{a,b-a}` inside the large side.
pub fn ka_join_blocks(a: usize, b: usize, n: usize) -> Result<Graph> {
    if a == 0 || a >= b || a + b > n {
        return Err(Error::pre(format!("need 1 <= a < b and a + b <= n, got a={a}, b={b}, n={n}")));
    }
    check_order(n)?;
    let mut edges = Vec::new();
    join(&mut edges, 0..a, a..n);
    blocks(&mut edges, a, (n - a) / b, a, b - a);
    Graph::new(n, &edges)
}

/// `K_{a,n-a}` with `K_{a-q,q}` inside the small side and `floor((n-a)/b)`
/// disjoint `K_{q,b-q}` inside the large side, `q = floor((t-1)/2)`.
pub fn ka_join_blocks_shifted(a: usize, b: usize, t: usize, n: usize) -> Result<Graph> {
    let q = t.saturating_sub(1) / 2;
    if q == 0 || a <= q || b <= q || a + b > n {
        return Err(Error::pre(format!(
            "need floor((t-1)/2) >= 1, a and b above it, and a + b <= n; got a={a}, b={b}, t={t}, n={n}"
        )));
    }
    check_order(n)?;
    let mut edges = Vec::new();
    join(&mut edges, 0..a, a..n);
    join(&mut edges, 0..a - q, a - q..a);
    blocks(&mut edges, a, (n - a) / b, q, b - q);
    Graph::new(n, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FurediParams {
    pub q: usize,
    pub t: usize,
}

impl FurediParams {
    pub fn order(&self) -> usize {
        (self.q * self.q - 1) / (self.t - 1)
    }
}

/// Vertices are the orbits of `F_q^2 \ {0}` under scaling by the subgroup
/// `H` of order `t - 1`; orbits `<a,b>` and `<x,y>` are adjacent iff
/// `ax + by` lies in `H`. Loops are dropped. Orbits are numbered by their
/// smallest member `x * q + y`.
pub fn build_furedi(params: FurediParams) -> Result<Graph> {
    let FurediParams { q, t } = params;
    if prime_power(q).is_none() {
        return Err(Error::pre(format!("q = {q} is not a prime power")));
    }
    if t < 2 || (q - 1) % (t - 1) != 0 {
        return Err(Error::pre(format!("need t >= 2 and (t - 1) | (q - 1), got q={q}, t={t}")));
    }
    let n = params.order();
    if n > MAX_VERTICES {
        return Err(Error::pre(format!("(q^2 - 1)/(t - 1) = {n} exceeds 64 vertices")));
    }
    let f = Field::new(q)?;
    let h = f.subgroup(t - 1)?;
    let mut in_h = vec![false; q];
    for &x in &h {
        in_h[x] = true;
    }
    let mut orbit = vec![usize::MAX; q * q];
    let mut reps = Vec::with_capacity(n);
    for pair in 1..q * q {
        if orbit[pair] != usize::MAX {
            continue;
        }
        let (x, y) = (pair / q, pair % q);
        for &c in &h {
            orbit[f.mul(c, x) * q + f.mul(c, y)] = reps.len();
        }
        reps.push((x, y));
    }
    debug_assert_eq!(reps.len(), n);
    let mut edges = Vec::new();
    for (i, &(a, b)) in reps.iter().enumerate() {
        for (j, &(x, y)) in reps.iter().enumerate().skip(i + 1) {
            if in_h[f.add(f.mul(a, x), f.mul(b, y))] {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges)
}

//! Exact counts of complete bipartite and multipartite subgraph copies.
//!
//! Copies are unlabeled edge sets. For `K_{a,b}` the sum over `a`-sets `A` of
//! `C(|N(A)|, b)` counts each copy once when `a < b` and twice when `a = b`.
//! Multipartite counts enumerate ordered tuples of disjoint, pairwise
//! completely joined part sets and divide by `prod_k m_k!`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{binomial, bit};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::MultipartitePattern;

/// Graphs at least this large split the outermost loop across rayon workers.
const PARALLEL_ORDER: usize = 20;

/// Number of copies of `K_{a,b}`, `1 <= a <= b`.
pub fn count_bipartite(g: &Graph, a: usize, b: usize) -> Result<u128> {
    if a == 0 || a > b {
        return Err(Error::pre(format!("need 1 <= a <= b, got a={a}, b={b}")));
    }
    if a + b > g.order() {
        return Ok(0);
    }
    let ordered = sum_over_first_vertex(g, |v| {
        let mut total = 0u128;
        let rest = g.vertex_mask() & !crate::bits::low_mask(v + 1);
        subsets_with_common(g, rest, a - 1, bit(v), g.neighbors(v), b, &mut |_, common| {
            total += binomial(common.count_ones() as u64, b as u64);
        });
        total
    });
    Ok(if a == b { ordered / 2 } else { ordered })
}

/// Number of copies of an arbitrary complete multipartite pattern.
pub fn count_multipartite(g: &Graph, pattern: &MultipartitePattern) -> u128 {
    if pattern.order() > g.order() {
        return 0;
    }
    let parts = pattern.parts();
    let after: usize = parts[1..].iter().sum();
    let first = parts[0];
    let ordered = sum_over_first_vertex(g, |v| {
        let mut total = 0u128;
        // Part 0 is a `first`-set whose lowest element is `v`; other members
        // come from above `v`. Later parts may use any vertex.
        let rest = g.vertex_mask() & !crate::bits::low_mask(v + 1);
        subsets_with_common(g, rest, first - 1, bit(v), g.vertex_mask() & g.neighbors(v), after, &mut |_, common| {
            total += count_parts(g, parts, 1, common);
        });
        total
    });
    ordered / pattern.part_symmetry()
}

/// Dispatches to the bipartite counter when the pattern has two parts.
pub fn count_pattern(g: &Graph, pattern: &MultipartitePattern) -> u128 {
    match pattern.as_bipartite() {
        Some((a, b)) => count_bipartite(g, a, b).expect("pattern parts are sorted and positive"),
        None => count_multipartite(g, pattern),
    }
}

/// Copies of `K_{1,b}`: `sum_v C(deg v, b)` for `b >= 2`; `b = 1` is the edge count.
pub fn count_stars(g: &Graph, b: usize) -> Result<u128> {
    match b {
        0 => Err(Error::pre("star size b must be at least 1")),
        1 => count_bipartite(g, 1, 1),
        _ => Ok((0..g.order()).map(|v| binomial(g.degree(v) as u64, b as u64)).sum()),
    }
}

fn count_parts(g: &Graph, parts: &[usize], level: usize, cand: u64) -> u128 {
    let size = parts[level];
    if level + 1 == parts.len() {
        return binomial(cand.count_ones() as u64, size as u64);
    }
    let after: usize = parts[level + 1..].iter().sum();
    let mut total = 0u128;
    subsets_with_common(g, cand, size, 0, cand, after, &mut |_, common| {
        total += count_parts(g, parts, level + 1, common);
    });
    total
}

/// Visits every extension of `set` by `need` vertices from `pool` (taken in
/// increasing order), passing the extended set and `common` intersected with
/// the new members' rows. Branches where `common` drops below `min_common`
/// are skipped; they contribute nothing to any caller.
fn subsets_with_common(
    g: &Graph,
    pool: u64,
    need: usize,
    set: u64,
    common: u64,
    min_common: usize,
    f: &mut impl FnMut(u64, u64),
) {
    if (common.count_ones() as usize) < min_common {
        return;
    }
    if need == 0 {
        f(set, common);
        return;
    }
    let mut rest = pool;
    while rest.count_ones() as usize >= need {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        subsets_with_common(g, rest, need - 1, set | bit(v), common & g.neighbors(v), min_common, f);
    }
}

fn sum_over_first_vertex(g: &Graph, branch: impl Fn(usize) -> u128 + Sync) -> u128 {
    if g.order() >= PARALLEL_ORDER {
        (0..g.order()).into_par_iter().map(&branch).sum()
    } else {
        (0..g.order()).map(branch).sum()
    }
}

/// Histogram of `|N(S)|` over all `k`-sets `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborHistogram {
    pub subset_size: usize,
    pub histogram: BTreeMap<usize, u128>,
}

impl NeighborHistogram {
    pub fn total(&self) -> u128 {
        self.histogram.values().sum()
    }

    pub fn get(&self, size: usize) -> u128 {
        self.histogram.get(&size).copied().unwrap_or(0)
    }

    /// Fraction of `k`-sets with exactly `size` common neighbors.
    pub fn fraction(&self, size: usize) -> f64 {
        self.get(size) as f64 / self.total() as f64
    }
}

pub fn neighbor_histogram(g: &Graph, k: usize) -> Result<NeighborHistogram> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(Error::pre(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let mut histogram = BTreeMap::new();
    fn rec(g: &Graph, pool: u64, need: usize, common: u64, hist: &mut BTreeMap<usize, u128>) {
        if need == 0 {
            *hist.entry(common.count_ones() as usize).or_insert(0) += 1;
            return;
        }
        if common == 0 {
            // Every completion also has an empty common neighborhood.
            *hist.entry(0).or_insert(0) += binomial(pool.count_ones() as u64, need as u64);
            return;
        }
        let mut rest = pool;
        while rest.count_ones() as usize >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(g, rest, need - 1, common & g.neighbors(v), hist);
        }
    }
    rec(g, g.vertex_mask(), k, g.vertex_mask(), &mut histogram);
    histogram.retain(|_, c| *c > 0);
    Ok(NeighborHistogram { subset_size: k, histogram })
}

/// Partition of all `b`-sets by common-neighborhood size relative to `s - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSetClassification {
    pub b: usize,
    pub s: usize,
    /// `|N(B)| = s - 1`.
    pub good: u128,
    /// `|N(B)| <= s - 2`.
    pub bad: u128,
    /// `|N(B)| >= s`.
    pub over: u128,
}

pub fn classify_bsets(g: &Graph, b: usize, s: usize) -> Result<BSetClassification> {
    if b == 0 || s < 2 {
        return Err(Error::pre(format!("need b >= 1 and s >= 2, got b={b}, s={s}")));
    }
    let mut out = BSetClassification { b, s, good: 0, bad: 0, over: 0 };
    if b > g.order() {
        return Ok(out);
    }
    fn rec(g: &Graph, pool: u64, need: usize, common: u64, s: usize, out: &mut BSetClassification) {
        let size = common.count_ones() as usize;
        if size + 2 <= s {
            // Already bad; so is every completion.
            out.bad += binomial(pool.count_ones() as u64, need as u64);
            return;
        }
        if need == 0 {
            if size + 1 == s {
                out.good += 1;
            } else {
                out.over += 1;
            }
            return;
        }
        let mut rest = pool;
        while rest.count_ones() as usize >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(g, rest, need - 1, common & g.neighbors(v), s, out);
        }
    }
    rec(g, g.vertex_mask(), b, g.vertex_mask(), s, &mut out);
    Ok(out)
}

/// Closed form for the number of `K_{a,b}` copies in the host `K_{m,k}`.
pub fn closed_count_biclique_host(m: usize, k: usize, a: usize, b: usize) -> Result<u128> {
    if a == 0 || a > b {
        return Err(Error::pre(format!("need 1 <= a <= b, got a={a}, b={b}")));
    }
    let c = |x: usize, y: usize| binomial(x as u64, y as u64);
    Ok(if a == b {
        c(m, a) * c(k, a)
    } else {
        c(m, a) * c(k, b) + c(m, b) * c(k, a)
    })
}

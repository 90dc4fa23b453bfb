//! Canonical labeling by individualization-refinement.
//!
//! Every leaf of the search tree is a discrete ordered partition, i.e. a vertex
//! ordering; the canonical form is the minimum relabeled adjacency over all
//! leaves. The tree is pruned with automorphisms discovered when two leaves
//! produce the same relabeled graph: subtrees that are images of explored ones
//! are skipped (orbit pruning) or abandoned back to the common ancestor.
//! Pruning only ever removes subtrees equivalent to explored ones, so the
//! result is exact at every order.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{bit, bits};
use crate::graph::Graph;

/// Byte string equal for two graphs iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.bytes)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let bytes = hex::decode(&s).map_err(serde::de::Error::custom)?;
        Ok(CanonicalForm { bytes })
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    form_of(&canonical_graph(g))
}

/// `lab[i]` is the vertex placed at position `i` by the canonical ordering.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut search = Search::new(g);
    let root = initial_partition(g);
    search.node(root, 0);
    search.best.expect("search visits at least one leaf").lab
}

/// The canonically relabeled copy of `g`; equal for isomorphic inputs.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    Graph::from_rows_unchecked(relabeled_rows(g, &lab))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && {
            let mut dg = g.degrees();
            let mut dh = h.degrees();
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonical_graph(g) == canonical_graph(h)
}

/// Encodes an already-canonical graph; rows are packed little-endian.
pub(crate) fn form_of(canon: &Graph) -> CanonicalForm {
    let n = canon.order();
    let width = n.div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + n * width);
    bytes.push(n as u8);
    for &row in canon.rows() {
        bytes.extend_from_slice(&row.to_le_bytes()[..width]);
    }
    CanonicalForm { bytes }
}

fn relabeled_rows(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = g.order();
    let mut pos = [0usize; 64];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|i| bits(g.neighbors(lab[i])).fold(0u64, |acc, u| acc | bit(pos[u])))
        .collect()
}

fn initial_partition(g: &Graph) -> Vec<u64> {
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells, vec![g.vertex_mask()]);
    cells
}

/// Refines `cells` to the coarsest equitable partition finer than it,
/// splitting by neighbor counts into each queued splitter. Fragments keep the
/// position range of the cell they came from and are ordered by count.
fn refine(g: &Graph, cells: &mut Vec<u64>, mut queue: Vec<u64>) {
    let n = g.order();
    let mut head = 0;
    let mut counts = [0u32; 64];
    while head < queue.len() {
        if cells.len() == n {
            return;
        }
        let splitter = queue[head];
        head += 1;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() == 1 {
                i += 1;
                continue;
            }
            let mut lo = u32::MAX;
            let mut hi = 0;
            for v in bits(cell) {
                let c = (g.neighbors(v) & splitter).count_ones();
                counts[v] = c;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                i += 1;
                continue;
            }
            let mut keys: Vec<u32> = bits(cell).map(|v| counts[v]).collect();
            keys.sort_unstable();
            keys.dedup();
            let fragments: Vec<u64> = keys
                .iter()
                .map(|&k| bits(cell).filter(|&v| counts[v] == k).fold(0u64, |m, v| m | bit(v)))
                .collect();
            let len = fragments.len();
            queue.extend_from_slice(&fragments);
            cells.splice(i..=i, fragments);
            i += len;
        }
    }
}

struct Leaf {
    rows: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search { g, path: Vec::new(), first: None, best: None, automorphisms: Vec::new() }
    }

    /// Explores the node with partition `cells` at `depth`. Returns
    /// `Some(level)` to abandon the search back to the ancestor at `level`.
    fn node(&mut self, cells: Vec<u64>, depth: usize) -> Option<usize> {
        if cells.len() == self.g.order() {
            return self.leaf(&cells);
        }
        // First smallest non-singleton cell.
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored = 0u64;
        for v in bits(cell) {
            if explored != 0 && self.equivalent_to_explored(v, explored) {
                continue;
            }
            explored |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child, vec![bit(v)]);
            self.path.push(v);
            let jump = self.node(child, depth + 1);
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows = relabeled_rows(self.g, &lab);
        let leaf = Leaf { rows, lab, path: self.path.clone() };
        let Some(first) = &self.first else {
            self.best = Some(Leaf { rows: leaf.rows.clone(), lab: leaf.lab.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let level = common_prefix(&first.path, &leaf.path);
            let from = first.lab.clone();
            self.record_automorphism(&from, &leaf.lab);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let level = common_prefix(&best.path, &leaf.path);
                let from = best.lab.clone();
                self.record_automorphism(&from, &leaf.lab);
                Some(level)
            }
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Stores `gamma` with `gamma(from[i]) = to[i]`.
    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0usize; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        debug_assert!(self.g.permuted(&gamma).map(|h| &h == self.g).unwrap_or(false));
        self.automorphisms.push(gamma);
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix the current path pointwise.
    fn equivalent_to_explored(&self, v: usize, explored: u64) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if self.path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        bits(explored).any(|w| find(&mut parent, w) == rv)
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

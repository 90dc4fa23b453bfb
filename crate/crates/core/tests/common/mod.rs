//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's counting, containment, canonical or Berge code.

#![allow(dead_code)]

use rand::Rng;
use tnt::Graph;

/// Edges of the complete multipartite graph with the given part sizes,
/// parts laid out consecutively.
pub fn multipartite_edges(parts: &[usize]) -> (usize, Vec<(usize, usize)>) {
    let mut part_of = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let k = part_of.len();
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    (k, edges)
}

/// Calls `f` on every injective map `0..k -> 0..n`; stops when `f` returns true.
pub fn injective_maps(k: usize, n: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(img: &mut Vec<usize>, used: &mut [bool], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if img.len() == k {
            return f(img);
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                img.push(v);
                let stop = rec(img, used, k, f);
                img.pop();
                used[v] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    rec(&mut Vec::with_capacity(k), &mut vec![false; n], k, f)
}

fn is_embedding(g: &Graph, edges: &[(usize, usize)], img: &[usize]) -> bool {
    edges.iter().all(|&(u, v)| g.has_edge(img[u], img[v]))
}

/// Automorphisms of a small graph given by its edge list.
pub fn automorphisms(k: usize, edges: &[(usize, usize)]) -> u128 {
    let adj = |u: usize, v: usize| edges.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
    let mut count = 0;
    injective_maps(k, k, &mut |p| {
        if edges.iter().all(|&(u, v)| adj(p[u], p[v])) {
            count += 1;
        }
        false
    });
    count
}

/// Number of (not necessarily induced) copies of `K_{parts}` in `g`.
pub fn naive_count(g: &Graph, parts: &[usize]) -> u128 {
    let (k, edges) = multipartite_edges(parts);
    if k > g.order() {
        return 0;
    }
    let mut maps = 0u128;
    injective_maps(k, g.order(), &mut |img| {
        if is_embedding(g, &edges, img) {
            maps += 1;
        }
        false
    });
    maps / automorphisms(k, &edges)
}

pub fn naive_contains(g: &Graph, parts: &[usize]) -> bool {
    let (k, edges) = multipartite_edges(parts);
    k <= g.order() && injective_maps(k, g.order(), &mut |img| is_embedding(g, &edges, img))
}

/// Smallest adjacency bit string over all relabelings.
pub fn brute_canonical(g: &Graph) -> u64 {
    let n = g.order();
    let mut best = u64::MAX;
    injective_maps(n, n, &mut |p| {
        let mut code = 0u64;
        for v in 1..n {
            for u in 0..v {
                code = (code << 1) | g.has_edge(p[u], p[v]) as u64;
            }
        }
        best = best.min(code);
        false
    });
    best
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::new(n, &edges).unwrap()
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Berge copy of a pattern graph in a hypergraph given by vertex lists:
/// an injective vertex map plus distinct hyperedges containing each image
/// edge. With `expansion`, two images meet exactly in the images of the
/// shared pattern vertices and no image contains a core vertex outside its
/// own edge.
pub fn naive_berge(n: usize, hyperedges: &[Vec<usize>], k: usize, edges: &[(usize, usize)], expansion: bool) -> bool {
    if k > n || edges.len() > hyperedges.len() {
        return false;
    }
    injective_maps(k, n, &mut |phi| {
        let core: Vec<usize> = phi.to_vec();
        injective_maps(edges.len(), hyperedges.len(), &mut |psi| {
            let ok = edges.iter().zip(psi).all(|(&(u, v), &e)| {
                hyperedges[e].contains(&phi[u]) && hyperedges[e].contains(&phi[v])
            });
            if !ok || !expansion {
                return ok;
            }
            for (i, &(u, v)) in edges.iter().enumerate() {
                let e = &hyperedges[psi[i]];
                if core.iter().any(|c| e.contains(c) && *c != phi[u] && *c != phi[v]) {
                    return false;
                }
                for (j, &(x, y)) in edges.iter().enumerate().skip(i + 1) {
                    let f = &hyperedges[psi[j]];
                    let mut shared: Vec<usize> = e.iter().filter(|w| f.contains(w)).copied().collect();
                    let mut want: Vec<usize> =
                        [u, v].iter().filter(|w| [x, y].contains(w)).map(|&w| phi[w]).collect();
                    shared.sort_unstable();
                    want.sort_unstable();
                    if shared != want {
                        return false;
                    }
                }
            }
            true
        })
    })
}

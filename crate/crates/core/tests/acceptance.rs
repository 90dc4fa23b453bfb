//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tnt::bits::binomial;
use tnt::bounds::{bound_gemevi, bound_smallside, bound_star_per_vertex};
use tnt::canon::are_isomorphic;
use tnt::constructions::{build_furedi, disjoint_bicliques, split_plus_girth5, FurediParams};
use tnt::counting::{count_bipartite, count_multipartite, count_pattern, count_stars, neighbor_histogram};
use tnt::graph::named;
use tnt::graph6;
use tnt::hypergraph::{contains_berge, fano, generate_girth5_linear, place_bipartite, BergeMode, BergeQuery, Hypergraph, PlacementRule};
use tnt::search::{enumerate_extremal, exhaustive_max, free_graphs, SearchOptions};
use tnt::subgraph::{contains_complete_bipartite, contains_spanning_split};
use tnt::MultipartitePattern;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn k(a: usize, b: usize) -> MultipartitePattern {
    MultipartitePattern::bipartite(a, b).unwrap()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn star_turan() -> Outcome {
    let mut checked = 0;
    let mut below = Vec::new();
    for t in 2..=4 {
        for n in 2..=9 {
            let v = exhaustive_max(n, &k(1, 1), &k(1, t), &opts()).map_err(|e| e.to_string())?.value;
            let formula = ((t - 1) * n / 2) as u128;
            if n >= t {
                ensure(v == formula, || format!("t={t} n={n}: search {v}, formula {formula}"))?;
                checked += 1;
            } else {
                // The formula exceeds C(n,2) here; the complete graph is extremal.
                ensure(v == binomial(n as u64, 2), || format!("t={t} n={n}: search {v}"))?;
                if v != formula {
                    below.push(format!("(t={t},n={n}): {v} vs {formula}"));
                }
            }
        }
    }
    Ok(format!(
        "{checked} cases n in [t,9] match floor((t-1)n/2); below n = t the search gives C(n,2): {}",
        below.join(" ")
    ))
}

fn star_exact() -> Outcome {
    let mut values = Vec::new();
    for n in 4..=10 {
        let v = exhaustive_max(n, &k(2, 2), &k(1, 3), &opts()).map_err(|e| e.to_string())?.value;
        let reference = count_bipartite(&disjoint_bicliques(3, n).unwrap(), 2, 2).unwrap();
        ensure(v == reference, || format!("n={n}: search {v}, construction {reference}"))?;
        values.push(format!("{n}:{v}"));
    }
    let at = |n: usize| values[n - 4].clone();
    ensure(at(8) == "8:2" && at(10) == "10:2", || format!("expected n=8 -> 2, n=10 -> 2, got {values:?}"))?;
    Ok(format!("values {}", values.join(" ")))
}

fn stability() -> Outcome {
    let mut holds = Vec::new();
    let mut sizes = Vec::new();
    for n in 6..=9 {
        let certs = enumerate_extremal(n, &k(1, 3), &k(2, 2), &opts()).map_err(|e| e.to_string())?;
        let all = certs.iter().all(|c| contains_spanning_split(&graph6::decode(c).unwrap(), 2, false).unwrap());
        holds.push((n, all));
        sizes.push(format!("{n}:{}", certs.len()));
    }
    let n_star = holds.iter().rev().take_while(|(_, ok)| *ok).last().map(|&(n, _)| n);
    match n_star {
        Some(n) if n <= 9 => Ok(format!("n* = {n}; extremal graphs per n {}", sizes.join(" "))),
        _ => Err(format!("no threshold within [6,9]: {holds:?}")),
    }
}

fn stars_exact() -> Outcome {
    let r = exhaustive_max(6, &k(1, 4), &k(2, 3), &opts()).map_err(|e| e.to_string())?;
    let wheel = named::wheel(5);
    let g1 = split_plus_girth5(2, 3, 6, 0).map_err(|e| e.to_string())?;
    ensure(are_isomorphic(&g1, &wheel), || "G_1 at n = 6 is not the wheel".into())?;
    let stars = count_stars(&wheel, 4).unwrap();
    ensure(r.value == 5 && stars == 5, || format!("search {}, wheel stars {stars}", r.value))?;
    Ok("ex(6,K_{1,4},K_{2,3}) = 5 = stars in W_5".into())
}

fn random_pattern(rng: &mut ChaCha8Rng) -> Vec<usize> {
    loop {
        let r = rng.gen_range(2..=4);
        let parts: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        if parts.iter().sum::<usize>() <= 6 {
            return parts;
        }
    }
}

fn counting_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nonzero = 0;
    for i in 0..300 {
        let n = rng.gen_range(2..=8);
        let p_edge = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, n, p_edge);
        let parts = random_pattern(&mut rng);
        let p = MultipartitePattern::new(parts.clone()).unwrap();
        let naive = naive_count(&g, &parts);
        let fast = count_multipartite(&g, &p);
        ensure(fast == naive, || format!("instance {i}: {p} in {}: {fast} vs {naive}", graph6::encode(&g)))?;
        if let Some((a, b)) = p.as_bipartite() {
            let c = count_bipartite(&g, a, b).unwrap();
            ensure(c == naive, || format!("instance {i}: bipartite {p}: {c} vs {naive}"))?;
        }
        nonzero += usize::from(naive > 0);
    }
    Ok(format!("300 instances agree ({nonzero} with nonzero counts)"))
}

fn bound_soundness() -> Outcome {
    let mut checks = 0u64;
    for n in 2..=7 {
        for t in 1..=4 {
            for s in 1..=t {
                let graphs = free_graphs(n, &k(s, t), &opts()).map_err(|e| e.to_string())?;
                for g in &graphs {
                    for a in 1..=4 {
                        for b in a..=5 {
                            let c = count_bipartite(g, a, b).unwrap();
                            let mut check = |bound: u128, name: &str| -> Result<(), String> {
                                checks += 1;
                                ensure(c <= bound, || {
                                    format!("{name} violated: n={n} a={a} b={b} s={s} t={t} count {c} > {bound} on {}", graph6::encode(g))
                                })
                            };
                            if s <= a && b <= t {
                                check(bound_gemevi(n, a, b, s, t).unwrap(), "gemevi")?;
                            }
                            if a < s && s <= b {
                                check(bound_smallside(n, a, b, s, t).unwrap(), "smallside")?;
                            }
                            if s == 1 && b < t {
                                check(bound_star_per_vertex(n, a, b, t).unwrap(), "star_per_vertex")?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checks} bound evaluations, zero violations"))
}

fn furedi() -> Outcome {
    let small = build_furedi(FurediParams { q: 5, t: 3 }).map_err(|e| e.to_string())?;
    ensure(small.order() == 12, || format!("order {}", small.order()))?;
    ensure(!contains_complete_bipartite(&small, 2, 3).unwrap(), || "q=5 graph contains K_{2,3}".into())?;
    let mut report = vec!["q=5: 12 vertices, K_{2,3}-free".to_string()];
    for q in [9, 11] {
        let g = build_furedi(FurediParams { q, t: 3 }).map_err(|e| e.to_string())?;
        ensure(!contains_complete_bipartite(&g, 2, 3).unwrap(), || format!("q={q} graph contains K_{{2,3}}"))?;
        let frac = neighbor_histogram(&g, 2).unwrap().fraction(2);
        report.push(format!("q={q}: {} vertices, K_{{2,3}}-free, pairs with 2 common neighbors {frac:.3}", g.order()));
    }
    Ok(report.join("; "))
}

fn placement() -> Outcome {
    let mut count = 0;
    let mut edges = Vec::new();
    for n in (20..=60).step_by(10) {
        for seed in 0..10 {
            let h = generate_girth5_linear(n, 6, seed, None).map_err(|e| e.to_string())?;
            ensure(h.is_linear() && h.berge_girth().is_none_or(|g| g >= 5), || format!("n={n} seed={seed}: girth"))?;
            let g = place_bipartite(&h, 3, 3, PlacementRule::LowestLex).unwrap();
            ensure(!contains_complete_bipartite(&g, 2, 4).unwrap(), || format!("n={n} seed={seed}: K_{{2,4}} found"))?;
            count += 1;
            edges.push(h.edge_count());
        }
    }
    Ok(format!("{count} hypergraphs, {}..{} hyperedges, all placements K_{{2,4}}-free", edges.iter().min().unwrap(), edges.iter().max().unwrap()))
}

fn berge() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let patterns: [&[usize]; 6] = [&[1, 1], &[1, 2], &[1, 3], &[1, 4], &[2, 2], &[1, 1, 1]];
    let mut found = 0;
    for i in 0..200 {
        let n = rng.gen_range(4..=7);
        let r = rng.gen_range(2..=4.min(n));
        let m = rng.gen_range(1..=6usize.min(binomial(n as u64, r as u64) as usize));
        let mut set = BTreeSet::new();
        while set.len() < m {
            let mut e: Vec<usize> = rand::seq::index::sample(&mut rng, n, r).into_vec();
            e.sort_unstable();
            set.insert(e);
        }
        let edges: Vec<Vec<usize>> = set.into_iter().collect();
        let parts = patterns[rng.gen_range(0..patterns.len())];
        let (pk, pedges) = multipartite_edges(parts);
        let h = Hypergraph::new(n, r, &edges).unwrap();
        let query = BergeQuery { pattern: MultipartitePattern::new(parts.to_vec()).unwrap(), mode: BergeMode::Berge };
        let fast = contains_berge(&h, &query);
        let slow = naive_berge(n, &edges, pk, &pedges, false);
        ensure(fast == slow, || format!("instance {i}: {:?} in {edges:?}: {fast} vs {slow}", parts))?;
        found += usize::from(slow);
    }
    let girth = fano().berge_girth();
    ensure(girth == Some(3), || format!("Fano girth {girth:?}"))?;
    Ok(format!("200 instances agree ({found} contain the pattern); Fano girth 3"))
}

fn determinism() -> Outcome {
    let one = exhaustive_max(8, &k(2, 2), &k(1, 3), &opts().with_workers(1)).map_err(|e| e.to_string())?;
    let eight = exhaustive_max(8, &k(2, 2), &k(1, 3), &opts().with_workers(8)).map_err(|e| e.to_string())?;
    ensure(one.value == eight.value && one.certificates == eight.certificates, || {
        format!("1 worker {} {:?}, 8 workers {} {:?}", one.value, one.certificates, eight.value, eight.certificates)
    })?;
    let total: u128 = one.certificates.iter().map(|c| count_pattern(&graph6::decode(c).unwrap(), &k(2, 2))).sum();
    ensure(total == one.value * one.certificates.len() as u128, || "certificate counts differ".into())?;
    Ok(format!("value {} with {} identical certificates", one.value, one.certificates.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("star Turan exactness", star_turan, 60),
        ("exact K_{2,2} count with max degree 2", star_exact, 300),
        ("stability for (1,3,2,2)", stability, 1800),
        ("stars exact at n = 6", stars_exact, 60),
        ("counting oracle equivalence", counting_oracle, 300),
        ("bound soundness", bound_soundness, 600),
        ("Furedi witness", furedi, 60),
        ("placement into girth-5 hypergraphs", placement, 600),
        ("Berge machinery", berge, 300),
        ("determinism across worker counts", determinism, 600),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(limit) => Err(format!("{msg}; over the {limit}s limit")),
            other => other,
        };
        let (tag, msg) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        failed += usize::from(outcome.is_err());
        println!("criterion {:>2} {tag}: {name}: {msg} [{:.2}s, limit {limit}s]", i + 1, elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}

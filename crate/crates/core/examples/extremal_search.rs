//! Exact and heuristic maximisation of `N(H, G)` over `F`-free graphs.
//!
//!     cargo run --release --example extremal_search -- [h] [f] [n_max]

use tnt::graph6;
use tnt::search::{search, SearchOptions};
use tnt::MultipartitePattern;

fn main() -> tnt::Result<()> {
    let mut args = std::env::args().skip(1);
    let h: MultipartitePattern = args.next().as_deref().unwrap_or("2,2").parse()?;
    let f: MultipartitePattern = args.next().as_deref().unwrap_or("1,3").parse()?;
    let n_max: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(9);

    println!("maximum number of {h} in {f}-free graphs");
    for n in h.order().max(f.order())..=n_max {
        let exact = search(n, &h, &f, &SearchOptions::default())?;
        exact.verify_certificates()?;
        let greedy = search(n, &h, &f, &SearchOptions::heuristic(5_000, 1))?;
        let first = exact.certificates.first().map(String::as_str).unwrap_or("-");
        let edges = graph6::decode(first).map(|g| g.edge_count()).unwrap_or(0);
        println!(
            "n={n:>2}  exact {:>4} ({} extremal, e.g. {first} with {edges} edges, {} ms)  heuristic {:>4}",
            exact.value,
            exact.certificates.len(),
            exact.runtime_ms,
            greedy.value,
        );
    }
    Ok(())
}

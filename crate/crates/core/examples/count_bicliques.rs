//! Counts `K_{a,b}` copies and stars in a few small graphs.
//!
//!     cargo run --example count_bicliques

use tnt::counting::{count_bipartite, count_pattern, count_stars, neighbor_histogram};
use tnt::graph::named;
use tnt::{Graph, MultipartitePattern};

fn main() -> tnt::Result<()> {
    let hosts: Vec<(&str, Graph)> = vec![
        ("K_{3,3}", named::complete_bipartite(3, 3)),
        ("Petersen", named::petersen()),
        ("W_5", named::wheel(5)),
        ("K_6", Graph::complete(6)?),
    ];
    println!("{:<10} {:>6} {:>6} {:>6} {:>8} {:>8}", "host", "K1,2", "K2,2", "K2,3", "stars3", "K1,1,1");
    let triangle: MultipartitePattern = "1,1,1".parse()?;
    for (name, g) in &hosts {
        println!(
            "{:<10} {:>6} {:>6} {:>6} {:>8} {:>8}",
            name,
            count_bipartite(g, 1, 2)?,
            count_bipartite(g, 2, 2)?,
            count_bipartite(g, 2, 3)?,
            count_stars(g, 3)?,
            count_pattern(g, &triangle),
        );
    }

    let hist = neighbor_histogram(&named::petersen(), 2)?;
    println!("Petersen pairs by common neighbours: 0 -> {}, 1 -> {}", hist.get(0), hist.get(1));
    Ok(())
}

//! Random girth-5 linear hypergraphs, Berge detection, and placing a
//! `K_{a,b}` in every hyperedge.
//!
//!     cargo run --release --example berge_placement

use tnt::counting::count_bipartite;
use tnt::hypergraph::{
    check_placement_premises, contains_berge, fano, generate_girth5_linear, place_bipartite, BergeMode, BergeQuery,
    PlacementRule,
};
use tnt::subgraph::contains_complete_bipartite;
use tnt::MultipartitePattern;

fn main() -> tnt::Result<()> {
    let f = fano();
    let triangle = BergeQuery { pattern: "1,1,1".parse()?, mode: BergeMode::Berge };
    println!("Fano plane: girth {:?}, Berge triangle {}", f.berge_girth(), contains_berge(&f, &triangle));

    let c4 = BergeQuery { pattern: MultipartitePattern::bipartite(2, 2)?, mode: BergeMode::Berge };
    for n in [20, 30, 40] {
        let h = generate_girth5_linear(n, 6, 11, None)?;
        let g = place_bipartite(&h, 3, 3, PlacementRule::LowestLex)?;
        let shuffled = place_bipartite(&h, 3, 3, PlacementRule::SeededRandom(5))?;
        println!(
            "n={n}: {} hyperedges, girth {:?}, Berge C4 {}; K3,3 placed: {} copies, K2,4 {} / shuffled {}",
            h.edge_count(),
            h.berge_girth(),
            contains_berge(&h, &c4),
            count_bipartite(&g, 3, 3)?,
            contains_complete_bipartite(&g, 2, 4)?,
            contains_complete_bipartite(&shuffled, 2, 4)?,
        );
        let report = check_placement_premises(&h, 2, 2, 3, 3, BergeMode::Berge)?;
        println!("  premises {} (t0 = {}), placement free {}", report.premises_hold, report.t0, report.placed_free);
    }
    Ok(())
}

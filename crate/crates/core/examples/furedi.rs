//! Füredi graphs: `K_{2,t}`-free hosts with many pairs sharing exactly
//! `t - 1` neighbours.
//!
//!     cargo run --release --example furedi

use tnt::constructions::{build_furedi, FurediParams};
use tnt::counting::{count_bipartite, neighbor_histogram};
use tnt::subgraph::contains_complete_bipartite;

fn main() -> tnt::Result<()> {
    for (q, t) in [(5, 3), (7, 4), (9, 3), (9, 5), (11, 3), (13, 4)] {
        let g = build_furedi(FurediParams { q, t })?;
        let free = !contains_complete_bipartite(&g, 2, t)?;
        let hist = neighbor_histogram(&g, 2)?;
        println!(
            "q={q:<3} t={t}  n={:<4} e={:<5} K2,{t}-free {free}  pairs with {} common: {:.3}  K2,{}: {}",
            g.order(),
            g.edge_count(),
            t - 1,
            hist.fraction(t - 1),
            t - 1,
            count_bipartite(&g, 2, t - 1)?,
        );
    }
    Ok(())
}

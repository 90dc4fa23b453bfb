//! graph6 and edge-list round trips, and canonical forms.
//!
//!     cargo run --example graph6_io -- [graph6]

use tnt::canon::{are_isomorphic, canonical_form, canonical_graph};
use tnt::graph::named;
use tnt::{graph6, Graph};

fn main() -> tnt::Result<()> {
    let code = std::env::args().nth(1).unwrap_or_else(|| graph6::encode(&named::petersen()));
    let g = graph6::decode(&code)?;
    println!("{code}: {} vertices, {} edges", g.order(), g.edge_count());
    println!("canonical form {}", canonical_form(&g).to_hex());
    println!("canonical graph6 {}", graph6::encode(&canonical_graph(&g)));

    let relabeled = g.permuted(&(0..g.order()).rev().collect::<Vec<_>>())?;
    println!("reversed labels {} isomorphic {}", graph6::encode(&relabeled), are_isomorphic(&g, &relabeled));

    let text = g.to_edge_list();
    let back = Graph::parse_edge_list(&text)?;
    println!("edge list round trip {}", back == g);
    print!("{text}");

    let big = Graph::complete(64)?;
    println!("K_64 encodes to {} bytes and decodes equal: {}", graph6::encode(&big).len(), graph6::decode(&graph6::encode(&big))? == big);
    Ok(())
}

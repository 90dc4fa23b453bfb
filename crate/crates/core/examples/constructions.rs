//! Builds every construction family from its JSON spec and checks the
//! freeness it promises.
//!
//!     cargo run --example constructions

use tnt::constructions::{build, ConstructionSpec};
use tnt::counting::count_bipartite;
use tnt::subgraph::contains_pattern;

const SPECS: &[&str] = &[
    r#"{"family":"complete_bipartite","params":[3,4]}"#,
    r#"{"family":"overline_split","params":[3,9]}"#,
    r#"{"family":"split_plus_girth5","params":[2,4,12],"seed":3}"#,
    r#"{"family":"disjoint_bicliques","params":[3,10]}"#,
    r#"{"family":"overline_plus_disjoint_bicliques","params":[2,2,2,11]}"#,
    r#"{"family":"ka_join_blocks","params":[2,4,12]}"#,
    r#"{"family":"ka_join_blocks_shifted","params":[3,5,6,12]}"#,
    r#"{"family":"furedi","params":[7,4]}"#,
    r#"{"family":"almost_regular_girth5","params":[20,3],"seed":1}"#,
    r#"{"family":"random_deletion","params":[20,2,2,2,3,3],"seed":7}"#,
    r#"{"family":"complete_multipartite","params":[2,2,3]}"#,
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in SPECS {
        let spec: ConstructionSpec = serde_json::from_str(text)?;
        let g = build(&spec)?;
        let freeness = match spec.freeness_claim() {
            Some(f) => format!("{f}-free: {}", !contains_pattern(&g, &f)),
            None => "no freeness claim".into(),
        };
        println!(
            "{:<36} n={:<3} e={:<4} K2,2={:<6} {freeness}",
            serde_json::to_string(&spec.family)?,
            g.order(),
            g.edge_count(),
            count_bipartite(&g, 2, 2)?,
        );
    }
    Ok(())
}

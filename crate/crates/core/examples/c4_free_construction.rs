//! Berge-C4-free hypergraphs from projective plane incidence graphs.

use berge::construct::{c4_construction, check_claims};
use berge::detect::DetectOptions;
use berge::projective::projective_incidence_graph;

fn main() -> berge::Result<()> {
    let opts = DetectOptions::default();
    for q in [2, 3] {
        let base = projective_incidence_graph(q)?;
        for (i, j) in [(1, 1), (1, 2), (2, 2), (3, 3)] {
            let c = c4_construction(&base, i, j)?;
            let ok = check_claims(&c, &opts)?.all_ok();
            println!(
                "q = {q}, (i, j) = ({i}, {j}): {} vertices, {} hyperedges, {}-uniform, C4-free: {ok}",
                c.hypergraph.n(),
                c.hypergraph.len(),
                c.claims.uniform
            );
        }
    }
    Ok(())
}

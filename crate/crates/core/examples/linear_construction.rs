//! The r-uniform linear construction on a small grid of sizes.

use berge::construct::{check_claims, linear_construction, linear_construction_count};
use berge::detect::DetectOptions;
use berge::invariants::clique_number;

fn main() -> berge::Result<()> {
    println!("{:>4} {:>2} {:>6} {:>7} {:>6}", "n", "r", "edges", "formula", "omega");
    for n in [24, 48, 96] {
        for r in 2..=5 {
            if n < 2 * r {
                continue;
            }
            let c = linear_construction(n, r)?;
            let h = &c.hypergraph;
            let omega = clique_number(&h.shadow());
            println!("{n:>4} {r:>2} {:>6} {:>7} {omega:>6}", h.len(), linear_construction_count(n, r));
            assert!(h.is_linear() && omega <= r);
        }
    }
    let c = linear_construction(48, 4)?;
    let check = check_claims(&c, &DetectOptions::default())?;
    println!("linear(48, 4) claims verified: {}", check.all_ok());
    Ok(())
}

//! t-admissible partitions and the contracted chromatic numbers behind the
//! partition lower bound.

use berge::bounds::{enumerate_admissible_partitions, min_contracted_chromatic};
use berge::invariants::chromatic_number;
use berge::patterns::named_pattern;

fn main() -> berge::Result<()> {
    for name in ["K211", "C5", "P3", "Petersen"] {
        let f = named_pattern(name)?;
        println!("{name}:");
        for t in 1..f.n() {
            let parts = enumerate_admissible_partitions(&f, t)?;
            let c = min_contracted_chromatic(&f, t)?;
            let bound = if c >= 3 { ((c - 1) * t + 1).to_string() } else { "-".into() };
            println!("  t = {t}: {:>4} partitions, c_t = {c}, bound {bound}", parts.len());
            if parts.len() <= 3 {
                for p in &parts {
                    let chi = chromatic_number(&f.contract(p)?);
                    println!("    {:?} -> chi {chi}", p.blocks());
                }
            }
        }
    }
    Ok(())
}

//! Small two-colour Ramsey numbers by exhaustive search.

use berge::invariants::{ramsey_number, RamseyOptions, RamseyValue};
use berge::patterns::named_pattern;

fn main() -> berge::Result<()> {
    let opts = RamseyOptions::default();
    for (a, b) in [("P3", "P3"), ("K3", "P3"), ("K3", "K3"), ("C4", "C4"), ("K211", "C4")] {
        let res = ramsey_number(&named_pattern(a)?, &named_pattern(b)?, &opts)?;
        let value = match res.value {
            RamseyValue::Exact(n) => n.to_string(),
            RamseyValue::GreaterThan(n) => format!("> {n}"),
        };
        let nodes: u64 = res.levels.iter().map(|l| l.nodes).sum();
        println!("R({a}, {b}) = {value:<4} ({nodes} search nodes)");
    }
    Ok(())
}

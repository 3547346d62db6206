//! Exact extremal numbers at tiny n, and the sandwich between the
//! generalized Turan number, ex_r and the graph Turan number.

use berge::oracle::{exact_ex_r, exact_generalized_turan, exact_turan, sandwich_check, Caps};
use berge::Graph;

fn main() -> berge::Result<()> {
    let caps = Caps::default();
    let k3 = Graph::complete(3);
    let k4 = Graph::complete(4);
    for n in 3..=7 {
        let hyper = exact_ex_r(n, 3, &k3, false, &caps)?;
        let linear = exact_ex_r(n, 3, &k3, true, &caps)?;
        let graph = exact_turan(n, &k3, &caps)?;
        println!(
            "n = {n}: ex_3 = {:>2}  linear = {:>2}  ex(n, K3) = {:>2}  ({} nodes)",
            hyper.value, linear.value, graph.value, hyper.nodes_explored
        );
    }
    println!("ex(5, K3, K4) = {}", exact_generalized_turan(5, 3, &k4, &caps)?.value);
    for n in 3..=5 {
        for f in [&k3, &k4] {
            let s = sandwich_check(n, 3, f, &caps)?;
            println!("n = {n}, F = K{}: {:?} holds = {}", f.n(), s.triple(), s.holds);
        }
    }
    match exact_ex_r(12, 3, &k3, false, &caps) {
        Err(e) => println!("n = 12: {e}"),
        Ok(_) => unreachable!("n = 12 is above the default cap"),
    }
    Ok(())
}

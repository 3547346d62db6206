//! Closed-form threshold bounds for blowups compared against the generic
//! partition bound.

use berge::bounds::{corollary_bounds, CorollaryKind};
use berge::Graph;

fn main() -> berge::Result<()> {
    let kinds = [
        CorollaryKind::CliqueBlowup { factors: vec![2, 1, 1] },
        CorollaryKind::CliqueBlowup { factors: vec![2, 2, 2] },
        CorollaryKind::CliqueBlowup { factors: vec![1, 1, 1, 2] },
        CorollaryKind::ConnectedBlowup { base: Graph::path(3), factors: vec![2, 2, 3] },
        CorollaryKind::ConnectedBlowup { base: Graph::complete(3), factors: vec![2, 2, 3] },
    ];
    for kind in &kinds {
        let rep = corollary_bounds(kind)?;
        println!(
            "{kind:?}: t = {}, closed form {}, generic {}, c_t = {}, certified {}, match {}",
            rep.t,
            rep.closed_form,
            rep.generic,
            rep.c_t,
            rep.certified,
            rep.matches()
        );
    }
    Ok(())
}

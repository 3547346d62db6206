//! Deciding Berge containment and checking the certificate it returns.

use berge::detect::{contains_berge, count_f_copies_in_shadow, verify_certificate};
use berge::{Graph, Hypergraph};

fn main() -> berge::Result<()> {
    let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]])?;
    let k3 = Graph::complete(3);
    let cert = contains_berge(&h, &k3)?.expect("three triples on four vertices form a Berge triangle");
    println!("certificate: {}", serde_json::to_string(&cert)?);
    println!("verifies: {}", verify_certificate(&h, &k3, &cert));

    let single = Hypergraph::new(3, vec![vec![0, 1, 2]])?;
    println!("one triple contains a Berge triangle: {}", contains_berge(&single, &k3)?.is_some());
    println!("triangles in its shadow: {}", count_f_copies_in_shadow(&single, &k3));

    let two = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]])?;
    println!("paths P3 in shadow of {{012}},{{234}}: {}", count_f_copies_in_shadow(&two, &Graph::path(3)));
    Ok(())
}

//! Uniformity threshold of the triangle: lower bound from blowing up the
//! linear construction, upper bound from an exhaustive Ramsey search.

use berge::bounds::threshold_report;
use berge::invariants::RamseyOptions;
use berge::Graph;

fn main() -> berge::Result<()> {
    let report = threshold_report(&Graph::complete(3), Some(&RamseyOptions::default()))?;
    print!("{}", report.to_table());
    for orbit in report.ramsey_orbits.iter().flatten() {
        println!("edge {:?} (orbit of {}): R = {:?}", orbit.edge, orbit.orbit_size, orbit.r);
    }
    let upper = report.final_upper.as_ref().map(|b| b.value);
    assert_eq!((report.final_lower.value, upper), (5, Some(5)));
    println!("thres(K3) = 5");
    Ok(())
}

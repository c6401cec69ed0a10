//! Lengths grow linearly under repeated Dehn twists, with slope the twist
//! length times how often the probe crosses the twisted curve.

use nonorientable::hyperbolic::{twist_flow_asymptotics, FnPoint};
use nonorientable::pants::standard;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let point = FnPoint::new(standard::loop_with_boundary(true), &[], &[(1.3, 0.2), (2.0, 0.0)]);
    for (probe, crossings) in [("t0", 1.0), ("t0.b0.t0", 2.0), ("b0", 0.0)] {
        let fit = twist_flow_asymptotics(&point, "e0", &probe.parse()?, 50)?;
        println!(
            "{probe:<10} slope {:.5}, expected {:.5}",
            fit.slope,
            crossings * fit.ell
        );
    }
    Ok(())
}
